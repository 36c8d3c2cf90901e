/**
 * @file constructions.hpp
 * @brief Direct products, quotients, and graded homomorphisms.
 *
 * Products are componentwise over a shared grading monoid. Quotient
 * cosets are labeled by their minimum element, so coset 0 is the ideal
 * itself and serialization is deterministic. The induced quotient grading
 * is re-validated rather than assumed; failures surface as
 * InducedGradingInvalid.
 */

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gnr/core.hpp"
#include "gnr/grading.hpp"
#include "gnr/ideals.hpp"

namespace gnr {

/// A graded near-ring homomorphism: additive, multiplicative, and sends
/// each source part into the matching target part. Surjectivity is a
/// computed flag, not a requirement.
struct GradedHom {
    GradedNearRing source;
    GradedNearRing target;
    std::vector<int> map;  // length source.order()
    bool surjective = false;

    int operator()(int x) const { return map[x]; }

    SubSet image(SubSet s) const {
        SubSet out;
        for (int x = 0; x < source.order(); ++x)
            if (s.contains(x)) out.add(map[x]);
        return out;
    }

    SubSet preimage(SubSet s) const {
        SubSet out;
        for (int x = 0; x < source.order(); ++x)
            if (s.contains(map[x])) out.add(x);
        return out;
    }

    SubSet kernel() const { return preimage(SubSet::single(target.ring.zero)); }
};

/// Checks the hom laws for a raw map and wraps it. Throws MonoidMismatch
/// when the grading monoids differ and AxiomError when a law fails.
inline GradedHom validate_hom(const GradedNearRing& a, const GradedNearRing& b,
                              const std::vector<int>& map) {
    if (a.grading.monoid != b.grading.monoid)
        throw Error(ErrorKind::MonoidMismatch,
                    "homomorphisms require a shared grading monoid");
    if (static_cast<int>(map.size()) != a.order())
        throw Error(ErrorKind::AxiomError, "map length does not match source order");
    for (int v : map)
        if (v < 0 || v >= b.order())
            throw Error(ErrorKind::AxiomError, "map value out of target range");
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y) {
            if (map[a.ring.add(x, y)] != b.ring.add(map[x], map[y]))
                throw Error(ErrorKind::AxiomError,
                            "map is not additive at (" + std::to_string(x) + "," +
                                std::to_string(y) + ")",
                            {x, y, -1});
            if (map[a.ring.mul(x, y)] != b.ring.mul(map[x], map[y]))
                throw Error(ErrorKind::AxiomError,
                            "map is not multiplicative at (" + std::to_string(x) +
                                "," + std::to_string(y) + ")",
                            {x, y, -1});
        }
    GradedHom h{a, b, map, false};
    for (int g = 0; g < a.degrees(); ++g)
        if (!h.image(a.grading.parts[g]).subset_of(b.grading.parts[g]))
            throw Error(ErrorKind::AxiomError,
                        "map does not respect degree " + std::to_string(g),
                        {g, -1, -1});
    h.surjective = h.image(a.ring.carrier()) == b.ring.carrier();
    return h;
}

/// Componentwise direct product over a shared monoid; element (x, y) gets
/// index x * |B| + y and part[s] = partsA[s] x partsB[s].
inline GradedNearRing direct_product(const GradedNearRing& a,
                                     const GradedNearRing& b,
                                     int max_order = kMaxOrder) {
    if (a.grading.monoid != b.grading.monoid)
        throw Error(ErrorKind::MonoidMismatch,
                    "direct product requires a shared grading monoid");
    const int na = a.order(), nb = b.order();
    if (na * nb > max_order)
        throw Error(ErrorKind::BoundExceeded,
                    "product order " + std::to_string(na * nb) + " exceeds " +
                        std::to_string(max_order));
    const int n = na * nb;
    auto pack = [nb](int x, int y) { return x * nb + y; };
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2) {
                    add[pack(x1, y1)][pack(x2, y2)] =
                        pack(a.ring.add(x1, x2), b.ring.add(y1, y2));
                    mul[pack(x1, y1)][pack(x2, y2)] =
                        pack(a.ring.mul(x1, x2), b.ring.mul(y1, y2));
                }
    FiniteNearRing ring =
        validate_nearring(add, mul, pack(a.ring.zero, b.ring.zero));
    std::vector<SubSet> parts(a.degrees());
    for (int g = 0; g < a.degrees(); ++g)
        for (int x = 0; x < na; ++x)
            if (a.grading.parts[g].contains(x))
                for (int y = 0; y < nb; ++y)
                    if (b.grading.parts[g].contains(y)) parts[g].add(pack(x, y));
    return validate_grading(ring, a.grading.monoid, parts);
}

/// Embeds S_A x S_B inside the product carrier (index x * |B| + y).
inline SubSet embed_product(SubSet sa, int order_a, SubSet sb, int order_b) {
    SubSet out;
    for (int x = 0; x < order_a; ++x)
        if (sa.contains(x))
            for (int y = 0; y < order_b; ++y)
                if (sb.contains(y)) out.add(x * order_b + y);
    return out;
}

struct Quotient {
    GradedNearRing structure;
    GradedHom projection;
    std::vector<int> coset_of;  // source element -> quotient element
};

/// Quotient by a graded ideal: coset tables, induced grading, canonical
/// projection. Representative independence of both tables is verified
/// over every source pair, and ker(projection) must equal the ideal.
inline Quotient quotient(const GradedNearRing& g, const IdealSet& ideal) {
    if (!ideal.is_ideal || !ideal.is_graded)
        throw Error(ErrorKind::NotGradedIdeal, "quotient modulus");
    const FiniteNearRing& n = g.ring;
    // Coset of x = {x + i}; normality makes left and right cosets agree.
    std::vector<int> label(n.order, -1);  // minimum element of x's coset
    for (int x = 0; x < n.order; ++x) {
        int least = x;
        for (int i = 0; i < n.order; ++i)
            if (ideal.bits.contains(i)) least = std::min(least, n.add(x, i));
        label[x] = least;
    }
    std::vector<int> reps;  // ascending labels; index = quotient element
    for (int x = 0; x < n.order; ++x)
        if (label[x] == x) reps.push_back(x);
    const int q = static_cast<int>(reps.size());
    std::vector<int> coset_of(n.order);
    for (int x = 0; x < n.order; ++x) {
        int idx = static_cast<int>(
            std::lower_bound(reps.begin(), reps.end(), label[x]) - reps.begin());
        coset_of[x] = idx;
    }
    if (q * ideal.bits.count() != n.order)
        throw std::logic_error("quotient order law |N/I| * |I| = |N| violated");

    std::vector<std::vector<int>> add(q, std::vector<int>(q));
    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            add[i][j] = coset_of[n.add(reps[i], reps[j])];
            mul[i][j] = coset_of[n.mul(reps[i], reps[j])];
        }
    // Representative independence over all source pairs.
    for (int x = 0; x < n.order; ++x)
        for (int y = 0; y < n.order; ++y) {
            if (coset_of[n.add(x, y)] != add[coset_of[x]][coset_of[y]])
                throw std::logic_error("quotient addition not well-defined");
            if (coset_of[n.mul(x, y)] != mul[coset_of[x]][coset_of[y]])
                throw std::logic_error("quotient multiplication not well-defined");
        }
    FiniteNearRing qring = validate_nearring(add, mul, coset_of[n.zero]);

    std::vector<SubSet> parts(g.degrees());
    for (int d = 0; d < g.degrees(); ++d)
        for (int x = 0; x < n.order; ++x)
            if (g.grading.parts[d].contains(x)) parts[d].add(coset_of[x]);
    GradedNearRing qg;
    try {
        qg = validate_grading(qring, g.grading.monoid, parts);
    } catch (const Error& e) {
        throw Error(ErrorKind::InducedGradingInvalid,
                    std::string("image family fails grading validation: ") +
                        e.what());
    }

    GradedHom pi = validate_hom(g, qg, coset_of);
    if (!pi.surjective || pi.kernel() != ideal.bits)
        throw std::logic_error("canonical projection has the wrong kernel");
    return Quotient{std::move(qg), std::move(pi), std::move(coset_of)};
}

/// Image of an ideal under a surjective hom. When the ideal contains the
/// kernel the raw image is itself an ideal, and that is asserted; other
/// inputs fall back to the ideal closure of the image, with the flag
/// reporting which route was taken.
struct ImageIdeal {
    IdealSet ideal;
    bool closure_applied = false;
};

inline ImageIdeal hom_image_ideal(const GradedHom& h, const IdealSet& p) {
    if (!h.surjective)
        throw Error(ErrorKind::NotSurjective, "image of an ideal needs onto map");
    detail::require_ideal(p, "P");
    const SubSet raw = h.image(p.bits);
    if (h.kernel().subset_of(p.bits)) {
        IdealSet out = analyze(h.target, raw);
        if (!out.is_ideal)
            throw std::logic_error(
                "image of a kernel-containing ideal under a surjection must be "
                "an ideal");
        return {out, false};
    }
    IdealSet closed = ideal_closure(h.target, raw);
    return {closed, closed.bits != raw};
}

/// Preimage of a target ideal; always an ideal containing the kernel.
inline IdealSet hom_preimage_ideal(const GradedHom& h, const IdealSet& q) {
    detail::require_ideal(q, "Q");
    const SubSet raw = h.preimage(q.bits);
    if (!h.kernel().subset_of(raw))
        throw std::logic_error("preimage lost the kernel");
    IdealSet out = analyze(h.source, raw);
    if (!out.is_ideal)
        throw std::logic_error("preimage of an ideal must be an ideal");
    return out;
}

/// Default cap for surjective-hom search (map space explodes past this).
inline constexpr int kHomEnumMaxOrder = 16;

/// All surjective graded homomorphisms A -> B, in lexicographic order of
/// the full map array. The search assigns images to a generating set of
/// (A, +), extends by additivity with consistency pruning, then filters
/// by the remaining laws. Returns empty when |B| > |A|.
inline std::vector<GradedHom> enumerate_surjective_homs(
    const GradedNearRing& a, const GradedNearRing& b,
    int max_order = kHomEnumMaxOrder) {
    if (a.grading.monoid != b.grading.monoid)
        throw Error(ErrorKind::MonoidMismatch,
                    "homomorphisms require a shared grading monoid");
    if (a.order() > max_order)
        throw Error(ErrorKind::BoundExceeded,
                    "hom enumeration capped at source order " +
                        std::to_string(max_order));
    if (b.order() > a.order()) return {};

    // Greedy additive generating set.
    std::vector<int> gens;
    SubSet closed = SubSet::single(a.ring.zero);
    for (int x = 0; x < a.order(); ++x)
        if (!closed.contains(x)) {
            gens.push_back(x);
            SubSet ext = closed;
            ext.add(x);
            closed = subgroup_closure(ext, a.ring);
        }

    std::vector<GradedHom> found;
    std::vector<int> images(gens.size(), 0);
    auto extend_and_check = [&]() {
        std::vector<int> map(a.order(), -1);
        map[a.ring.zero] = b.ring.zero;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (map[gens[i]] >= 0 && map[gens[i]] != images[i]) return;
            map[gens[i]] = images[i];
        }
        // Propagate additivity to a fixpoint, pruning on conflicts.
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < a.order(); ++x) {
                if (map[x] < 0) continue;
                for (int y = 0; y < a.order(); ++y) {
                    if (map[y] < 0) continue;
                    const int s = a.ring.add(x, y);
                    const int v = b.ring.add(map[x], map[y]);
                    if (map[s] < 0) {
                        map[s] = v;
                        grew = true;
                    } else if (map[s] != v) {
                        return;
                    }
                }
            }
        }
        for (int x = 0; x < a.order(); ++x)
            if (map[x] < 0) return;  // generators failed to generate
        try {
            GradedHom h = validate_hom(a, b, map);
            if (h.surjective) found.push_back(std::move(h));
        } catch (const Error&) {
        }
    };

    while (true) {
        extend_and_check();
        int i = static_cast<int>(gens.size()) - 1;
        while (i >= 0 && ++images[i] == b.order()) {
            images[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(found.begin(), found.end(),
              [](const GradedHom& x, const GradedHom& y) { return x.map < y.map; });
    return found;
}

}  // namespace gnr
