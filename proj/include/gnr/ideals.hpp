/**
 * @file ideals.hpp
 * @brief Ideal generation, arithmetic and enumeration.
 *
 * Ideals are two-sided in the right near-ring sense: a normal additive
 * subgroup I with n(m+i) - nm in I and i*n in I for all carrier n, m and
 * i in I. The product IJ of two ideals is the additive subgroup generated
 * by the pairwise element products; an alternative reading (the ideal
 * generated by those products) is available through ProductMode so
 * sweeps can be rerun under both definitions. P^2 cap N is computed
 * literally even though the intersection never cuts anything.
 */

#pragma once

#include <set>
#include <vector>

#include "gnr/core.hpp"
#include "gnr/grading.hpp"
#include "gnr/nearring.hpp"

namespace gnr {

/// A subset with its computed structural flags. Flags describe the bits
/// as they are; nothing is assumed from context.
struct IdealSet {
    SubSet bits;
    bool is_subgroup = false;
    bool is_normal = false;
    bool is_ideal = false;
    bool is_graded = false;

    bool operator==(const IdealSet&) const = default;
    bool operator<(const IdealSet& o) const { return bits < o.bits; }
};

/// True iff S satisfies all two-sided ideal conditions. Assumes nothing.
inline bool is_ideal(SubSet s, const FiniteNearRing& n) {
    if (!is_subgroup(s, n)) return false;
    if (!is_normal_subgroup(s, n, /*assume_subgroup=*/true)) return false;
    for (int e = 0; e < n.order; ++e) {
        if (!s.contains(e)) continue;
        for (int x = 0; x < n.order; ++x) {
            if (!s.contains(n.mul(e, x))) return false;  // I*N in I
            for (int m = 0; m < n.order; ++m)            // n(m+i) - nm in I
                if (!s.contains(n.sub(n.mul(x, n.add(m, e)), n.mul(x, m))))
                    return false;
        }
    }
    return true;
}

/// Computes all structural flags for a subset.
inline IdealSet analyze(const GradedNearRing& g, SubSet s) {
    IdealSet out;
    out.bits = s;
    out.is_subgroup = is_subgroup(s, g.ring);
    out.is_normal =
        out.is_subgroup && is_normal_subgroup(s, g.ring, /*assume_subgroup=*/true);
    out.is_ideal = out.is_normal && is_ideal(s, g.ring);
    out.is_graded = g.is_graded_subset(s);
    return out;
}

/// Smallest ideal containing S: fixpoint under subgroup closure,
/// conjugation, n(m+i) - nm, and right multiplication.
inline SubSet ideal_closure_set(SubSet s, const FiniteNearRing& n) {
    SubSet out = SubSet::single(n.zero);
    std::vector<int> work{n.zero};
    auto visit = [&](int v) {
        if (!out.contains(v)) {
            out.add(v);
            work.push_back(v);
        }
    };
    for (int x = 0; x < n.order; ++x)
        if (s.contains(x)) visit(x);
    while (!work.empty()) {
        const int t = work.back();
        work.pop_back();
        visit(n.neg[t]);
        for (int a = 0; a < n.order; ++a) {
            if (out.contains(a)) {
                visit(n.add(a, t));
                visit(n.add(t, a));
            }
            visit(n.conj(a, t));
            visit(n.mul(t, a));
            for (int m = 0; m < n.order; ++m)
                visit(n.sub(n.mul(a, n.add(m, t)), n.mul(a, m)));
        }
    }
    return out;
}

inline IdealSet ideal_closure(const GradedNearRing& g, SubSet s) {
    IdealSet out;
    out.bits = ideal_closure_set(s, g.ring);
    out.is_subgroup = out.is_normal = out.is_ideal = true;
    out.is_graded = g.is_graded_subset(out.bits);
    return out;
}

/// Principal ideal <x>.
inline IdealSet principal_ideal(const GradedNearRing& g, int x) {
    return ideal_closure(g, SubSet::single(x));
}

namespace detail {
inline void require_ideal(const IdealSet& i, const char* role) {
    if (!i.is_ideal)
        throw Error(ErrorKind::NotAnIdealInput,
                    std::string(role) + " is not flagged as an ideal");
}
}  // namespace detail

/// Sum of two ideals. For ideal inputs the subgroup generated by the
/// union already satisfies every ideal condition; this is recomputed via
/// the full ideal closure and cross-checked on every call.
inline IdealSet ideal_sum(const GradedNearRing& g, const IdealSet& i,
                          const IdealSet& j) {
    detail::require_ideal(i, "left summand");
    detail::require_ideal(j, "right summand");
    const SubSet by_subgroup = subgroup_closure(i.bits | j.bits, g.ring);
    const SubSet by_ideal = ideal_closure_set(i.bits | j.bits, g.ring);
    if (by_subgroup != by_ideal)
        throw std::logic_error(
            "ideal_sum: subgroup closure and ideal closure of an ideal union "
            "disagree");
    IdealSet out;
    out.bits = by_ideal;
    out.is_subgroup = out.is_normal = out.is_ideal = true;
    out.is_graded = g.is_graded_subset(out.bits);
    return out;
}

/// Which closure the ideal product takes over the pairwise products.
enum class ProductMode {
    subgroup,  // additive subgroup generated by {i*j}
    ideal,     // ideal generated by {i*j}
};

/// Raw pairwise product set {i*j : i in I, j in J}, no closure.
inline SubSet product_set(SubSet i, SubSet j, const FiniteNearRing& n) {
    SubSet out;
    for (int a = 0; a < n.order; ++a) {
        if (!i.contains(a)) continue;
        for (int b = 0; b < n.order; ++b)
            if (j.contains(b)) out.add(n.mul(a, b));
    }
    return out;
}

/// Ideal product IJ. Not guaranteed to be an ideal in subgroup mode;
/// callers that care run analyze() on the result.
inline SubSet ideal_product(const GradedNearRing& g, SubSet i, SubSet j,
                            ProductMode mode = ProductMode::subgroup) {
    const SubSet prods = product_set(i, j, g.ring);
    return mode == ProductMode::subgroup ? subgroup_closure(prods, g.ring)
                                         : ideal_closure_set(prods, g.ring);
}

inline SubSet ideal_product(const GradedNearRing& g, const IdealSet& i,
                            const IdealSet& j,
                            ProductMode mode = ProductMode::subgroup) {
    return ideal_product(g, i.bits, j.bits, mode);
}

/// P^2 cap N. The intersection with the carrier is a literal no-op kept
/// for fidelity to the definition this implements.
inline SubSet ideal_square_cap(const GradedNearRing& g, const IdealSet& p,
                               ProductMode mode = ProductMode::subgroup) {
    detail::require_ideal(p, "P");
    return ideal_product(g, p.bits, p.bits, mode) & g.ring.carrier();
}

/// Residual (A : B) = {n : n*b in A for every b in B}.
inline SubSet residual(const GradedNearRing& g, SubSet a, SubSet b) {
    SubSet out;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int e = 0; e < g.order() && ok; ++e)
            if (b.contains(e) && !a.contains(g.ring.mul(x, e))) ok = false;
        if (ok) out.add(x);
    }
    return out;
}

/// All ideals (or all graded ideals), ascending by bitmask. Seeds with
/// {0} and every principal ideal, then closes the collection under
/// pairwise sum. Every ideal is the sum of the principal ideals of its
/// elements, so the fixpoint is complete; the test suite pins this
/// against the exhaustive-subset oracle for small orders.
inline std::vector<IdealSet> enumerate_ideals(const GradedNearRing& g,
                                              bool graded_only) {
    std::set<std::uint64_t> masks;
    masks.insert(SubSet::single(g.ring.zero).bits);
    for (int x = 0; x < g.order(); ++x)
        masks.insert(principal_ideal(g, x).bits.bits);

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> snapshot(masks.begin(), masks.end());
        for (auto a : snapshot)
            for (auto b : snapshot) {
                const SubSet s = subgroup_closure(SubSet(a | b), g.ring);
                if (masks.insert(s.bits).second) grew = true;
            }
    }

    std::vector<IdealSet> out;
    for (auto m : masks) {
        IdealSet is = analyze(g, SubSet(m));
        if (!is.is_ideal)
            throw std::logic_error("enumerate_ideals produced a non-ideal mask");
        if (!graded_only || is.is_graded) out.push_back(is);
    }
    return out;
}

}  // namespace gnr
