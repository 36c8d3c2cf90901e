/**
 * @file grading.hpp
 * @brief Monoid gradings of finite near-rings.
 *
 * A grading assigns to every monoid element s a normal additive subgroup
 * part[s] such that the carrier is the internal direct sum of the parts
 * and part[s] * part[t] lands in part[s*t]. Because addition may be
 * non-abelian, the decomposition sum is taken in a fixed order: monoid
 * elements by ascending index. Direct-sum validation enumerates every
 * tuple drawn from the parts rather than counting orders.
 */

#pragma once

#include <algorithm>
#include <vector>

#include "gnr/core.hpp"
#include "gnr/monoid.hpp"
#include "gnr/nearring.hpp"

namespace gnr {

struct Grading {
    FiniteMonoid monoid;
    std::vector<SubSet> parts;  // indexed by monoid element

    bool operator==(const Grading&) const = default;
};

/// A validated graded near-ring with the decomposition table precomputed:
/// component_of[x][s] is the part-s component of x, and summing the row in
/// ascending s order reassembles x.
struct GradedNearRing {
    FiniteNearRing ring;
    Grading grading;
    std::vector<std::vector<int>> component_of;

    int order() const { return ring.order; }
    int degrees() const { return grading.monoid.order; }

    /// The component of x in the part indexed by monoid element s.
    int component(int x, int s) const { return component_of[x][s]; }

    /// True iff every element of S has all homogeneous components in S.
    bool is_graded_subset(SubSet s) const {
        for (int x = 0; x < order(); ++x) {
            if (!s.contains(x)) continue;
            for (int g = 0; g < degrees(); ++g)
                if (!s.contains(component_of[x][g])) return false;
        }
        return true;
    }

    bool operator==(const GradedNearRing&) const = default;
};

namespace detail {

/// Walks all tuples (one element from each part, ascending within a part),
/// reporting each tuple's ordered sum. Returns false if the callback stops
/// the walk.
template <typename F>
inline void for_each_decomposition(const FiniteNearRing& ring,
                                   const std::vector<SubSet>& parts, F&& fn) {
    const int k = static_cast<int>(parts.size());
    std::vector<std::vector<int>> elems(k);
    for (int g = 0; g < k; ++g) elems[g] = parts[g].elements(ring.order);
    std::vector<int> idx(k, 0);
    while (true) {
        int sum = ring.zero;
        for (int g = 0; g < k; ++g) sum = ring.add(sum, elems[g][idx[g]]);
        if (!fn(sum, elems, idx)) return;
        int g = k - 1;
        while (g >= 0 && ++idx[g] == static_cast<int>(elems[g].size())) {
            idx[g] = 0;
            --g;
        }
        if (g < 0) return;
    }
}

}  // namespace detail

/// Validates parts as a grading of the ring by the monoid and precomputes
/// the decomposition table. Every monoid element must be assigned a part
/// (the zero subgroup is fine and common).
inline GradedNearRing validate_grading(const FiniteNearRing& ring,
                                       const FiniteMonoid& monoid,
                                       const std::vector<SubSet>& parts) {
    if (static_cast<int>(parts.size()) != monoid.order)
        throw Error(ErrorKind::NotDirectSum,
                    "expected one part per monoid element, got " +
                        std::to_string(parts.size()));

    for (int g = 0; g < monoid.order; ++g) {
        if (!is_subgroup(parts[g], ring) ||
            !is_normal_subgroup(parts[g], ring, /*assume_subgroup=*/true))
            throw Error(ErrorKind::NotNormalSubgroup,
                        "part " + std::to_string(g) +
                            " is not a normal additive subgroup",
                        {g, -1, -1});
    }

    // Internal direct sum: every carrier element must be the ordered sum of
    // exactly one tuple. The tuple count already equals the carrier order
    // when this holds, so witness search never blows up: with fewer tuples
    // some element is missed, with more a repeated sum appears within the
    // first order+1 tuples.
    long long tuple_count = 1;
    for (int g = 0; g < monoid.order; ++g) tuple_count *= parts[g].count();

    std::vector<std::vector<int>> decomp(ring.order);
    if (tuple_count <= ring.order) {
        std::vector<int> hits(ring.order, 0);
        detail::for_each_decomposition(
            ring, parts, [&](int sum, const auto& elems, const auto& idx) {
                if (hits[sum]++ == 0) {
                    decomp[sum].resize(monoid.order);
                    for (int g = 0; g < monoid.order; ++g)
                        decomp[sum][g] = elems[g][idx[g]];
                }
                return true;
            });
        for (int x = 0; x < ring.order; ++x)
            if (hits[x] != 1)
                throw Error(ErrorKind::NotDirectSum,
                            "element " + std::to_string(x) + " has " +
                                std::to_string(hits[x]) + " decompositions",
                            {x, -1, -1});
    } else {
        // Pigeonhole: a duplicate sum exists among the first order+1 tuples.
        std::vector<int> hits(ring.order, 0);
        int duplicated = -1;
        detail::for_each_decomposition(
            ring, parts, [&](int sum, const auto&, const auto&) {
                if (++hits[sum] > 1) {
                    duplicated = sum;
                    return false;
                }
                return true;
            });
        throw Error(ErrorKind::NotDirectSum,
                    "element " + std::to_string(duplicated) +
                        " has at least 2 decompositions",
                    {duplicated, -1, -1});
    }

    for (int s = 0; s < monoid.order; ++s)
        for (int t = 0; t < monoid.order; ++t) {
            const SubSet target = parts[monoid.at(s, t)];
            for (int a = 0; a < ring.order; ++a) {
                if (!parts[s].contains(a)) continue;
                for (int b = 0; b < ring.order; ++b)
                    if (parts[t].contains(b) && !target.contains(ring.mul(a, b)))
                        throw Error(ErrorKind::NotMultiplicative,
                                    "parts[" + std::to_string(s) + "]*parts[" +
                                        std::to_string(t) + "] escapes at (" +
                                        std::to_string(a) + "," +
                                        std::to_string(b) + ")",
                                    {s, t, a});
            }
        }

    return GradedNearRing{ring, Grading{monoid, parts}, std::move(decomp)};
}

/// Component of x in degree s (lookup on the precomputed table).
inline int homogeneous_component(const GradedNearRing& g, int x, int s) {
    return g.component(x, s);
}

inline bool is_graded_subset(const GradedNearRing& g, SubSet s) {
    return g.is_graded_subset(s);
}

/// Default order bound for grading enumeration; the assignment space is
/// (#normal subgroups)^(monoid order).
inline constexpr int kGradingEnumMaxOrder = 32;

/// All gradings of the ring by the monoid, in lexicographic order of the
/// part-mask tuple. Candidate assignments draw from normal subgroups and
/// are prefiltered by the order-product necessary condition before full
/// validation.
inline std::vector<Grading> enumerate_gradings(
    const FiniteNearRing& ring, const FiniteMonoid& monoid,
    int max_order = kGradingEnumMaxOrder) {
    if (ring.order > max_order)
        throw Error(ErrorKind::BoundExceeded,
                    "grading enumeration capped at order " +
                        std::to_string(max_order));
    const std::vector<SubSet> normals = enumerate_normal_subgroups(ring);
    std::vector<Grading> found;
    std::vector<int> pick(monoid.order, 0);
    while (true) {
        long long product = 1;
        for (int g = 0; g < monoid.order; ++g) product *= normals[pick[g]].count();
        if (product == ring.order) {
            std::vector<SubSet> parts;
            parts.reserve(monoid.order);
            for (int g = 0; g < monoid.order; ++g) parts.push_back(normals[pick[g]]);
            try {
                validate_grading(ring, monoid, parts);
                found.push_back(Grading{monoid, std::move(parts)});
            } catch (const Error&) {
            }
        }
        int g = monoid.order - 1;
        while (g >= 0 && ++pick[g] == static_cast<int>(normals.size())) {
            pick[g] = 0;
            --g;
        }
        if (g < 0) break;
    }
    return found;
}

/// The whole ring in the identity degree, zero everywhere else.
inline GradedNearRing trivially_graded(const FiniteNearRing& ring,
                                       const FiniteMonoid& monoid) {
    std::vector<SubSet> parts(monoid.order, SubSet::single(ring.zero));
    parts[monoid.identity] = ring.carrier();
    return validate_grading(ring, monoid, parts);
}

}  // namespace gnr
