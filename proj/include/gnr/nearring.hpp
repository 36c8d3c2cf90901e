/**
 * @file nearring.hpp
 * @brief Finite (right) near-rings and additive subgroup machinery.
 *
 * A near-ring is a carrier with a group addition (not necessarily
 * abelian), an associative multiplication, and the single distributive
 * law (a+b)*y = a*y + b*y. Nothing else is assumed; in particular
 * x*0 = 0 is NOT an axiom and downstream code never relies on it.
 * 0*y = 0 is a consequence of the axioms and is asserted as a derived
 * consistency check after validation.
 *
 * Axiom checks run in a fixed order (additive group, multiplicative
 * associativity, right distributivity) so error witnesses are
 * deterministic functions of the input tables.
 */

#pragma once

#include <algorithm>
#include <vector>

#include "gnr/core.hpp"

namespace gnr {

struct FiniteNearRing {
    int order = 1;
    std::vector<int> add_t;  // row-major addition table
    std::vector<int> mul_t;  // row-major multiplication table
    int zero = 0;
    std::vector<int> neg;    // two-sided additive inverse, derived

    int add(int a, int b) const { return add_t[a * order + b]; }
    int mul(int a, int b) const { return mul_t[a * order + b]; }
    /// a - b, i.e. a + (-b).
    int sub(int a, int b) const { return add(a, neg[b]); }
    /// n + s - n.
    int conj(int n, int s) const { return add(add(n, s), neg[n]); }

    SubSet carrier() const { return SubSet::full(order); }

    bool operator==(const FiniteNearRing&) const = default;
};

/// Validates addition and multiplication tables as a right near-ring.
/// The zero element is given by the caller; the negation table is derived.
/// Addition is not required to be commutative.
inline FiniteNearRing validate_nearring(const std::vector<std::vector<int>>& add,
                                        const std::vector<std::vector<int>>& mul,
                                        int zero) {
    const int order = static_cast<int>(add.size());
    detail::require_table(add, order);
    if (static_cast<int>(mul.size()) != order)
        throw Error(ErrorKind::TableShape, "add and mul tables differ in order");
    detail::require_table(mul, order);
    if (zero < 0 || zero >= order)
        throw Error(ErrorKind::AddNotGroup,
                    "zero index " + std::to_string(zero) + " out of range",
                    {zero, -1, -1});

    // (N, +) is a group: identity, associativity, two-sided inverses.
    for (int x = 0; x < order; ++x)
        if (add[zero][x] != x || add[x][zero] != x)
            throw Error(ErrorKind::AddNotGroup,
                        "zero is not an additive identity at element " +
                            std::to_string(x),
                        {x, -1, -1});
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (add[add[a][b]][c] != add[a][add[b][c]])
                    throw Error(ErrorKind::AddNotGroup,
                                "addition not associative at (" +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")",
                                {a, b, c});
    std::vector<int> neg(order, -1);
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y)
            if (add[x][y] == zero && add[y][x] == zero) {
                neg[x] = y;
                break;
            }
        if (neg[x] < 0)
            throw Error(ErrorKind::AddNotGroup,
                        "element " + std::to_string(x) +
                            " has no two-sided additive inverse",
                        {x, -1, -1});
    }

    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw Error(ErrorKind::MulNotAssociative,
                                "(" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")",
                                {a, b, c});

    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int y = 0; y < order; ++y)
                if (mul[add[a][b]][y] != add[mul[a][y]][mul[b][y]])
                    throw Error(ErrorKind::NotRightDistributive,
                                "(" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(y) + ")",
                                {a, b, y});

    FiniteNearRing n{order, detail::flatten(add), detail::flatten(mul), zero,
                     std::move(neg)};
    // Derived check: 0*y = 0 follows from right distributivity.
    for (int y = 0; y < order; ++y)
        if (n.mul(zero, y) != zero)
            throw Error(ErrorKind::NotRightDistributive,
                        "derived law 0*y = 0 fails at y = " + std::to_string(y),
                        {zero, y, -1});
    return n;
}

/// True iff S contains zero and is closed under addition and negation.
inline bool is_subgroup(SubSet s, const FiniteNearRing& n) {
    if (!s.contains(n.zero)) return false;
    for (int a = 0; a < n.order; ++a) {
        if (!s.contains(a)) continue;
        if (!s.contains(n.neg[a])) return false;
        for (int b = 0; b < n.order; ++b)
            if (s.contains(b) && !s.contains(n.add(a, b))) return false;
    }
    return true;
}

/// Smallest additive subgroup containing S. The empty set closes to {0}.
inline SubSet subgroup_closure(SubSet s, const FiniteNearRing& n) {
    SubSet out = SubSet::single(n.zero);
    std::vector<int> work;
    work.push_back(n.zero);
    for (int x = 0; x < n.order; ++x)
        if (s.contains(x) && !out.contains(x)) {
            out.add(x);
            work.push_back(x);
        }
    while (!work.empty()) {
        const int t = work.back();
        work.pop_back();
        auto visit = [&](int v) {
            if (!out.contains(v)) {
                out.add(v);
                work.push_back(v);
            }
        };
        visit(n.neg[t]);
        for (int a = 0; a < n.order; ++a)
            if (out.contains(a)) {
                visit(n.add(a, t));
                visit(n.add(t, a));
            }
    }
    return out;
}

/// True iff the subgroup S is closed under conjugation n + s - n.
/// Verifies the subgroup precondition unless assume_subgroup is set.
inline bool is_normal_subgroup(SubSet s, const FiniteNearRing& n,
                               bool assume_subgroup = false) {
    if (!assume_subgroup && !is_subgroup(s, n))
        throw Error(ErrorKind::NotASubgroup,
                    "normality asked of a set that is not an additive subgroup");
    for (int x = 0; x < n.order; ++x)
        for (int e = 0; e < n.order; ++e)
            if (s.contains(e) && !s.contains(n.conj(x, e))) return false;
    return true;
}

/// All additive subgroups, ascending by bitmask. Found by closing each
/// known subgroup extended with one outside element, to fixpoint.
inline std::vector<SubSet> enumerate_subgroups(const FiniteNearRing& n) {
    std::vector<std::uint64_t> sorted;
    std::vector<SubSet> frontier{SubSet::single(n.zero)};
    sorted.push_back(frontier[0].bits);
    auto seen = [&](SubSet s) {
        for (auto b : sorted)
            if (b == s.bits) return true;
        return false;
    };
    while (!frontier.empty()) {
        std::vector<SubSet> next;
        for (SubSet s : frontier)
            for (int x = 0; x < n.order; ++x) {
                if (s.contains(x)) continue;
                SubSet ext = s;
                ext.add(x);
                SubSet closed = subgroup_closure(ext, n);
                if (!seen(closed)) {
                    sorted.push_back(closed.bits);
                    next.push_back(closed);
                }
            }
        frontier = std::move(next);
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<SubSet> out;
    out.reserve(sorted.size());
    for (auto b : sorted) out.push_back(SubSet(b));
    return out;
}

/// All normal additive subgroups, ascending by bitmask.
inline std::vector<SubSet> enumerate_normal_subgroups(const FiniteNearRing& n) {
    std::vector<SubSet> out;
    for (SubSet s : enumerate_subgroups(n))
        if (is_normal_subgroup(s, n, /*assume_subgroup=*/true)) out.push_back(s);
    return out;
}

}  // namespace gnr
