/**
 * @file monoid.hpp
 * @brief Finite monoids given by explicit operation tables.
 *
 * A monoid here is the grading index set: a single associative binary
 * operation with a two-sided identity, on elements 0..order-1. Axioms are
 * verified exhaustively; checks run in a fixed order (identity, then
 * associativity) so failure witnesses are deterministic.
 */

#pragma once

#include <vector>

#include "gnr/core.hpp"

namespace gnr {

struct FiniteMonoid {
    int order = 1;
    std::vector<int> table;  // row-major, table[a * order + b]
    int identity = 0;

    int at(int a, int b) const { return table[a * order + b]; }

    bool operator==(const FiniteMonoid&) const = default;
};

/// Validates an operation table as a monoid with the claimed identity.
/// Check order: table shape, identity law, associativity.
inline FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& table,
                                    int identity) {
    const int order = static_cast<int>(table.size());
    detail::require_table(table, order);
    if (identity < 0 || identity >= order)
        throw Error(ErrorKind::BadIdentity,
                    "identity index " + std::to_string(identity) + " out of range",
                    {identity, -1, -1});

    for (int x = 0; x < order; ++x) {
        if (table[identity][x] != x || table[x][identity] != x)
            throw Error(ErrorKind::BadIdentity,
                        "element " + std::to_string(x) +
                            " violates the identity law",
                        {x, -1, -1});
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(ErrorKind::NotAssociative,
                                "(" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")",
                                {a, b, c});

    return FiniteMonoid{order, detail::flatten(table), identity};
}

/// The one-element monoid.
inline FiniteMonoid trivial_monoid() { return FiniteMonoid{1, {0}, 0}; }

/// The two-element monoid {0,1} with identity 0 and absorbing 1
/// (0*0=0, 0*1=1*0=1, 1*1=1). This is the grading index set used by all
/// the cyclic-ring fixtures.
inline FiniteMonoid two_element_monoid() {
    return FiniteMonoid{2, {0, 1, 1, 1}, 0};
}

/// The cyclic group of order two as a monoid (1*1=0).
inline FiniteMonoid z2_group_monoid() { return FiniteMonoid{2, {0, 1, 1, 0}, 0}; }

}  // namespace gnr
