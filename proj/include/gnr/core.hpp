/**
 * @file core.hpp
 * @brief Shared primitives: element indices, bitmask subsets, error taxonomy.
 *
 * Every structure in this library is a finite algebra on elements indexed
 * 0..order-1 with order <= 64, so a subset of the carrier fits in one
 * 64-bit word. All higher-level machinery (subgroup closures, ideal
 * arithmetic, primality scans) is built on these masks.
 */

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnr {

/// Hard representation limit: subsets are single-word bitmasks.
inline constexpr int kMaxOrder = 64;

/// A subset of the carrier of a fixed finite structure, as a bitmask.
/// Bit i set means element i belongs to the subset. Purely membership
/// semantics; structural properties (subgroup, ideal, ...) are computed
/// by the modules that need them, never assumed.
struct SubSet {
    std::uint64_t bits = 0;

    constexpr SubSet() = default;
    constexpr explicit SubSet(std::uint64_t raw) : bits(raw) {}

    static constexpr SubSet single(int i) { return SubSet(std::uint64_t{1} << i); }
    static constexpr SubSet full(int order) {
        return SubSet(order == kMaxOrder ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << order) - 1);
    }

    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr void add(int i) { bits |= std::uint64_t{1} << i; }
    constexpr void remove(int i) { bits &= ~(std::uint64_t{1} << i); }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    constexpr bool subset_of(SubSet other) const { return (bits & ~other.bits) == 0; }

    constexpr SubSet operator|(SubSet o) const { return SubSet(bits | o.bits); }
    constexpr SubSet operator&(SubSet o) const { return SubSet(bits & o.bits); }
    constexpr bool operator==(const SubSet&) const = default;
    constexpr bool operator<(SubSet o) const { return bits < o.bits; }

    /// Ascending element list (for serialization and reports).
    std::vector<int> elements(int order) const {
        std::vector<int> out;
        for (int i = 0; i < order; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    static SubSet of(const std::vector<int>& elems) {
        SubSet s;
        for (int e : elems) s.add(e);
        return s;
    }
};

/// Discriminates every failure the validators and builders can report.
/// Each error carries a concrete witness (up to three element indices)
/// so callers can reproduce the offending check by hand.
enum class ErrorKind {
    TableShape,          // non-square table or entry out of range
    NotAssociative,      // monoid operation fails on a triple
    BadIdentity,         // claimed identity fails on an element
    AddNotGroup,         // additive axioms fail (witness + detail)
    MulNotAssociative,   // multiplicative semigroup fails on a triple
    NotRightDistributive,// (a+b)y != ay + by on a triple
    NotASubgroup,        // subset handed in without subgroup property
    NotNormalSubgroup,   // grading part is not a normal subgroup
    NotDirectSum,        // element with 0 or >=2 homogeneous decompositions
    NotMultiplicative,   // parts[s]*parts[t] escapes parts[st]
    NotAnIdealInput,     // ideal arithmetic got a non-ideal argument
    NotGradedIdeal,      // predicate input is not a graded ideal
    MonoidMismatch,      // construction requires a shared grading monoid
    BoundExceeded,       // requested order above the configured bound
    NotSurjective,       // hom operation requires surjectivity
    InducedGradingInvalid, // quotient grading failed re-validation
    ParseError,          // malformed structure file
    AxiomError,          // structure file fails validation (wraps cause)
    UnknownClaim,        // claim id not registered
    Usage,               // bad CLI invocation
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::TableShape: return "TableShape";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::BadIdentity: return "BadIdentity";
        case ErrorKind::AddNotGroup: return "AddNotGroup";
        case ErrorKind::MulNotAssociative: return "MulNotAssociative";
        case ErrorKind::NotRightDistributive: return "NotRightDistributive";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::NotNormalSubgroup: return "NotNormalSubgroup";
        case ErrorKind::NotDirectSum: return "NotDirectSum";
        case ErrorKind::NotMultiplicative: return "NotMultiplicative";
        case ErrorKind::NotAnIdealInput: return "NotAnIdealInput";
        case ErrorKind::NotGradedIdeal: return "NotGradedIdeal";
        case ErrorKind::MonoidMismatch: return "MonoidMismatch";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::NotSurjective: return "NotSurjective";
        case ErrorKind::InducedGradingInvalid: return "InducedGradingInvalid";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::AxiomError: return "AxiomError";
        case ErrorKind::UnknownClaim: return "UnknownClaim";
        case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message,
          std::array<int, 3> witness = {-1, -1, -1})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          witness_(witness) {}

    ErrorKind kind() const { return kind_; }
    const std::array<int, 3>& witness() const { return witness_; }

private:
    ErrorKind kind_;
    std::array<int, 3> witness_;
};

namespace detail {
inline void require_table(const std::vector<std::vector<int>>& table, int order) {
    if (order < 1 || order > kMaxOrder)
        throw Error(ErrorKind::BoundExceeded,
                    "order " + std::to_string(order) + " outside [1, " +
                        std::to_string(kMaxOrder) + "]");
    if (static_cast<int>(table.size()) != order)
        throw Error(ErrorKind::TableShape, "table has " +
                        std::to_string(table.size()) + " rows, expected " +
                        std::to_string(order));
    for (int r = 0; r < order; ++r) {
        if (static_cast<int>(table[r].size()) != order)
            throw Error(ErrorKind::TableShape,
                        "row " + std::to_string(r) + " has " +
                            std::to_string(table[r].size()) + " entries",
                        {r, -1, -1});
        for (int c = 0; c < order; ++c)
            if (table[r][c] < 0 || table[r][c] >= order)
                throw Error(ErrorKind::TableShape,
                            "entry [" + std::to_string(r) + "][" +
                                std::to_string(c) + "] = " +
                                std::to_string(table[r][c]) + " out of range",
                            {r, c, -1});
    }
}

/// Flattens a row-major table; callers index as flat[a * order + b].
inline std::vector<int> flatten(const std::vector<std::vector<int>>& table) {
    std::vector<int> flat;
    flat.reserve(table.size() * table.size());
    for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}
}  // namespace detail

}  // namespace gnr
