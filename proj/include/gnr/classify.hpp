/**
 * @file classify.hpp
 * @brief Graded prime / weakly prime / almost prime classification.
 *
 * All three predicates quantify over graded ideals I, J of the structure,
 * including the improper ideal N itself. Containment tests use the
 * generator equivalence: for a subgroup (or ideal) target T, the product
 * IJ lies in T exactly when every pairwise element product does, and
 * IJ = {0} exactly when every pairwise product is zero. P = N is accepted
 * and classified vacuously true; rows flag it as improper.
 *
 * Every false verdict carries the lexicographically smallest refuting
 * pair (by bitmask, I first), which re-verifies independently.
 */

#pragma once

#include <optional>
#include <vector>

#include "gnr/core.hpp"
#include "gnr/grading.hpp"
#include "gnr/ideals.hpp"

namespace gnr {

struct WitnessPair {
    SubSet i, j;
};

struct Classification {
    IdealSet ideal;
    bool improper = false;
    bool is_graded_prime = false;
    bool is_graded_weakly_prime = false;
    bool is_graded_almost_prime = false;
    std::optional<WitnessPair> prime_witness;
    std::optional<WitnessPair> weakly_witness;
    std::optional<WitnessPair> almost_witness;
};

struct ClassifyOptions {
    bool quantify_all_ideals = false;  // sweep I, J over all ideals instead
    ProductMode product_mode = ProductMode::subgroup;
};

/// Quantifier domain plus precomputed pairwise product masks, so each
/// predicate evaluation is pure bitmask work.
struct IdealLattice {
    std::vector<IdealSet> ideals;  // ascending by mask
    std::vector<SubSet> product;   // [i * k + j], per the chosen mode
    std::vector<SubSet> square;    // product[i][i] & carrier
    ProductMode mode = ProductMode::subgroup;

    int size() const { return static_cast<int>(ideals.size()); }
    SubSet prod(int i, int j) const { return product[i * size() + j]; }

    int index_of(SubSet mask) const {
        for (int i = 0; i < size(); ++i)
            if (ideals[i].bits == mask) return i;
        return -1;
    }
};

inline IdealLattice build_lattice(const GradedNearRing& g,
                                  const ClassifyOptions& opt = {}) {
    IdealLattice lat;
    lat.mode = opt.product_mode;
    lat.ideals = enumerate_ideals(g, /*graded_only=*/!opt.quantify_all_ideals);
    const int k = lat.size();
    lat.product.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            lat.product[i * k + j] =
                ideal_product(g, lat.ideals[i], lat.ideals[j], opt.product_mode);
    lat.square.resize(k);
    for (int i = 0; i < k; ++i)
        lat.square[i] = lat.product[i * k + i] & g.ring.carrier();
    return lat;
}

enum class PrimalityKind { prime, weakly_prime, almost_prime };

/// Lexicographically smallest refuting pair for the given predicate, or
/// nullopt if the predicate holds over the lattice domain.
inline std::optional<WitnessPair> find_refutation(const GradedNearRing& g,
                                                  SubSet p,
                                                  const IdealLattice& lat,
                                                  PrimalityKind kind) {
    const SubSet zero = SubSet::single(g.ring.zero);
    SubSet sq;
    if (kind == PrimalityKind::almost_prime) {
        const int pi = lat.index_of(p);
        sq = pi >= 0 ? lat.square[pi]
                     : (ideal_product(g, p, p, lat.mode) & g.ring.carrier());
    }
    for (int i = 0; i < lat.size(); ++i) {
        if (lat.ideals[i].bits.subset_of(p)) continue;
        for (int j = 0; j < lat.size(); ++j) {
            if (lat.ideals[j].bits.subset_of(p)) continue;
            const SubSet ij = lat.prod(i, j);
            if (!ij.subset_of(p)) continue;
            switch (kind) {
                case PrimalityKind::prime:
                    return WitnessPair{lat.ideals[i].bits, lat.ideals[j].bits};
                case PrimalityKind::weakly_prime:
                    if (ij != zero)
                        return WitnessPair{lat.ideals[i].bits, lat.ideals[j].bits};
                    break;
                case PrimalityKind::almost_prime:
                    if (!ij.subset_of(sq))
                        return WitnessPair{lat.ideals[i].bits, lat.ideals[j].bits};
                    break;
            }
        }
    }
    return std::nullopt;
}

namespace detail {
inline void require_graded_ideal(const IdealSet& p) {
    if (!p.is_ideal || !p.is_graded)
        throw Error(ErrorKind::NotGradedIdeal,
                    "predicate input is not a graded ideal");
}
}  // namespace detail

inline std::pair<bool, std::optional<WitnessPair>> is_graded_prime(
    const GradedNearRing& g, const IdealSet& p, const ClassifyOptions& opt = {}) {
    detail::require_graded_ideal(p);
    auto w = find_refutation(g, p.bits, build_lattice(g, opt), PrimalityKind::prime);
    return {!w.has_value(), w};
}

inline std::pair<bool, std::optional<WitnessPair>> is_graded_weakly_prime(
    const GradedNearRing& g, const IdealSet& p, const ClassifyOptions& opt = {}) {
    detail::require_graded_ideal(p);
    auto w = find_refutation(g, p.bits, build_lattice(g, opt),
                             PrimalityKind::weakly_prime);
    return {!w.has_value(), w};
}

inline std::pair<bool, std::optional<WitnessPair>> is_graded_almost_prime(
    const GradedNearRing& g, const IdealSet& p, const ClassifyOptions& opt = {}) {
    detail::require_graded_ideal(p);
    auto w = find_refutation(g, p.bits, build_lattice(g, opt),
                             PrimalityKind::almost_prime);
    return {!w.has_value(), w};
}

/// Classification of every graded ideal against the lattice domain.
/// The implication chain prime => weakly => almost is re-verified on
/// every row; a violation is an internal defect, not a data finding.
inline std::vector<Classification> classify_all(const GradedNearRing& g,
                                                const ClassifyOptions& opt = {}) {
    const IdealLattice lat = build_lattice(g, opt);
    // Rows are always the graded ideals, whatever the quantifier domain.
    const std::vector<IdealSet> rows =
        opt.quantify_all_ideals ? enumerate_ideals(g, /*graded_only=*/true)
                                : lat.ideals;
    std::vector<Classification> out;
    out.reserve(rows.size());
    for (const IdealSet& p : rows) {
        Classification c;
        c.ideal = p;
        c.improper = p.bits == g.ring.carrier();
        c.prime_witness = find_refutation(g, p.bits, lat, PrimalityKind::prime);
        c.weakly_witness =
            find_refutation(g, p.bits, lat, PrimalityKind::weakly_prime);
        c.almost_witness =
            find_refutation(g, p.bits, lat, PrimalityKind::almost_prime);
        c.is_graded_prime = !c.prime_witness.has_value();
        c.is_graded_weakly_prime = !c.weakly_witness.has_value();
        c.is_graded_almost_prime = !c.almost_witness.has_value();
        if ((c.is_graded_prime && !c.is_graded_weakly_prime) ||
            (c.is_graded_weakly_prime && !c.is_graded_almost_prime))
            throw std::logic_error("classification implication chain violated");
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace gnr
