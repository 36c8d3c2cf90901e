/**
 * @file claims.hpp
 * @brief Registry of quantified properties and the corpus sweep engine.
 *
 * Each registered claim is a hypothesis/conclusion pair over a fixed
 * instance shape (structure, structure + ideals, hom + ideals, pair of
 * structures, ...). The sweep enumerates every instance drawn from the
 * corpus, counts how often the hypothesis holds, and collects refuting
 * instances. A claim is reported verified-on-corpus when no instance
 * refutes it; that is evidence over the corpus, never a proof.
 *
 * Counterexamples are self-contained: they embed full structure
 * serializations plus the instance data and the product/quantifier
 * configuration, and re-verify from that serialized form alone.
 *
 * Where a source statement admits more than one reading, the readings
 * are separate sub-claims (suffixed ids); nothing is repaired silently.
 * Equivalence claims carry one row per directed implication.
 */

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gnr/classify.hpp"
#include "gnr/constructions.hpp"
#include "gnr/core.hpp"
#include "gnr/grading.hpp"
#include "gnr/ideals.hpp"
#include "gnr/io.hpp"

namespace gnr {

struct SweepConfig {
    std::vector<std::string> claim_filter;  // empty = every registered row
    bool product_pairs = false;             // form pairwise direct products
    int max_order = kMaxOrder;              // bound for formed products
    int counterexample_cap = 5;
    bool all_counterexamples = false;
    ProductMode product_mode = ProductMode::subgroup;
    bool quantify_all_ideals = false;  // I, J range over all ideals instead
    bool graded_maximality = false;    // unique-maximal search in graded lattice
    int factor_max_len = 3;            // factorization length bound per factor ring
    int hom_max_order = kHomEnumMaxOrder;

    json echo() const {
        return json{{"product_pairs", product_pairs},
                    {"max_order", max_order},
                    {"counterexample_cap", counterexample_cap},
                    {"all_counterexamples", all_counterexamples},
                    {"product_mode",
                     product_mode == ProductMode::subgroup ? "subgroup" : "ideal"},
                    {"quantify_all_ideals", quantify_all_ideals},
                    {"graded_maximality", graded_maximality},
                    {"factor_max_len", factor_max_len},
                    {"hom_max_order", hom_max_order}};
    }
};

struct ClaimInfo {
    std::string id;
    std::string statement;
};

struct ClaimResult {
    std::string id;
    long long instances = 0;
    long long nonvacuous = 0;  // instances whose hypothesis held
    bool falsified = false;
    long long counterexample_count = 0;
    std::vector<json> counterexamples;  // capped unless all_counterexamples

    std::string status() const {
        return falsified ? "falsified" : "verified-on-corpus";
    }
};

/// Bounded search for a factorization of a graded ideal into graded
/// weakly (or almost) prime factors whose iterated left-associated
/// product equals the ideal. Shortest factorization first; ties broken
/// by ascending factor masks. Returns nullopt when none exists within
/// max_len.
inline std::optional<std::vector<IdealSet>> factor_into(
    const GradedNearRing& g, const IdealSet& ideal, PrimalityKind kind,
    int max_len, ProductMode mode = ProductMode::subgroup) {
    if (!ideal.is_ideal || !ideal.is_graded)
        throw Error(ErrorKind::NotGradedIdeal, "factorization target");
    if (max_len < 1 || max_len > 16)
        throw Error(ErrorKind::BoundExceeded, "factorization length bound");
    ClassifyOptions opt;
    opt.product_mode = mode;
    const IdealLattice lat = build_lattice(g, opt);
    std::vector<SubSet> factors;
    for (int i = 0; i < lat.size(); ++i)
        if (!find_refutation(g, lat.ideals[i].bits, lat, kind))
            factors.push_back(lat.ideals[i].bits);

    struct Parent {
        std::uint64_t prev;
        int factor;
    };
    std::map<std::uint64_t, Parent> seen;
    std::vector<std::uint64_t> frontier;
    for (std::size_t f = 0; f < factors.size(); ++f)
        if (seen.emplace(factors[f].bits, Parent{0, static_cast<int>(f)}).second)
            frontier.push_back(factors[f].bits);

    auto reconstruct = [&](std::uint64_t mask) {
        std::vector<SubSet> seq;
        while (true) {
            const Parent& p = seen.at(mask);
            seq.push_back(factors[p.factor]);
            if (p.prev == 0 && seq.size() >= 1 && seen.at(mask).prev == 0) {
                // Chain root: first factor has prev sentinel 0 (mask 0 is
                // never a product, every product contains the zero element).
                if (p.prev == 0) break;
            }
            mask = p.prev;
        }
        std::reverse(seq.begin(), seq.end());
        std::vector<IdealSet> out;
        for (SubSet s : seq) out.push_back(analyze(g, s));
        return out;
    };

    if (seen.count(ideal.bits.bits)) return reconstruct(ideal.bits.bits);
    for (int len = 2; len <= max_len; ++len) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t cur : frontier)
            for (std::size_t f = 0; f < factors.size(); ++f) {
                const SubSet prod = ideal_product(g, SubSet(cur), factors[f], mode);
                if (seen.emplace(prod.bits, Parent{cur, static_cast<int>(f)})
                        .second) {
                    next.push_back(prod.bits);
                    if (prod == ideal.bits) return reconstruct(prod.bits);
                }
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

namespace sweep_detail {

/// Everything the claim evaluators need about one structure, computed
/// once and shared. The lattice is the I/J quantifier domain; rows are
/// always the graded ideals (the P domain).
struct Ctx {
    NamedStructure s;
    std::string hash;
    IdealLattice lat;
    std::vector<IdealSet> rows;  // graded ideals, ascending
    std::vector<int> row_to_lat;
    std::vector<Classification> cls;  // aligned with rows
    SubSet zero;

    std::optional<SubSet> unique_max;  // unique maximal proper ideal, if any

    // Pair-sum machinery for element-level conditions: W(y, z) = <y> + <z>.
    std::vector<SubSet> principal;            // <x> per element
    std::vector<SubSet> wmask;                // distinct pair-sum masks
    std::vector<std::vector<std::pair<int, int>>> wpairs;  // ordered (y, z) per mask
    std::vector<int> windex;                  // (y * order + z) -> mask index
    std::vector<std::vector<SubSet>> xprod;   // [k][x] = {x * w : w in W_k}
    std::vector<SubSet> res_zero;             // ({0} : W_k)

    // Lazy caches.
    std::map<std::uint64_t, std::array<bool, 4>> weakly_conds;  // by P mask
    std::map<std::uint64_t, std::array<bool, 4>> almost_conds;
    std::map<std::uint64_t, int> factor_len_weakly;  // min factorization length
    std::map<std::uint64_t, int> factor_len_almost;

    int order() const { return s.g.order(); }

    int row_index(SubSet mask) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].bits == mask) return static_cast<int>(i);
        return -1;
    }

    int lat_index(SubSet mask) const { return lat.index_of(mask); }

    SubSet prod(SubSet a, SubSet b) const {
        const int i = lat.index_of(a), j = lat.index_of(b);
        if (i < 0 || j < 0)
            throw std::logic_error("product requested outside the lattice");
        return lat.prod(i, j);
    }

    SubSet square(SubSet p) const {
        const int i = lat.index_of(p);
        if (i < 0) throw std::logic_error("square requested outside the lattice");
        return lat.square[i];
    }

    bool prime(int row) const { return cls[row].is_graded_prime; }
    bool weakly(int row) const { return cls[row].is_graded_weakly_prime; }
    bool almost(int row) const { return cls[row].is_graded_almost_prime; }
};

using CtxPtr = std::shared_ptr<Ctx>;

/// One enumerated instance. Which fields are meaningful depends on the
/// claim family; sets are role-ordered (see the per-claim evaluators).
struct Inst {
    CtxPtr a;
    CtxPtr b;                       // product partner / hom target
    CtxPtr x;                       // formed product ctx
    std::vector<SubSet> sets;
    std::vector<int> hom_map;
};

struct EvalOut {
    bool hyp = false;
    bool concl = false;
    std::string note;
};

}  // namespace sweep_detail

/// Re-derived base facts checked at the start of every sweep; built from
/// the builders directly so they never depend on the supplied corpus.
inline std::vector<std::pair<std::string, bool>> golden_facts(
    ProductMode mode = ProductMode::subgroup) {
    std::vector<std::pair<std::string, bool>> out;
    ClassifyOptions opt;
    opt.product_mode = mode;
    auto flags = [&](const GradedNearRing& g, SubSet p) {
        const IdealLattice lat = build_lattice(g, opt);
        return std::array<bool, 3>{
            !find_refutation(g, p, lat, PrimalityKind::prime).has_value(),
            !find_refutation(g, p, lat, PrimalityKind::weakly_prime).has_value(),
            !find_refutation(g, p, lat, PrimalityKind::almost_prime).has_value()};
    };

    const GradedNearRing z12 = builder_cyclic(12);
    auto f0 = flags(z12, SubSet::of({0}));
    auto f2 = flags(z12, SubSet::of({0, 2, 4, 6, 8, 10}));
    auto f3 = flags(z12, SubSet::of({0, 3, 6, 9}));
    out.emplace_back("z12: {0}, 2Z, 3Z weakly prime", f0[1] && f2[1] && f3[1]);
    out.emplace_back("z12: {0} weakly prime but not prime", f0[1] && !f0[0]);
    auto f48 = flags(z12, SubSet::of({0, 4, 8}));
    auto f6 = flags(z12, SubSet::of({0, 6}));
    out.emplace_back("z12: {0,4,8} almost prime, not weakly prime",
                     f48[2] && !f48[1]);
    out.emplace_back("z12: {0,6} neither weakly nor almost prime",
                     !f6[1] && !f6[2]);
    const SubSet sq06 =
        ideal_product(z12, SubSet::of({0, 6}), SubSet::of({0, 6}), mode) &
        z12.ring.carrier();
    out.emplace_back("z12: {0,6} has square {0} yet is not weakly prime",
                     sq06 == SubSet::of({0}) && !f6[1]);

    const GradedNearRing z8 = builder_cyclic(8);
    const GradedNearRing z4 = builder_cyclic(4);
    bool hom_fact = false;
    for (const GradedHom& h : enumerate_surjective_homs(z8, z4))
        if (h.map == std::vector<int>{0, 1, 2, 3, 0, 1, 2, 3}) {
            const SubSet pre = h.preimage(SubSet::of({0}));
            hom_fact = pre == SubSet::of({0, 4}) &&
                       flags(z4, SubSet::of({0}))[1] && !flags(z8, pre)[1];
        }
    out.emplace_back(
        "z8 -> z4 reduction: {0} weakly prime upstairs fails on the preimage",
        hom_fact);

    const GradedNearRing z18 = builder_cyclic(18);
    const IdealSet i09 = analyze(z18, SubSet::of({0, 9}));
    const Quotient q = quotient(z18, i09);
    out.emplace_back("z18: quotient by {0,9} makes the zero ideal weakly prime",
                     !flags(z18, i09.bits)[1] &&
                         flags(q.structure, SubSet::of({0}))[1]);

    const GradedNearRing z16 = builder_cyclic(16);
    const auto ideals16 = enumerate_ideals(z16, /*graded_only=*/false);
    SubSet m;
    int maximal_count = 0;
    for (const IdealSet& i : ideals16) {
        if (i.bits == z16.ring.carrier()) continue;
        bool is_max = true;
        for (const IdealSet& j : ideals16)
            if (j.bits != i.bits && j.bits != z16.ring.carrier() &&
                i.bits.subset_of(j.bits))
                is_max = false;
        if (is_max) {
            ++maximal_count;
            m = i.bits;
        }
    }
    const SubSet mm = ideal_product(z16, m, m, mode);
    out.emplace_back("z16: unique maximal ideal 2Z with MM = square {0,4,8,12}",
                     maximal_count == 1 &&
                         m == SubSet::of({0, 2, 4, 6, 8, 10, 12, 14}) &&
                         mm == SubSet::of({0, 4, 8, 12}) &&
                         mm == (ideal_product(z16, m, m, mode) &
                                z16.ring.carrier()));
    return out;
}

class ClaimEngine {
public:
    explicit ClaimEngine(SweepConfig cfg = {}) : cfg_(std::move(cfg)) {}

    static const std::vector<ClaimInfo>& registry();

    /// True when the row id matches a filter entry exactly or extends it
    /// by a dot-suffix (so "C-2.T7" selects C-2.T7.fwd and C-2.T7.bwd).
    static bool id_matches(const std::string& id, const std::string& filter) {
        if (id == filter) return true;
        return id.size() > filter.size() + 1 && id.compare(0, filter.size(), filter) == 0 &&
               id[filter.size()] == '.';
    }

    std::vector<ClaimResult> check_all(const std::vector<NamedStructure>& corpus);
    ClaimResult check_claim(const std::string& id,
                            const std::vector<NamedStructure>& corpus);

    /// Re-verifies a serialized counterexample from its own data alone:
    /// true iff the embedded instance still satisfies the hypothesis and
    /// fails the conclusion under the embedded configuration.
    static bool replay_counterexample(const json& record);

private:
    friend struct ReplayAccess;
    using Ctx = sweep_detail::Ctx;
    using CtxPtr = sweep_detail::CtxPtr;
    using Inst = sweep_detail::Inst;
    using EvalOut = sweep_detail::EvalOut;

    SweepConfig cfg_;
    std::map<std::string, CtxPtr> ctx_cache_;  // by content hash
    // Quotient contexts by "hash/modulus"; a null ctx caches an invalid
    // induced grading, the vector is the coset map of the projection.
    std::map<std::string, std::pair<CtxPtr, std::vector<int>>> quotient_cache_;
    std::vector<CtxPtr> structures_;                          // sweep universe
    std::vector<std::pair<CtxPtr, CtxPtr>> pairs_;            // product sources
    std::map<std::string, CtxPtr> product_cache_;             // by pair key
    struct HomInst {
        CtxPtr a, b;
        GradedHom hom;
    };
    std::vector<HomInst> homs_;
    bool universe_ready_ = false;

    CtxPtr context(const NamedStructure& s);
    void build_universe(const std::vector<NamedStructure>& corpus);
    CtxPtr product_ctx(const CtxPtr& a, const CtxPtr& b);
    CtxPtr quotient_ctx(const CtxPtr& a, SubSet modulus, std::vector<int>* coset_of);

    const std::array<bool, 4>& weakly_conditions(Ctx& c, SubSet p);
    const std::array<bool, 4>& almost_conditions(Ctx& c, SubSet p);
    int factor_length(Ctx& c, SubSet target, PrimalityKind kind, int cap);

    EvalOut eval(const std::string& id, const Inst& inst);
    ClaimResult run_claim(const std::string& id);
    json serialize_instance(const std::string& id, const Inst& inst,
                            const EvalOut& out) const;
};

}  // namespace gnr

#include "gnr/claims_impl.hpp"
