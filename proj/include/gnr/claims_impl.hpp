/**
 * @file claims_impl.hpp
 * @brief Sweep engine internals; included from claims.hpp only.
 */

#pragma once

#include <algorithm>
#include <array>

namespace gnr {

namespace sweep_detail {

enum class Family {
    IdealP,    // (structure, graded ideal P)
    IdealPI,   // (structure, P, I)
    IdealPIJ,  // (structure, P, I, J)
    Chain,     // (structure, comparable chain of rows)
    QuotIP,    // (structure, modulus I, ideal P)
    QuotBar,   // (structure, P; ideals of N/P)
    HomP,      // (surjective hom, source ideal P)
    HomIJ,     // (surjective hom, target ideals I, J)
    HomPIJ,    // (surjective hom, target ideals P, I, J)
    ProdP,     // (pair (A, B) with product X, ideal P of A)
    Prod,      // (pair (A, B) with product X)
};

enum class CC {
    T1, C1, P1, T2, T2zero, L1, P2, T3, P3, P4, L2, T4, T5, L3, T6,
    T7f, T7b, C2, T8lit, T8sym, T9, P5,
    T10, P6, T11, T12, P7, P8, L4, T13, T14, L5, T15, T16f, T16b,
    T17f, T17b, C3,
};

struct ClaimCode {
    CC cc;
    int from = 0, to = 0;  // directions for the equivalence claims
};

inline std::optional<ClaimCode> parse_claim_id(const std::string& id) {
    auto dir2 = [&](const std::string& base, CC cc) -> std::optional<ClaimCode> {
        // base + ".dXY" with X, Y condition numbers
        if (id.size() == base.size() + 4 && id.compare(0, base.size(), base) == 0 &&
            id[base.size()] == '.' && id[base.size() + 1] == 'd') {
            const int x = id[base.size() + 2] - '0';
            const int y = id[base.size() + 3] - '0';
            if (x >= 1 && y >= 1 && x != y) return ClaimCode{cc, x, y};
        }
        return std::nullopt;
    };
    if (id == "C-2.T1") return ClaimCode{CC::T1};
    if (id == "C-2.C1") return ClaimCode{CC::C1};
    if (id == "C-2.P1") return ClaimCode{CC::P1};
    if (id == "C-2.T2") return ClaimCode{CC::T2};
    if (id == "C-2.T2.zero") return ClaimCode{CC::T2zero};
    if (id == "C-2.L1") return ClaimCode{CC::L1};
    if (auto c = dir2("C-2.P2", CC::P2); c && c->from <= 4 && c->to <= 4) return c;
    if (auto c = dir2("C-2.T3", CC::T3); c && c->from <= 3 && c->to <= 3) return c;
    if (id == "C-2.P3") return ClaimCode{CC::P3};
    if (id == "C-2.P4") return ClaimCode{CC::P4};
    if (id == "C-2.L2") return ClaimCode{CC::L2};
    if (id == "C-2.T4") return ClaimCode{CC::T4};
    if (id == "C-2.T5") return ClaimCode{CC::T5};
    if (id == "C-2.L3") return ClaimCode{CC::L3};
    if (id == "C-2.T6") return ClaimCode{CC::T6};
    if (id == "C-2.T7.fwd") return ClaimCode{CC::T7f};
    if (id == "C-2.T7.bwd") return ClaimCode{CC::T7b};
    if (id == "C-2.C2") return ClaimCode{CC::C2};
    if (id == "C-2.T8.literal") return ClaimCode{CC::T8lit};
    if (id == "C-2.T8.symmetric") return ClaimCode{CC::T8sym};
    if (id == "C-2.T9") return ClaimCode{CC::T9};
    if (id == "C-2.P5") return ClaimCode{CC::P5};
    if (id == "C-3.T10") return ClaimCode{CC::T10};
    if (id == "C-3.P6") return ClaimCode{CC::P6};
    if (auto c = dir2("C-3.T11", CC::T11); c && c->from <= 4 && c->to <= 4) return c;
    if (auto c = dir2("C-3.T12", CC::T12); c && c->from <= 3 && c->to <= 3) return c;
    if (id == "C-3.P7") return ClaimCode{CC::P7};
    if (id == "C-3.P8") return ClaimCode{CC::P8};
    if (id == "C-3.L4") return ClaimCode{CC::L4};
    if (id == "C-3.T13") return ClaimCode{CC::T13};
    if (id == "C-3.T14") return ClaimCode{CC::T14};
    if (id == "C-3.L5") return ClaimCode{CC::L5};
    if (id == "C-3.T15") return ClaimCode{CC::T15};
    if (id == "C-3.T16.fwd") return ClaimCode{CC::T16f};
    if (id == "C-3.T16.bwd") return ClaimCode{CC::T16b};
    if (id == "C-3.T17.fwd") return ClaimCode{CC::T17f};
    if (id == "C-3.T17.bwd") return ClaimCode{CC::T17b};
    if (id == "C-3.C3") return ClaimCode{CC::C3};
    return std::nullopt;
}

inline Family family_of(CC cc) {
    switch (cc) {
        case CC::T1: case CC::C1: case CC::P1: case CC::P2: case CC::T3:
        case CC::T10: case CC::P6: case CC::T11: case CC::T12:
        case CC::T16f: case CC::T16b:
            return Family::IdealP;
        case CC::P4: case CC::T6: case CC::P5: case CC::P8: case CC::T15:
            return Family::IdealPI;
        case CC::T2: case CC::T2zero: case CC::L1:
            return Family::IdealPIJ;
        case CC::P3: case CC::P7:
            return Family::Chain;
        case CC::T5: case CC::T14:
            return Family::QuotIP;
        case CC::L3: case CC::L5:
            return Family::QuotBar;
        case CC::T4: case CC::T13:
            return Family::HomP;
        case CC::L2:
            return Family::HomIJ;
        case CC::L4:
            return Family::HomPIJ;
        case CC::T7f: case CC::T7b: case CC::T17f: case CC::T17b:
            return Family::ProdP;
        case CC::C2: case CC::T8lit: case CC::T8sym: case CC::T9: case CC::C3:
            return Family::Prod;
    }
    return Family::IdealP;
}

inline std::vector<std::string> roles_of(Family f) {
    switch (f) {
        case Family::IdealP: return {"P"};
        case Family::IdealPI: return {"P", "I"};
        case Family::IdealPIJ: return {"P", "I", "J"};
        case Family::Chain: return {};  // variable-length chain
        case Family::QuotIP: return {"I", "P"};
        case Family::QuotBar: return {"P", "Ibar", "Jbar"};
        case Family::HomP: return {"P"};
        case Family::HomIJ: return {"I", "J"};
        case Family::HomPIJ: return {"P", "I", "J"};
        case Family::ProdP: return {"P"};
        case Family::Prod: return {};
    }
    return {};
}

}  // namespace sweep_detail

inline const std::vector<ClaimInfo>& ClaimEngine::registry() {
    static const std::vector<ClaimInfo> reg = [] {
        std::vector<ClaimInfo> r;
        auto add = [&r](const char* id, std::string st) {
            r.push_back(ClaimInfo{id, std::move(st)});
        };
        add("C-2.T1",
            "P graded weakly prime and not graded prime implies P^2 cap N = {0}");
        add("C-2.C1",
            "when P^2 cap N != {0}: P graded prime iff P graded weakly prime");
        add("C-2.P1",
            "P graded weakly prime with ({0}:P) inside P is graded prime");
        add("C-2.T2",
            "P weakly prime, IJ = {0}, I and J not inside P: IP = PJ");
        add("C-2.T2.zero",
            "P weakly prime, IJ = {0}, I and J not inside P: IP = PJ = {0}");
        add("C-2.L1",
            "a graded ideal equal to the union of two graded ideals equals one "
            "of them");
        static const char* wc[5] = {
            "",
            "(1) {0} != x(<y>+<z>) inside P forces x in P or y,z in P",
            "(2) for x outside P: (P:<x>+<y>) = P union ({0}:<x>+<y>)",
            "(3) for x outside P: (P:<x>+<y>) = P or = ({0}:<x>+<y>)",
            "(4) P graded weakly prime"};
        for (int x = 1; x <= 4; ++x)
            for (int y = 1; y <= 4; ++y)
                if (x != y)
                    add(("C-2.P2.d" + std::to_string(x) + std::to_string(y)).c_str(),
                        std::string(wc[x]) + "  =>  " + wc[y]);
        static const char* tc[4] = {
            "", "(1) P graded weakly prime",
            "(2) graded I,J strictly above P have IJ = {0} or IJ outside P",
            "(3) graded I,J not inside P have IJ = {0} or IJ outside P"};
        for (int x = 1; x <= 3; ++x)
            for (int y = 1; y <= 3; ++y)
                if (x != y)
                    add(("C-2.T3.d" + std::to_string(x) + std::to_string(y)).c_str(),
                        std::string(tc[x]) + "  =>  " + tc[y]);
        add("C-2.P3",
            "the intersection of a chain of graded weakly primes is graded "
            "weakly prime");
        add("C-2.P4",
            "P an intersection of graded weakly primes, {0} != I^2 inside P: "
            "I inside P");
        add("C-2.L2",
            "phi onto, graded ideals I,J of the target with IJ != {0}: "
            "phi^-1(I) phi^-1(J) != {0}");
        add("C-2.T4",
            "the image of a kernel-containing graded weakly prime under an "
            "onto hom is graded weakly prime");
        add("C-2.T5",
            "I inside P, P graded weakly prime: the image of P in N/I is "
            "graded weakly prime");
        add("C-2.L3",
            "P weakly prime; ideals of N/P with Ibar Jbar = {0}, Jbar != {0}: "
            "I inside P or PJ = {0}");
        add("C-2.T6",
            "P weakly prime with P^2 = {0}: I^2 inside P forces I^2 = {0}");
        add("C-2.T7.fwd",
            "P graded weakly prime in N implies P x M graded weakly prime in "
            "N x M");
        add("C-2.T7.bwd",
            "P x M graded weakly prime in N x M implies P graded weakly prime "
            "in N");
        add("C-2.C2",
            "if every graded ideal of N and of M is a product of graded weakly "
            "primes, the same holds in N x M");
        add("C-2.T8.literal",
            "graded weakly primes of N x M are exactly {I x M : I weakly prime "
            "in N} union {N x J : J prime in M}");
        add("C-2.T8.symmetric",
            "graded weakly primes of N x M are exactly {I x M : I weakly prime "
            "in N} union {N x J : J weakly prime in M}");
        add("C-2.T9", "{0} x {0} is graded weakly prime in N x M");
        add("C-2.P5",
            "P, I graded weakly prime: P union I is a graded ideal and graded "
            "weakly prime");
        add("C-3.T10", "graded weakly prime implies graded almost prime");
        add("C-3.P6",
            "P graded almost prime with ((P^2 cap N):P) inside P is graded "
            "prime");
        static const char* ac[5] = {
            "",
            "(1) x(<y>+<z>) inside P but not inside P^2 cap N forces x in P or "
            "y,z in P",
            "(2) for x outside P: (P:<x>+<y>) = P union ((P^2 cap N):<x>+<y>)",
            "(3) for x outside P: (P:<x>+<y>) = P or = ((P^2 cap N):<x>+<y>)",
            "(4) P graded almost prime"};
        for (int x = 1; x <= 4; ++x)
            for (int y = 1; y <= 4; ++y)
                if (x != y)
                    add(("C-3.T11.d" + std::to_string(x) + std::to_string(y)).c_str(),
                        std::string(ac[x]) + "  =>  " + ac[y]);
        static const char* qc[4] = {
            "", "(1) P graded almost prime",
            "(2) graded I,J strictly above P have IJ inside P^2 cap N or IJ "
            "outside P",
            "(3) graded I,J not inside P have IJ inside P^2 cap N or IJ "
            "outside P"};
        for (int x = 1; x <= 3; ++x)
            for (int y = 1; y <= 3; ++y)
                if (x != y)
                    add(("C-3.T12.d" + std::to_string(x) + std::to_string(y)).c_str(),
                        std::string(qc[x]) + "  =>  " + qc[y]);
        add("C-3.P7",
            "the intersection of a chain of graded almost primes is graded "
            "almost prime");
        add("C-3.P8",
            "P an intersection of graded almost primes, I^2 inside P but not "
            "inside P^2 cap N: I inside P");
        add("C-3.L4",
            "phi onto, target ideals P,I,J with IJ not inside P: phi^-1(I) "
            "phi^-1(J) not inside phi^-1(P)");
        add("C-3.T13",
            "the image of a kernel-containing graded almost prime under an "
            "onto hom is graded almost prime");
        add("C-3.T14",
            "I inside P, P graded almost prime: the image of P in N/I is "
            "graded almost prime");
        add("C-3.L5",
            "P almost prime; ideals of N/P with Ibar Jbar = {0}, Jbar != {0}: "
            "I inside P or PJ inside P^2 cap N");
        add("C-3.T15",
            "P graded almost prime: I^2 inside P forces I^2 inside P^2 cap N");
        add("C-3.T16.fwd",
            "unique maximal ideal M, MM = M^2 cap N, M^2 cap N inside P, P "
            "graded almost prime: M^2 cap N = P^2 cap N");
        add("C-3.T16.bwd",
            "unique maximal ideal M, MM = M^2 cap N, M^2 cap N inside P, M^2 "
            "cap N = P^2 cap N: P graded almost prime");
        add("C-3.T17.fwd",
            "P graded almost prime in N implies P x M graded almost prime in "
            "N x M");
        add("C-3.T17.bwd",
            "P x M graded almost prime in N x M implies P graded almost prime "
            "in N");
        add("C-3.C3",
            "if every graded ideal of N and of M is a product of graded almost "
            "primes, the same holds in N x M");
        return r;
    }();
    return reg;
}

// ---------------------------------------------------------------------------
// Context construction
// ---------------------------------------------------------------------------

inline ClaimEngine::CtxPtr ClaimEngine::context(const NamedStructure& s) {
    const std::string h = structure_hash(s);
    if (auto it = ctx_cache_.find(h); it != ctx_cache_.end()) return it->second;

    auto c = std::make_shared<Ctx>();
    c->s = s;
    c->hash = h;
    c->zero = SubSet::single(s.g.ring.zero);
    ClassifyOptions opt;
    opt.quantify_all_ideals = cfg_.quantify_all_ideals;
    opt.product_mode = cfg_.product_mode;
    c->lat = build_lattice(s.g, opt);
    for (const IdealSet& i : c->lat.ideals)
        if (i.is_graded) c->rows.push_back(i);
    c->row_to_lat.resize(c->rows.size());
    for (std::size_t r = 0; r < c->rows.size(); ++r)
        c->row_to_lat[r] = c->lat.index_of(c->rows[r].bits);
    for (const IdealSet& p : c->rows) {
        Classification cl;
        cl.ideal = p;
        cl.improper = p.bits == s.g.ring.carrier();
        cl.prime_witness =
            find_refutation(s.g, p.bits, c->lat, PrimalityKind::prime);
        cl.weakly_witness =
            find_refutation(s.g, p.bits, c->lat, PrimalityKind::weakly_prime);
        cl.almost_witness =
            find_refutation(s.g, p.bits, c->lat, PrimalityKind::almost_prime);
        cl.is_graded_prime = !cl.prime_witness.has_value();
        cl.is_graded_weakly_prime = !cl.weakly_witness.has_value();
        cl.is_graded_almost_prime = !cl.almost_witness.has_value();
        if ((cl.is_graded_prime && !cl.is_graded_weakly_prime) ||
            (cl.is_graded_weakly_prime && !cl.is_graded_almost_prime))
            throw std::logic_error("classification implication chain violated");
        c->cls.push_back(std::move(cl));
    }

    // Unique maximal proper ideal, in the configured lattice.
    {
        std::vector<SubSet> dom;
        if (cfg_.graded_maximality)
            for (const IdealSet& i : c->rows) dom.push_back(i.bits);
        else
            for (const IdealSet& i :
                 enumerate_ideals(s.g, /*graded_only=*/false))
                dom.push_back(i.bits);
        const SubSet full = s.g.ring.carrier();
        std::vector<SubSet> maximal;
        for (SubSet m : dom) {
            if (m == full) continue;
            bool is_max = true;
            for (SubSet o : dom)
                if (o != m && o != full && m.subset_of(o)) is_max = false;
            if (is_max) maximal.push_back(m);
        }
        if (maximal.size() == 1) c->unique_max = maximal[0];
    }

    ctx_cache_[h] = c;
    return c;
}

/// Pair-sum machinery, built on first use: principal ideals, the distinct
/// masks W = <y> + <z>, the product sets {x * w}, and ({0} : W).
inline void ensure_pairsums(sweep_detail::Ctx& c) {
    if (!c.principal.empty()) return;
    const GradedNearRing& g = c.s.g;
    const int n = c.order();
    c.principal.resize(n);
    for (int x = 0; x < n; ++x)
        c.principal[x] = ideal_closure_set(SubSet::single(x), g.ring);
    c.windex.assign(static_cast<std::size_t>(n) * n, -1);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            const SubSet w =
                subgroup_closure(c.principal[y] | c.principal[z], g.ring);
            int k = -1;
            for (std::size_t i = 0; i < c.wmask.size(); ++i)
                if (c.wmask[i] == w) k = static_cast<int>(i);
            if (k < 0) {
                k = static_cast<int>(c.wmask.size());
                c.wmask.push_back(w);
                c.wpairs.emplace_back();
            }
            c.windex[y * n + z] = k;
            c.wpairs[k].emplace_back(y, z);
        }
    c.xprod.assign(c.wmask.size(), std::vector<SubSet>(n));
    for (std::size_t k = 0; k < c.wmask.size(); ++k)
        for (int x = 0; x < n; ++x) {
            SubSet px;
            for (int w = 0; w < n; ++w)
                if (c.wmask[k].contains(w)) px.add(g.ring.mul(x, w));
            c.xprod[k][x] = px;
        }
    c.res_zero.resize(c.wmask.size());
    for (std::size_t k = 0; k < c.wmask.size(); ++k)
        c.res_zero[k] = residual(g, c.zero, c.wmask[k]);
}

inline const std::array<bool, 4>& ClaimEngine::weakly_conditions(Ctx& c,
                                                                 SubSet p) {
    if (auto it = c.weakly_conds.find(p.bits); it != c.weakly_conds.end())
        return it->second;
    ensure_pairsums(c);
    const GradedNearRing& g = c.s.g;
    std::array<bool, 4> conds{true, true, true, true};
    const int r = c.row_index(p);
    conds[3] = r >= 0 && c.weakly(r);
    for (std::size_t k = 0; k < c.wmask.size() && (conds[0] || conds[1] || conds[2]);
         ++k) {
        bool bad_x = false;  // some x outside P with {0} != xW inside P
        for (int x = 0; x < c.order() && !bad_x; ++x)
            if (!p.contains(x) && c.xprod[k][x].subset_of(p) &&
                c.xprod[k][x] != c.zero)
                bad_x = true;
        bool bad_pair = false;   // some (y, z) in this W-class escaping P
        bool first_out = false;  // some ordered pair with first component outside P
        for (const auto& [y, z] : c.wpairs[k]) {
            if (!(p.contains(y) && p.contains(z))) bad_pair = true;
            if (!p.contains(y)) first_out = true;
        }
        if (bad_x && bad_pair) conds[0] = false;
        if (first_out && (conds[1] || conds[2])) {
            const SubSet rp = residual(g, p, c.wmask[k]);
            if (rp != (p | c.res_zero[k])) conds[1] = false;
            if (rp != p && rp != c.res_zero[k]) conds[2] = false;
        }
    }
    return c.weakly_conds.emplace(p.bits, conds).first->second;
}

inline const std::array<bool, 4>& ClaimEngine::almost_conditions(Ctx& c,
                                                                 SubSet p) {
    if (auto it = c.almost_conds.find(p.bits); it != c.almost_conds.end())
        return it->second;
    ensure_pairsums(c);
    const GradedNearRing& g = c.s.g;
    std::array<bool, 4> conds{true, true, true, true};
    const int r = c.row_index(p);
    conds[3] = r >= 0 && c.almost(r);
    const SubSet sq = c.square(p);
    for (std::size_t k = 0; k < c.wmask.size() && (conds[0] || conds[1] || conds[2]);
         ++k) {
        bool bad_x = false;  // x outside P with xW inside P but not inside sq
        for (int x = 0; x < c.order() && !bad_x; ++x)
            if (!p.contains(x) && c.xprod[k][x].subset_of(p) &&
                !c.xprod[k][x].subset_of(sq))
                bad_x = true;
        bool bad_pair = false;
        bool first_out = false;
        for (const auto& [y, z] : c.wpairs[k]) {
            if (!(p.contains(y) && p.contains(z))) bad_pair = true;
            if (!p.contains(y)) first_out = true;
        }
        if (bad_x && bad_pair) conds[0] = false;
        if (first_out && (conds[1] || conds[2])) {
            const SubSet rp = residual(g, p, c.wmask[k]);
            const SubSet rs = residual(g, sq, c.wmask[k]);
            if (rp != (p | rs)) conds[1] = false;
            if (rp != p && rp != rs) conds[2] = false;
        }
    }
    return c.almost_conds.emplace(p.bits, conds).first->second;
}

inline int ClaimEngine::factor_length(Ctx& c, SubSet target, PrimalityKind kind,
                                      int cap) {
    auto& cache = kind == PrimalityKind::weakly_prime ? c.factor_len_weakly
                                                      : c.factor_len_almost;
    if (cache.empty()) {
        // One BFS per kind over left-associated products of eligible
        // factors, recording the minimal length for every reachable mask.
        std::vector<SubSet> factors;
        for (std::size_t r = 0; r < c.rows.size(); ++r) {
            const bool ok = kind == PrimalityKind::weakly_prime ? c.weakly(r)
                                                                : c.almost(r);
            if (ok) factors.push_back(c.rows[r].bits);
        }
        std::vector<SubSet> frontier;
        for (SubSet f : factors)
            if (cache.emplace(f.bits, 1).second) frontier.push_back(f);
        const int max_len = 2 * cfg_.factor_max_len;
        for (int len = 2; len <= max_len && !frontier.empty(); ++len) {
            std::vector<SubSet> next;
            for (SubSet cur : frontier)
                for (SubSet f : factors) {
                    const SubSet prod =
                        ideal_product(c.s.g, cur, f, cfg_.product_mode);
                    if (cache.emplace(prod.bits, len).second) next.push_back(prod);
                }
            frontier = std::move(next);
        }
    }
    auto it = cache.find(target.bits);
    return it != cache.end() && it->second <= cap ? it->second : -1;
}

// ---------------------------------------------------------------------------
// Universe (corpus + formed products + enumerated homs)
// ---------------------------------------------------------------------------

inline ClaimEngine::CtxPtr ClaimEngine::product_ctx(const CtxPtr& a,
                                                    const CtxPtr& b) {
    const std::string key = a->hash + "*" + b->hash;
    if (auto it = product_cache_.find(key); it != product_cache_.end())
        return it->second;
    GradedNearRing prod = direct_product(a->s.g, b->s.g, cfg_.max_order);
    CtxPtr c = context(NamedStructure{a->s.name + "*" + b->s.name, std::move(prod)});
    product_cache_[key] = c;
    return c;
}

inline ClaimEngine::CtxPtr ClaimEngine::quotient_ctx(const CtxPtr& a,
                                                     SubSet modulus,
                                                     std::vector<int>* coset_of) {
    const std::string key = a->hash + "/" + std::to_string(modulus.bits);
    static thread_local std::map<std::string, std::vector<int>> coset_maps;
    if (auto it = quotient_cache_.find(key); it != quotient_cache_.end()) {
        if (it->second && coset_of) *coset_of = coset_maps.at(key);
        return it->second;
    }
    const int r = a->row_index(modulus);
    CtxPtr out;
    try {
        Quotient q = quotient(a->s.g, a->rows[r]);
        out = context(NamedStructure{
            a->s.name + "/" +
                std::to_string(modulus.bits),
            q.structure});
        coset_maps[key] = q.coset_of;
        if (coset_of) *coset_of = q.coset_of;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InducedGradingInvalid) throw;
        out = nullptr;  // cached as invalid
    }
    quotient_cache_[key] = out;
    return out;
}

inline void ClaimEngine::build_universe(
    const std::vector<NamedStructure>& corpus) {
    if (universe_ready_) return;
    universe_ready_ = true;

    std::vector<NamedStructure> sorted = corpus;
    std::sort(sorted.begin(), sorted.end(),
              [](const NamedStructure& x, const NamedStructure& y) {
                  return x.name < y.name;
              });
    std::vector<CtxPtr> base;
    std::set<std::string> seen;
    for (const NamedStructure& s : sorted) {
        CtxPtr c = context(s);
        if (seen.insert(c->hash).second) {
            base.push_back(c);
            structures_.push_back(c);
        }
    }

    if (cfg_.product_pairs) {
        for (const CtxPtr& a : base)
            for (const CtxPtr& b : base) {
                if (a->s.g.grading.monoid != b->s.g.grading.monoid) continue;
                if (a->order() * b->order() > cfg_.max_order) continue;
                CtxPtr x = product_ctx(a, b);
                pairs_.emplace_back(a, b);
                if (seen.insert(x->hash).second) structures_.push_back(x);
            }
    }

    for (const CtxPtr& a : base) {
        if (a->order() > cfg_.hom_max_order) continue;
        for (const CtxPtr& b : base) {
            if (b->order() > a->order()) continue;
            if (a->s.g.grading.monoid != b->s.g.grading.monoid) continue;
            for (GradedHom& h :
                 enumerate_surjective_homs(a->s.g, b->s.g, cfg_.hom_max_order))
                homs_.push_back(HomInst{a, b, std::move(h)});
        }
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

inline ClaimEngine::EvalOut ClaimEngine::eval(const std::string& id,
                                              const Inst& inst) {
    using sweep_detail::CC;
    const auto code = sweep_detail::parse_claim_id(id);
    if (!code) throw Error(ErrorKind::UnknownClaim, id);
    Ctx& A = *inst.a;
    const GradedNearRing& g = A.s.g;
    EvalOut out;

    auto row = [](Ctx& c, SubSet m) { return c.row_index(m); };
    auto wp = [&](Ctx& c, SubSet m) {
        const int r = row(c, m);
        return r >= 0 && c.weakly(r);
    };
    auto ap = [&](Ctx& c, SubSet m) {
        const int r = row(c, m);
        return r >= 0 && c.almost(r);
    };
    auto pr = [&](Ctx& c, SubSet m) {
        const int r = row(c, m);
        return r >= 0 && c.prime(r);
    };
    // P is an intersection of predicate-satisfying graded ideals.
    auto meets = [&](Ctx& c, SubSet p, bool weakly_kind) {
        SubSet inter = c.s.g.ring.carrier();
        bool any = false;
        for (std::size_t r = 0; r < c.rows.size(); ++r) {
            const bool flag = weakly_kind ? c.weakly(r) : c.almost(r);
            if (flag && p.subset_of(c.rows[r].bits)) {
                inter = inter & c.rows[r].bits;
                any = true;
            }
        }
        return any && inter == p;
    };
    auto preimage = [](const std::vector<int>& map, int n, SubSet s) {
        SubSet out_;
        for (int x = 0; x < n; ++x)
            if (s.contains(map[x])) out_.add(x);
        return out_;
    };
    auto image = [](const std::vector<int>& map, int n, SubSet s) {
        SubSet out_;
        for (int x = 0; x < n; ++x)
            if (s.contains(x)) out_.add(map[x]);
        return out_;
    };

    switch (code->cc) {
        case CC::T1: {
            const SubSet p = inst.sets[0];
            out.hyp = wp(A, p) && !pr(A, p);
            out.concl = A.square(p) == A.zero;
            break;
        }
        case CC::C1: {
            const SubSet p = inst.sets[0];
            out.hyp = A.square(p) != A.zero;
            out.concl = pr(A, p) == wp(A, p);
            break;
        }
        case CC::P1: {
            const SubSet p = inst.sets[0];
            out.hyp = wp(A, p) && residual(g, A.zero, p).subset_of(p);
            out.concl = pr(A, p);
            break;
        }
        case CC::T2:
        case CC::T2zero: {
            const SubSet p = inst.sets[0], i = inst.sets[1], j = inst.sets[2];
            out.hyp = wp(A, p) && A.prod(i, j) == A.zero && !i.subset_of(p) &&
                      !j.subset_of(p);
            const SubSet ip = A.prod(i, p), pj = A.prod(p, j);
            out.concl = code->cc == CC::T2 ? ip == pj
                                           : (ip == A.zero && pj == A.zero);
            if (out.hyp && !out.concl)
                out.note = "IP mask " + std::to_string(ip.bits) + ", PJ mask " +
                           std::to_string(pj.bits);
            break;
        }
        case CC::L1: {
            const SubSet p = inst.sets[0], i = inst.sets[1], j = inst.sets[2];
            out.hyp = p == (i | j);
            out.concl = p == i || p == j;
            break;
        }
        case CC::P2: {
            const auto& conds = weakly_conditions(A, inst.sets[0]);
            out.hyp = conds[code->from - 1];
            out.concl = conds[code->to - 1];
            break;
        }
        case CC::T11: {
            const auto& conds = almost_conditions(A, inst.sets[0]);
            out.hyp = conds[code->from - 1];
            out.concl = conds[code->to - 1];
            break;
        }
        case CC::T3:
        case CC::T12: {
            const SubSet p = inst.sets[0];
            const bool almost_kind = code->cc == CC::T12;
            const SubSet sq = A.square(p);
            std::array<bool, 3> conds{true, true, true};
            conds[0] = almost_kind ? ap(A, p) : wp(A, p);
            for (int i = 0; i < A.lat.size() && (conds[1] || conds[2]); ++i)
                for (int j = 0; j < A.lat.size(); ++j) {
                    const SubSet ib = A.lat.ideals[i].bits,
                                 jb = A.lat.ideals[j].bits;
                    const SubSet ij = A.lat.prod(i, j);
                    const bool escape =
                        almost_kind ? ij.subset_of(sq) || !ij.subset_of(p)
                                    : ij == A.zero || !ij.subset_of(p);
                    if (escape) continue;
                    if (p.subset_of(ib) && p != ib && p.subset_of(jb) && p != jb)
                        conds[1] = false;
                    if (!ib.subset_of(p) && !jb.subset_of(p)) conds[2] = false;
                }
            out.hyp = conds[code->from - 1];
            out.concl = conds[code->to - 1];
            break;
        }
        case CC::P3:
        case CC::P7: {
            const bool weakly_kind = code->cc == CC::P3;
            SubSet inter = g.ring.carrier();
            bool chain_ok = !inst.sets.empty();
            for (std::size_t i = 0; i < inst.sets.size() && chain_ok; ++i) {
                const int r = row(A, inst.sets[i]);
                if (r < 0 || !(weakly_kind ? A.weakly(r) : A.almost(r)))
                    chain_ok = false;
                for (std::size_t j = i + 1; j < inst.sets.size(); ++j)
                    if (!inst.sets[i].subset_of(inst.sets[j]) &&
                        !inst.sets[j].subset_of(inst.sets[i]))
                        chain_ok = false;
                inter = inter & inst.sets[i];
            }
            out.hyp = chain_ok;
            out.concl =
                chain_ok && (weakly_kind ? wp(A, inter) : ap(A, inter));
            break;
        }
        case CC::P4: {
            const SubSet p = inst.sets[0], i = inst.sets[1];
            const SubSet ii = A.prod(i, i);
            out.hyp = meets(A, p, /*weakly_kind=*/true) && ii != A.zero &&
                      ii.subset_of(p);
            out.concl = i.subset_of(p);
            break;
        }
        case CC::P8: {
            const SubSet p = inst.sets[0], i = inst.sets[1];
            const SubSet ii = A.prod(i, i);
            out.hyp = meets(A, p, /*weakly_kind=*/false) && ii.subset_of(p) &&
                      !ii.subset_of(A.square(p));
            out.concl = i.subset_of(p);
            break;
        }
        case CC::L2: {
            Ctx& B = *inst.b;
            const SubSet i = inst.sets[0], j = inst.sets[1];
            out.hyp = B.prod(i, j) != B.zero;
            const SubSet pi = preimage(inst.hom_map, A.order(), i);
            const SubSet pj = preimage(inst.hom_map, A.order(), j);
            out.concl = A.prod(pi, pj) != A.zero;
            break;
        }
        case CC::L4: {
            Ctx& B = *inst.b;
            const SubSet p = inst.sets[0], i = inst.sets[1], j = inst.sets[2];
            out.hyp = !B.prod(i, j).subset_of(p);
            const SubSet pre_p = preimage(inst.hom_map, A.order(), p);
            const SubSet pi = preimage(inst.hom_map, A.order(), i);
            const SubSet pj = preimage(inst.hom_map, A.order(), j);
            out.concl = !A.prod(pi, pj).subset_of(pre_p);
            break;
        }
        case CC::T4:
        case CC::T13: {
            Ctx& B = *inst.b;
            const SubSet p = inst.sets[0];
            const SubSet ker =
                preimage(inst.hom_map, A.order(), B.zero);
            const bool kind_ok =
                code->cc == CC::T4 ? wp(A, p) : ap(A, p);
            out.hyp = kind_ok && ker.subset_of(p);
            const SubSet im = image(inst.hom_map, A.order(), p);
            out.concl = code->cc == CC::T4 ? wp(B, im) : ap(B, im);
            if (out.hyp && row(B, im) < 0)
                out.note = "image is not a graded ideal of the target";
            break;
        }
        case CC::T5:
        case CC::T14: {
            const SubSet i = inst.sets[0], p = inst.sets[1];
            const bool kind_ok = code->cc == CC::T5 ? wp(A, p) : ap(A, p);
            if (!kind_ok || !i.subset_of(p) || row(A, i) < 0) {
                out.hyp = false;
                out.concl = true;
                break;
            }
            std::vector<int> coset_of;
            CtxPtr q = quotient_ctx(inst.a, i, &coset_of);
            if (!q) {
                out.hyp = false;  // induced grading invalid; not an instance
                out.concl = true;
                out.note = "induced quotient grading invalid";
                break;
            }
            out.hyp = true;
            const SubSet im = image(coset_of, A.order(), p);
            out.concl = code->cc == CC::T5 ? wp(*q, im) : ap(*q, im);
            break;
        }
        case CC::L3:
        case CC::L5: {
            const SubSet p = inst.sets[0];
            const bool kind_ok = code->cc == CC::L3 ? wp(A, p) : ap(A, p);
            if (!kind_ok || row(A, p) < 0) {
                out.hyp = false;
                out.concl = true;
                break;
            }
            std::vector<int> coset_of;
            CtxPtr q = quotient_ctx(inst.a, p, &coset_of);
            if (!q) {
                out.hyp = false;
                out.concl = true;
                out.note = "induced quotient grading invalid";
                break;
            }
            Ctx& Q = *q;
            const SubSet ibar = inst.sets[1], jbar = inst.sets[2];
            if (row(Q, ibar) < 0 || row(Q, jbar) < 0) {
                out.hyp = false;
                out.concl = true;
                break;
            }
            out.hyp = Q.prod(ibar, jbar) == Q.zero && jbar != Q.zero;
            const SubSet pre_i = preimage(coset_of, A.order(), ibar);
            const SubSet pre_j = preimage(coset_of, A.order(), jbar);
            const SubSet pj = A.prod(p, pre_j);
            out.concl = code->cc == CC::L3
                            ? (pre_i.subset_of(p) || pj == A.zero)
                            : (pre_i.subset_of(p) || pj.subset_of(A.square(p)));
            break;
        }
        case CC::T6: {
            const SubSet p = inst.sets[0], i = inst.sets[1];
            const SubSet ii = A.prod(i, i);
            out.hyp = wp(A, p) && A.prod(p, p) == A.zero && ii.subset_of(p);
            out.concl = ii == A.zero;
            break;
        }
        case CC::P5: {
            const SubSet p = inst.sets[0], i = inst.sets[1];
            out.hyp = wp(A, p) && wp(A, i);
            const SubSet u = p | i;
            const int ru = row(A, u);
            out.concl = ru >= 0 && A.weakly(ru);
            if (out.hyp && ru < 0) out.note = "P union I is not a graded ideal";
            break;
        }
        case CC::T10: {
            const SubSet p = inst.sets[0];
            out.hyp = wp(A, p);
            out.concl = ap(A, p);
            break;
        }
        case CC::P6: {
            const SubSet p = inst.sets[0];
            out.hyp = ap(A, p) && residual(g, A.square(p), p).subset_of(p);
            out.concl = pr(A, p);
            break;
        }
        case CC::T15: {
            const SubSet p = inst.sets[0], i = inst.sets[1];
            const SubSet ii = A.prod(i, i);
            out.hyp = ap(A, p) && ii.subset_of(p);
            out.concl = ii.subset_of(A.square(p));
            break;
        }
        case CC::T16f:
        case CC::T16b: {
            const SubSet p = inst.sets[0];
            if (!A.unique_max) {
                out.hyp = false;
                out.concl = true;
                break;
            }
            const SubSet m = *A.unique_max;
            const SubSet mm = ideal_product(g, m, m, cfg_.product_mode);
            const SubSet sqm =
                ideal_product(g, m, m, cfg_.product_mode) & g.ring.carrier();
            const bool common = mm == sqm && sqm.subset_of(p) && row(A, p) >= 0;
            if (code->cc == CC::T16f) {
                out.hyp = common && ap(A, p);
                out.concl = sqm == A.square(p);
            } else {
                out.hyp = common && sqm == A.square(p);
                out.concl = ap(A, p);
            }
            break;
        }
        case CC::T7f:
        case CC::T7b:
        case CC::T17f:
        case CC::T17b: {
            Ctx& B = *inst.b;
            Ctx& X = *inst.x;
            const SubSet p = inst.sets[0];
            const SubSet pm = embed_product(p, A.order(), B.s.g.ring.carrier(),
                                            B.order());
            if (row(X, pm) < 0)
                throw std::logic_error("P x M missing from the product lattice");
            const bool weakly_kind = code->cc == CC::T7f || code->cc == CC::T7b;
            const bool side_n = weakly_kind ? wp(A, p) : ap(A, p);
            const bool side_x = weakly_kind ? wp(X, pm) : ap(X, pm);
            const bool forward = code->cc == CC::T7f || code->cc == CC::T17f;
            out.hyp = forward ? side_n : side_x;
            out.concl = forward ? side_x : side_n;
            break;
        }
        case CC::T9: {
            Ctx& X = *inst.x;
            out.hyp = true;
            out.concl = wp(X, X.zero);
            break;
        }
        case CC::T8lit:
        case CC::T8sym: {
            Ctx& B = *inst.b;
            Ctx& X = *inst.x;
            std::set<std::uint64_t> actual;
            for (std::size_t r = 0; r < X.rows.size(); ++r)
                if (X.weakly(r)) actual.insert(X.rows[r].bits.bits);
            std::set<std::uint64_t> catalog;
            for (std::size_t r = 0; r < A.rows.size(); ++r)
                if (A.weakly(r))
                    catalog.insert(embed_product(A.rows[r].bits, A.order(),
                                                 B.s.g.ring.carrier(), B.order())
                                       .bits);
            for (std::size_t r = 0; r < B.rows.size(); ++r) {
                const bool leg = code->cc == CC::T8lit ? B.prime(r) : B.weakly(r);
                if (leg)
                    catalog.insert(embed_product(g.ring.carrier(), A.order(),
                                                 B.rows[r].bits, B.order())
                                       .bits);
            }
            out.hyp = true;
            out.concl = actual == catalog;
            if (!out.concl) {
                for (auto m : actual)
                    if (!catalog.count(m))
                        out.note = "weakly prime outside the catalog: mask " +
                                   std::to_string(m);
                if (out.note.empty())
                    for (auto m : catalog)
                        if (!actual.count(m))
                            out.note = "catalog member not weakly prime: mask " +
                                       std::to_string(m);
            }
            break;
        }
        case CC::C2:
        case CC::C3: {
            Ctx& B = *inst.b;
            Ctx& X = *inst.x;
            const PrimalityKind kind = code->cc == CC::C2
                                           ? PrimalityKind::weakly_prime
                                           : PrimalityKind::almost_prime;
            const int cap = cfg_.factor_max_len;
            bool hyp = true;
            for (const IdealSet& r : A.rows)
                if (factor_length(A, r.bits, kind, cap) < 0) hyp = false;
            for (const IdealSet& r : B.rows)
                if (factor_length(B, r.bits, kind, cap) < 0) hyp = false;
            out.hyp = hyp;
            out.concl = true;
            for (const IdealSet& r : X.rows)
                if (factor_length(X, r.bits, kind, 2 * cap) < 0) {
                    out.concl = false;
                    if (out.hyp)
                        out.note = "unfactorable product ideal mask " +
                                   std::to_string(r.bits.bits);
                    break;
                }
            break;
        }
    }
    return out;
}

}  // namespace gnr

#include "gnr/claims_run.hpp"
