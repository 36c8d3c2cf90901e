/**
 * @file claims_run.hpp
 * @brief Instance enumeration, counterexample records, replay.
 */

#pragma once

namespace gnr {

inline json ClaimEngine::serialize_instance(const std::string& id,
                                            const Inst& inst,
                                            const EvalOut& out) const {
    using sweep_detail::Family;
    const auto code = sweep_detail::parse_claim_id(id);
    const Family fam = sweep_detail::family_of(code->cc);
    json rec;
    rec["claim"] = id;
    rec["config"] = {{"product_mode", cfg_.product_mode == ProductMode::subgroup
                                          ? "subgroup"
                                          : "ideal"},
                     {"quantify_all_ideals", cfg_.quantify_all_ideals},
                     {"graded_maximality", cfg_.graded_maximality},
                     {"factor_max_len", cfg_.factor_max_len}};
    rec["structure"] = structure_to_json(inst.a->s);
    rec["structure_hash"] = inst.a->hash;
    if (inst.b) {
        rec["structure_b"] = structure_to_json(inst.b->s);
        rec["structure_b_hash"] = inst.b->hash;
    }
    json sets = json::object();
    if (fam == Family::Chain) {
        json chain = json::array();
        for (SubSet s : inst.sets) chain.push_back(s.elements(inst.a->order()));
        sets["chain"] = chain;
    } else {
        const auto roles = sweep_detail::roles_of(fam);
        for (std::size_t i = 0; i < roles.size() && i < inst.sets.size(); ++i) {
            // Quotient-side roles are element lists of the quotient carrier.
            int order = inst.a->order();
            if (fam == Family::QuotBar && i > 0) order = kMaxOrder;
            if ((fam == Family::HomIJ || fam == Family::HomPIJ) && inst.b)
                order = inst.b->order();
            sets[roles[i]] = inst.sets[i].elements(order);
        }
    }
    rec["sets"] = sets;
    if (!inst.hom_map.empty()) rec["hom"] = inst.hom_map;
    if (!out.note.empty()) rec["note"] = out.note;
    return rec;
}

inline ClaimResult ClaimEngine::run_claim(const std::string& id) {
    using sweep_detail::CC;
    using sweep_detail::Family;
    const auto code = sweep_detail::parse_claim_id(id);
    if (!code) throw Error(ErrorKind::UnknownClaim, id);
    const Family fam = sweep_detail::family_of(code->cc);

    ClaimResult res;
    res.id = id;
    auto consider = [&](const Inst& inst) {
        const EvalOut out = eval(id, inst);
        ++res.instances;
        if (out.hyp) ++res.nonvacuous;
        if (out.hyp && !out.concl) {
            res.falsified = true;
            ++res.counterexample_count;
            if (cfg_.all_counterexamples ||
                static_cast<int>(res.counterexamples.size()) <
                    cfg_.counterexample_cap)
                res.counterexamples.push_back(serialize_instance(id, inst, out));
        }
    };

    switch (fam) {
        case Family::IdealP:
            for (const CtxPtr& c : structures_)
                for (const IdealSet& p : c->rows)
                    consider(Inst{c, nullptr, nullptr, {p.bits}, {}});
            break;
        case Family::IdealPI:
            for (const CtxPtr& c : structures_)
                for (const IdealSet& p : c->rows)
                    for (const IdealSet& i : c->rows)
                        consider(Inst{c, nullptr, nullptr, {p.bits, i.bits}, {}});
            break;
        case Family::IdealPIJ:
            for (const CtxPtr& c : structures_)
                for (const IdealSet& p : c->rows)
                    for (const IdealSet& i : c->rows)
                        for (const IdealSet& j : c->rows)
                            consider(Inst{
                                c, nullptr, nullptr, {p.bits, i.bits, j.bits}, {}});
            break;
        case Family::Chain: {
            const bool weakly_kind = code->cc == CC::P3;
            for (const CtxPtr& c : structures_) {
                std::vector<SubSet> members;
                for (std::size_t r = 0; r < c->rows.size(); ++r)
                    if (weakly_kind ? c->weakly(r) : c->almost(r))
                        members.push_back(c->rows[r].bits);
                auto comparable = [](SubSet a, SubSet b) {
                    return a.subset_of(b) || b.subset_of(a);
                };
                const int m = static_cast<int>(members.size());
                for (int i = 0; i < m; ++i) {
                    consider(Inst{c, nullptr, nullptr, {members[i]}, {}});
                    for (int j = i + 1; j < m; ++j) {
                        if (!comparable(members[i], members[j])) continue;
                        consider(Inst{
                            c, nullptr, nullptr, {members[i], members[j]}, {}});
                        for (int k = j + 1; k < m; ++k) {
                            if (!comparable(members[i], members[k]) ||
                                !comparable(members[j], members[k]))
                                continue;
                            consider(Inst{c,
                                          nullptr,
                                          nullptr,
                                          {members[i], members[j], members[k]},
                                          {}});
                        }
                    }
                }
            }
            break;
        }
        case Family::QuotIP:
            for (const CtxPtr& c : structures_)
                for (const IdealSet& i : c->rows)
                    for (const IdealSet& p : c->rows)
                        consider(Inst{c, nullptr, nullptr, {i.bits, p.bits}, {}});
            break;
        case Family::QuotBar:
            for (const CtxPtr& c : structures_)
                for (const IdealSet& p : c->rows) {
                    CtxPtr q = quotient_ctx(c, p.bits, nullptr);
                    if (!q) {
                        consider(Inst{c,
                                      nullptr,
                                      nullptr,
                                      {p.bits, SubSet(), SubSet()},
                                      {}});
                        continue;
                    }
                    for (const IdealSet& ib : q->rows)
                        for (const IdealSet& jb : q->rows)
                            consider(Inst{c,
                                          nullptr,
                                          nullptr,
                                          {p.bits, ib.bits, jb.bits},
                                          {}});
                }
            break;
        case Family::HomP:
            for (const HomInst& h : homs_)
                for (const IdealSet& p : h.a->rows)
                    consider(Inst{h.a, h.b, nullptr, {p.bits}, h.hom.map});
            break;
        case Family::HomIJ:
            for (const HomInst& h : homs_)
                for (const IdealSet& i : h.b->rows)
                    for (const IdealSet& j : h.b->rows)
                        consider(
                            Inst{h.a, h.b, nullptr, {i.bits, j.bits}, h.hom.map});
            break;
        case Family::HomPIJ:
            for (const HomInst& h : homs_)
                for (const IdealSet& p : h.b->rows)
                    for (const IdealSet& i : h.b->rows)
                        for (const IdealSet& j : h.b->rows)
                            consider(Inst{h.a,
                                          h.b,
                                          nullptr,
                                          {p.bits, i.bits, j.bits},
                                          h.hom.map});
            break;
        case Family::ProdP:
            for (const auto& [a, b] : pairs_) {
                CtxPtr x = product_ctx(a, b);
                for (const IdealSet& p : a->rows)
                    consider(Inst{a, b, x, {p.bits}, {}});
            }
            break;
        case Family::Prod:
            for (const auto& [a, b] : pairs_) {
                CtxPtr x = product_ctx(a, b);
                consider(Inst{a, b, x, {}, {}});
            }
            break;
    }
    return res;
}

inline std::vector<ClaimResult> ClaimEngine::check_all(
    const std::vector<NamedStructure>& corpus) {
    for (const auto& [fact, ok] : golden_facts(cfg_.product_mode))
        if (!ok) throw std::logic_error("golden fact failed: " + fact);
    build_universe(corpus);
    std::vector<ClaimResult> out;
    for (const ClaimInfo& info : registry()) {
        bool selected = cfg_.claim_filter.empty();
        for (const std::string& f : cfg_.claim_filter)
            if (f == "all" || id_matches(info.id, f)) selected = true;
        if (selected) out.push_back(run_claim(info.id));
    }
    return out;
}

inline ClaimResult ClaimEngine::check_claim(
    const std::string& id, const std::vector<NamedStructure>& corpus) {
    bool known = false;
    for (const ClaimInfo& info : registry())
        if (info.id == id) known = true;
    if (!known) throw Error(ErrorKind::UnknownClaim, id);
    build_universe(corpus);
    return run_claim(id);
}

inline bool ClaimEngine::replay_counterexample(const json& rec) {
    using sweep_detail::Family;
    try {
        SweepConfig cfg;
        const json& jc = rec.at("config");
        cfg.product_mode = jc.at("product_mode") == "ideal"
                               ? ProductMode::ideal
                               : ProductMode::subgroup;
        cfg.quantify_all_ideals = jc.at("quantify_all_ideals").get<bool>();
        cfg.graded_maximality = jc.at("graded_maximality").get<bool>();
        cfg.factor_max_len = jc.at("factor_max_len").get<int>();
        ClaimEngine engine(cfg);

        const std::string id = rec.at("claim").get<std::string>();
        const auto code = sweep_detail::parse_claim_id(id);
        if (!code) return false;
        const Family fam = sweep_detail::family_of(code->cc);

        Inst inst;
        inst.a = engine.context(structure_from_json(rec.at("structure")));
        if (rec.contains("structure_b"))
            inst.b = engine.context(structure_from_json(rec.at("structure_b")));
        if (fam == Family::ProdP || fam == Family::Prod) {
            if (!inst.b) return false;
            inst.x = engine.product_ctx(inst.a, inst.b);
        }
        if (rec.contains("hom")) {
            if (!inst.b) return false;
            inst.hom_map = rec.at("hom").get<std::vector<int>>();
            GradedHom h = validate_hom(inst.a->s.g, inst.b->s.g, inst.hom_map);
            if (!h.surjective) return false;
        } else if (fam == Family::HomP || fam == Family::HomIJ ||
                   fam == Family::HomPIJ) {
            return false;
        }
        const json& sets = rec.at("sets");
        if (fam == Family::Chain) {
            for (const auto& lst : sets.at("chain"))
                inst.sets.push_back(SubSet::of(lst.get<std::vector<int>>()));
        } else {
            for (const std::string& role : sweep_detail::roles_of(fam)) {
                if (!sets.contains(role)) return false;
                inst.sets.push_back(
                    SubSet::of(sets.at(role).get<std::vector<int>>()));
            }
        }
        const EvalOut out = engine.eval(id, inst);
        return out.hyp && !out.concl;
    } catch (...) {
        return false;
    }
}

}  // namespace gnr
