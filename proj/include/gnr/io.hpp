/**
 * @file io.hpp
 * @brief Structure files, fixture builders, and the default corpus.
 *
 * Structure files are plain JSON with explicit integer tables. Grading
 * keys are monoid element indices as decimal strings. Element 0 must be
 * the additive zero; the loader renumbers with a warning otherwise, so
 * files produced by this tool always satisfy the convention.
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnr/constructions.hpp"
#include "gnr/core.hpp"
#include "gnr/grading.hpp"
#include "gnr/ideals.hpp"

namespace gnr {

using json = nlohmann::ordered_json;

struct NamedStructure {
    std::string name;
    GradedNearRing g;
};

namespace detail {
inline std::vector<std::vector<int>> unflatten(const std::vector<int>& flat,
                                               int order) {
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int r = 0; r < order; ++r)
        for (int c = 0; c < order; ++c) t[r][c] = flat[r * order + c];
    return t;
}
}  // namespace detail

inline json structure_to_json(const NamedStructure& s) {
    const auto& g = s.g;
    json j;
    j["name"] = s.name;
    j["order"] = g.order();
    j["add"] = detail::unflatten(g.ring.add_t, g.order());
    j["mul"] = detail::unflatten(g.ring.mul_t, g.order());
    j["monoid"] = {{"order", g.grading.monoid.order},
                   {"table", detail::unflatten(g.grading.monoid.table,
                                               g.grading.monoid.order)},
                   {"identity", g.grading.monoid.identity}};
    json grading = json::object();
    for (int d = 0; d < g.degrees(); ++d)
        grading[std::to_string(d)] = g.grading.parts[d].elements(g.order());
    j["grading"] = grading;
    return j;
}

inline std::string canonical_text(const NamedStructure& s) {
    return structure_to_json(s).dump(2) + "\n";
}

/// FNV-1a over the canonical serialization with the name blanked, as 16
/// hex digits. Two structures hash equal iff their tables and grading are
/// identical, whatever they are called.
inline std::string structure_hash(const NamedStructure& s) {
    json j = structure_to_json(s);
    j["name"] = "";
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline std::string structure_hash(const GradedNearRing& g) {
    return structure_hash(NamedStructure{"", g});
}

/// Parses and validates a structure from JSON text. If element 0 is not
/// the additive zero, everything is renumbered by the transposition
/// swapping 0 with the zero element, and a warning is recorded.
inline NamedStructure structure_from_json(const json& j,
                                          std::vector<std::string>* warnings =
                                              nullptr) {
    auto fail = [](const std::string& what) -> Error {
        return Error(ErrorKind::ParseError, what);
    };
    try {
        const std::string name = j.value("name", "unnamed");
        const int order = j.at("order").get<int>();
        auto add = j.at("add").get<std::vector<std::vector<int>>>();
        auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(add.size()) != order ||
            static_cast<int>(mul.size()) != order)
            throw fail("declared order does not match table size");

        // Locate the additive zero from the table itself.
        int zero = -1;
        for (int z = 0; z < order && zero < 0; ++z) {
            bool ok = true;
            for (int x = 0; x < order && ok; ++x)
                ok = add[z][x] == x && add[x][z] == x;
            if (ok) zero = z;
        }
        if (zero < 0)
            throw Error(ErrorKind::AxiomError,
                        "addition table has no two-sided identity");

        std::vector<int> perm(order);  // old index -> new index
        for (int i = 0; i < order; ++i) perm[i] = i;
        if (zero != 0) {
            perm[zero] = 0;
            perm[0] = zero;
            if (warnings)
                warnings->push_back("element " + std::to_string(zero) +
                                    " is the additive zero; renumbered to 0");
        }
        std::vector<std::vector<int>> add2(order, std::vector<int>(order));
        std::vector<std::vector<int>> mul2(order, std::vector<int>(order));
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                add2[perm[a]][perm[b]] = perm[add[a][b]];
                mul2[perm[a]][perm[b]] = perm[mul[a][b]];
            }

        const json& jm = j.at("monoid");
        FiniteMonoid monoid =
            validate_monoid(jm.at("table").get<std::vector<std::vector<int>>>(),
                            jm.at("identity").get<int>());
        if (jm.at("order").get<int>() != monoid.order)
            throw fail("monoid order field does not match its table");

        FiniteNearRing ring = validate_nearring(add2, mul2, 0);

        const json& jg = j.at("grading");
        std::vector<SubSet> parts(monoid.order);
        for (int d = 0; d < monoid.order; ++d) {
            const std::string key = std::to_string(d);
            if (!jg.contains(key)) throw fail("grading missing degree " + key);
            for (int e : jg.at(key).get<std::vector<int>>()) {
                if (e < 0 || e >= order)
                    throw fail("grading element out of range in degree " + key);
                parts[d].add(perm[e]);
            }
        }
        return NamedStructure{name, validate_grading(ring, monoid, parts)};
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        throw fail(e.what());
    }
}

inline NamedStructure load_structure(const std::string& path,
                                     std::vector<std::string>* warnings =
                                         nullptr) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    try {
        return structure_from_json(j, warnings);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::AxiomError, path + ": " + e.what(), e.witness());
    }
}

inline void save_structure(const NamedStructure& s, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << canonical_text(s);
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

inline FiniteNearRing cyclic_ring(int n) {
    if (n < 1 || n > kMaxOrder)
        throw Error(ErrorKind::BoundExceeded,
                    "cyclic ring order " + std::to_string(n));
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    return validate_nearring(add, mul, 0);
}

/// Z_n with the trivial grading over the two-element monoid: degree 0
/// carries everything, degree 1 is the zero subgroup.
inline GradedNearRing builder_cyclic(int n) {
    return trivially_graded(cyclic_ring(n), two_element_monoid());
}

/// The mapping near-ring M(Z_k): all self-maps of the cyclic group of
/// order k under pointwise addition and composition, trivially graded
/// over the one-element monoid. A map f is encoded as sum f(i) * k^i, so
/// the zero map is element 0. Right distributive but (for k >= 2) not
/// left distributive.
inline GradedNearRing builder_mapping_nearring(int group_order) {
    if (group_order < 1 || group_order > 3)
        throw Error(ErrorKind::BoundExceeded,
                    "mapping near-ring supported for group orders 1..3");
    const int k = group_order;
    int n = 1;
    for (int i = 0; i < k; ++i) n *= k;  // k^k maps
    auto value = [k](int code, int x) {
        for (int i = 0; i < x; ++i) code /= k;
        return code % k;
    };
    auto encode = [k](const std::vector<int>& vals) {
        int code = 0;
        for (int i = k - 1; i >= 0; --i) code = code * k + vals[i];
        return code;
    };
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            std::vector<int> sum(k), comp(k);
            for (int x = 0; x < k; ++x) {
                sum[x] = (value(f, x) + value(g, x)) % k;
                comp[x] = value(f, value(g, x));
            }
            add[f][g] = encode(sum);
            mul[f][g] = encode(comp);
        }
    return trivially_graded(validate_nearring(add, mul, 0), trivial_monoid());
}

// ---------------------------------------------------------------------------
// Default corpus
// ---------------------------------------------------------------------------

namespace detail {
inline std::string ideal_suffix(SubSet s, int order) {
    std::string out;
    for (int e : s.elements(order)) {
        if (!out.empty()) out += "_";
        out += std::to_string(e);
    }
    return out;
}
}  // namespace detail

/// The bundled corpus: cyclic rings with trivial gradings, the two mixed
/// gradings (membership in enumerate_gradings is asserted), the mapping
/// near-ring M(Z_2), two direct products, and all quotients of Z_12 and
/// Z_18 by their graded ideals. Structures whose canonical hash repeats
/// an earlier entry are dropped, so isomorphic relabelings of already
/// bundled fixtures do not pad the corpus.
inline std::vector<NamedStructure> default_corpus() {
    std::vector<NamedStructure> out;
    std::vector<std::string> hashes;
    auto push = [&](const std::string& name, GradedNearRing g) {
        NamedStructure s{name, std::move(g)};
        const std::string h = structure_hash(s);
        for (const auto& seen : hashes)
            if (seen == h) return;
        hashes.push_back(h);
        out.push_back(std::move(s));
    };

    for (int n : {1, 2, 4, 6, 8, 12, 16, 18})
        push("z" + std::to_string(n) + "_trivial", builder_cyclic(n));

    // Mixed gradings over the two-element monoid; both must be among the
    // enumerated gradings of their ring.
    auto mixed = [&](int n, SubSet p0, SubSet p1) {
        FiniteNearRing ring = cyclic_ring(n);
        const FiniteMonoid m2 = two_element_monoid();
        Grading want{m2, {p0, p1}};
        bool found = false;
        for (const Grading& g : enumerate_gradings(ring, m2))
            if (g == want) found = true;
        if (!found)
            throw std::logic_error("expected mixed grading not enumerated");
        push("z" + std::to_string(n) + "_mixed",
             validate_grading(ring, m2, want.parts));
    };
    mixed(6, SubSet::of({0, 2, 4}), SubSet::of({0, 3}));
    mixed(12, SubSet::of({0, 4, 8}), SubSet::of({0, 3, 6, 9}));

    push("m_z2", builder_mapping_nearring(2));

    push("z4xz4", direct_product(builder_cyclic(4), builder_cyclic(4)));
    push("z12xz2", direct_product(builder_cyclic(12), builder_cyclic(2)));

    for (int n : {12, 18}) {
        GradedNearRing base = builder_cyclic(n);
        for (const IdealSet& i : enumerate_ideals(base, /*graded_only=*/true))
            push("z" + std::to_string(n) + "_mod_" +
                     detail::ideal_suffix(i.bits, n),
                 quotient(base, i).structure);
    }
    return out;
}

inline json corpus_manifest(const std::vector<NamedStructure>& corpus) {
    json entries = json::array();
    for (const auto& s : corpus)
        entries.push_back({{"name", s.name},
                           {"file", s.name + ".json"},
                           {"order", s.g.order()},
                           {"degrees", s.g.degrees()},
                           {"hash", structure_hash(s)}});
    return json{{"corpus", entries}};
}

}  // namespace gnr
