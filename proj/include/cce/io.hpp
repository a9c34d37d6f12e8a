#pragma once

#include "cce/catalog.hpp"
#include "cce/root_system.hpp"
#include "cce/verify.hpp"

#include <json.hpp>

#include <fstream>

namespace cce {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Algebra / module file format: a JSON document with fields name, kind, dim,
// basis, unit_index and sparse entries [i, j, k, "p/q"] (products) or
// [i, p, q, "p/q"] (actions). Rationals are decimal fraction strings.
// ---------------------------------------------------------------------------

inline Json algebra_to_json(const AlgebraSpec& a) {
    Json j;
    j["name"] = a.name;
    j["kind"] = a.kind == AlgebraKind::lie ? "lie" : "assoc-comm-unital";
    j["dim"] = a.dim;
    j["basis"] = a.basis_labels;
    if (a.unit_index) j["unit_index"] = *a.unit_index;
    Json entries = Json::array();
    for (const auto& [ij, v] : a.product)
        for (const auto& [k, c] : v)
            entries.push_back(Json::array({ij.first, ij.second, k, rat_str(c)}));
    j["product"] = std::move(entries);
    return j;
}

inline Json module_to_json(const ModuleActionSpec& m) {
    Json j;
    j["kind"] = "module";
    j["algebra"] = algebra_to_json(m.algebra);
    j["dim"] = m.dim;
    Json entries = Json::array();
    for (const auto& [ip, v] : m.action)
        for (const auto& [q, c] : v)
            entries.push_back(Json::array({ip.first, ip.second, q, rat_str(c)}));
    j["action"] = std::move(entries);
    return j;
}

namespace io_detail {

inline void require_field(const Json& j, const char* f, const std::string& what) {
    if (!j.contains(f)) throw parse_error(what + ": missing field '" + f + "'");
}

inline std::map<std::pair<int, int>, SparseVec> parse_entries(const Json& arr, int d1, int d2, int d3,
                                                              const std::string& what) {
    std::map<std::pair<int, int>, std::map<int, Rat>> acc;
    int n = 0;
    for (const auto& e : arr) {
        ++n;
        if (!e.is_array() || e.size() != 4)
            throw parse_error(what + ": entry " + std::to_string(n) + " must be [i, j, k, \"p/q\"]");
        int i = e[0].get<int>(), j = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= d1 || j < 0 || j >= d2 || k < 0 || k >= d3)
            throw parse_error(what + ": entry " + std::to_string(n) + " index out of range");
        Rat c = rat_parse(e[3].get<std::string>());
        sv_add_term(acc[{i, j}], k, c);
    }
    std::map<std::pair<int, int>, SparseVec> out;
    for (auto& [ij, m] : acc) {
        SparseVec v = sv_from_map(m);
        if (!v.empty()) out[ij] = std::move(v);
    }
    return out;
}

}  // namespace io_detail

inline AlgebraSpec algebra_from_json(const Json& j, const std::string& what = "algebra") {
    using io_detail::require_field;
    require_field(j, "kind", what);
    std::string kind = j["kind"].get<std::string>();
    if (kind != "lie" && kind != "assoc-comm-unital")
        throw parse_error(what + ": field 'kind' must be 'lie' or 'assoc-comm-unital'");
    require_field(j, "dim", what);
    AlgebraSpec a;
    a.kind = kind == "lie" ? AlgebraKind::lie : AlgebraKind::assoc_comm_unital;
    a.dim = j["dim"].get<int>();
    if (a.dim < 0) throw parse_error(what + ": field 'dim' must be nonnegative");
    a.name = j.value("name", std::string("unnamed"));
    if (j.contains("basis")) a.basis_labels = j["basis"].get<std::vector<std::string>>();
    if (j.contains("unit_index")) a.unit_index = j["unit_index"].get<int>();
    if (a.kind == AlgebraKind::assoc_comm_unital && !a.unit_index)
        throw parse_error(what + ": assoc-comm-unital algebra needs field 'unit_index'");
    if (j.contains("product"))
        a.product = io_detail::parse_entries(j["product"], a.dim, a.dim, a.dim, what + ".product");
    return a;
}

inline ModuleActionSpec module_from_json(const Json& j, const std::string& what = "module") {
    using io_detail::require_field;
    require_field(j, "algebra", what);
    ModuleActionSpec m;
    if (j["algebra"].is_string())
        m.algebra = catalog_algebra(j["algebra"].get<std::string>());
    else
        m.algebra = algebra_from_json(j["algebra"], what + ".algebra");
    require_field(j, "dim", what);
    m.dim = j["dim"].get<int>();
    if (j.contains("action"))
        m.action = io_detail::parse_entries(j["action"], m.algebra.dim, m.dim, m.dim, what + ".action");
    return m;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

// Root datum file: {"type": "A", "rank": n, "n_overrides": [[i, j, "c"], ...]}.
inline RootDatum rootdatum_from_json(const Json& j, const std::string& what = "rootdatum") {
    using io_detail::require_field;
    require_field(j, "type", what);
    require_field(j, "rank", what);
    RootDatum rd;
    std::string t = j["type"].get<std::string>();
    if (t.size() != 1 || t[0] < 'A' || t[0] > 'D')
        throw parse_error(what + ": field 'type' must be one of A, B, C, D");
    rd.type = t[0];
    rd.rank = j["rank"].get<int>();
    if (j.contains("n_overrides"))
        for (const auto& e : j["n_overrides"]) {
            if (!e.is_array() || e.size() != 3)
                throw parse_error(what + ": n_overrides entries are [i, j, \"c\"]");
            Rat c = rat_parse(e[2].get<std::string>());
            if (denominator(c) != 1) throw parse_error(what + ": N constants must be integers");
            rd.n_overrides.emplace_back(e[0].get<int>(), e[1].get<int>(),
                                        numerator(c).convert_to<long long>());
        }
    return rd;
}

// ---------------------------------------------------------------------------
// Report schema (versioned).
// ---------------------------------------------------------------------------

inline Json report_to_json(const VerificationReport& r) {
    Json j;
    j["schema"] = 1;
    j["theorem"] = theorem_id_str(r.theorem_id);
    j["instance"] = Json{{"lie", r.lie}, {"module", r.module}, {"assoc", r.assoc}, {"coeff", r.coeff}};
    j["direct_dim"] = r.direct_dim;
    j["formula_dim"] = r.formula_dim;
    Json sums = Json::array();
    for (const auto& s : r.summands) sums.push_back(Json{{"label", s.label}, {"dim", s.dim}});
    j["summands"] = std::move(sums);
    j["match"] = r.match;
    j["checks"] = r.checks;
    Json wit = Json::array();
    for (const auto& w : r.witnesses) {
        Json coords = Json::array();
        for (const auto& [c, v] : w.cochain.coords) coords.push_back(Json::array({c, rat_str(v)}));
        wit.push_back(Json{{"label", w.label}, {"coords", std::move(coords)}});
    }
    j["witnesses"] = std::move(wit);
    return j;
}

// Round-trip parse of the dimension-level report content (witness cochains come
// back as raw coordinate vectors; descriptors are not serialized).
struct ParsedReport {
    int schema = 0;
    std::string theorem;
    std::string lie, module, assoc, coeff;
    long long direct_dim = -1, formula_dim = -1;
    std::vector<SummandDim> summands;
    bool match = false;
    std::vector<std::string> checks;
    std::vector<std::pair<std::string, SparseVec>> witnesses;
};

inline ParsedReport report_from_json(const Json& j) {
    using io_detail::require_field;
    ParsedReport r;
    require_field(j, "schema", "report");
    r.schema = j["schema"].get<int>();
    if (r.schema != 1) throw parse_error("report: unsupported schema version");
    r.theorem = j["theorem"].get<std::string>();
    r.lie = j["instance"].value("lie", "");
    r.module = j["instance"].value("module", "");
    r.assoc = j["instance"].value("assoc", "");
    r.coeff = j["instance"].value("coeff", "");
    r.direct_dim = j["direct_dim"].get<long long>();
    r.formula_dim = j["formula_dim"].get<long long>();
    for (const auto& s : j["summands"])
        r.summands.push_back({s["label"].get<std::string>(), s["dim"].get<long long>()});
    r.match = j["match"].get<bool>();
    r.checks = j["checks"].get<std::vector<std::string>>();
    for (const auto& w : j["witnesses"]) {
        SparseVec v;
        for (const auto& e : w["coords"]) v.emplace_back(e[0].get<int>(), rat_parse(e[1].get<std::string>()));
        r.witnesses.emplace_back(w["label"].get<std::string>(), std::move(v));
    }
    return r;
}

}  // namespace cce
