#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "bisim.hpp"
#include "charform.hpp"
#include "formula.hpp"
#include "morphisms.hpp"
#include "poset.hpp"

namespace cotree {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cotree-lab/1";

inline Json tagged(const char* kind) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = kind;
    return j;
}

inline void check_schema(const Json& j) {
    if (!j.is_object()) throw Error("expected a JSON object");
    if (j.contains("schema") && j["schema"] != kSchema)
        throw Error("unsupported schema " + j["schema"].dump() + ", expected \"" + kSchema + "\"");
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw Error(path + ": malformed JSON: " + e.what());
    }
}

// ---- sets ----

inline Json set_to_json(const Poset& p, PointSet s) {
    Json a = Json::array();
    for (auto x : members(s)) a.push_back(p.label(x));
    return a;
}

inline PointSet set_from_json(const Poset& p, const Json& j) {
    if (!j.is_array()) throw Error("a point set is a list of labels");
    std::vector<std::string> names;
    for (auto& e : j) names.push_back(e.get<std::string>());
    return p.set_of(names);
}

// ---- posets ----

inline Json poset_to_json(const Poset& p) {
    Json j = tagged("poset");
    j["elements"] = p.labels();
    Json c = Json::array();
    for (auto [lo, hi] : p.cover_pairs()) c.push_back({p.label(lo), p.label(hi)});
    j["covers"] = c;
    return j;
}

inline Poset poset_from_json(const Json& j) {
    check_schema(j);
    if (j.contains("kind") && j["kind"] != "poset") throw Error("expected a poset, got " + j["kind"].dump());
    if (!j.contains("elements") || !j["elements"].is_array()) throw Error("poset needs an \"elements\" list");
    std::vector<std::string> labels;
    for (auto& e : j["elements"]) {
        if (!e.is_string()) throw Error("poset element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        for (auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                throw Error("each cover is a [lower, upper] pair of labels");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }
    return build_poset(labels, covers);
}

// ---- algebras ----

inline Json table_to_json(std::size_t k, const std::vector<Elem>& t) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < k; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < k; ++b) row.push_back(t[a * k + b]);
        rows.push_back(row);
    }
    return rows;
}

inline Json algebra_to_json(const BiHeytingAlgebra& a) {
    const auto& t = a.tables();
    Json j = tagged("algebra");
    j["elements"] = t.names;
    j["bot"] = t.bot;
    j["top"] = t.top;
    Json leq = Json::array();
    for (std::size_t x = 0; x < t.k; ++x) {
        Json row = Json::array();
        for (std::size_t y = 0; y < t.k; ++y) row.push_back(t.leq[x * t.k + y] ? 1 : 0);
        leq.push_back(row);
    }
    j["leq"] = leq;
    j["meet"] = table_to_json(t.k, t.meet);
    j["join"] = table_to_json(t.k, t.join);
    j["imp"] = table_to_json(t.k, t.imp);
    j["coimp"] = table_to_json(t.k, t.coimp);
    return j;
}

inline std::vector<Elem> table_from_json(const Json& j, std::size_t k, const char* what) {
    if (!j.is_array() || j.size() != k) throw Error(std::string(what) + " table must have one row per element");
    std::vector<Elem> out;
    for (auto& row : j) {
        if (!row.is_array() || row.size() != k) throw Error(std::string(what) + " table row has wrong length");
        for (auto& v : row) {
            if (!v.is_number_unsigned() || v.get<std::size_t>() >= k) throw Error(std::string(what) + " table entry out of range");
            out.push_back(v.get<Elem>());
        }
    }
    return out;
}

// Accepts an algebra with tables (only "leq" is required) or a poset, read as its upset algebra.
inline BiHeytingAlgebra algebra_from_json(const Json& j) {
    check_schema(j);
    if (j.value("kind", "") == "poset" || (j.contains("covers") && !j.contains("leq"))) return upset_algebra(poset_from_json(j)).alg;
    if (j.contains("kind") && j["kind"] != "algebra") throw Error("expected an algebra, got " + j["kind"].dump());
    if (!j.contains("leq")) throw Error("algebra needs a \"leq\" matrix");
    const std::size_t k = j["leq"].size();
    BiHeytingAlgebra::Tables t;
    t.k = k;
    for (auto& row : j["leq"]) {
        if (!row.is_array() || row.size() != k) throw Error("leq must be a square matrix");
        for (auto& v : row) {
            if (!v.is_number_integer() || (v != 0 && v != 1)) throw Error("leq entries must be 0 or 1");
            t.leq.push_back(v.get<int>() != 0);
        }
    }
    if (j.contains("elements"))
        for (auto& e : j["elements"]) t.names.push_back(e.get<std::string>());
    auto derived = BiHeytingAlgebra::from_order(k, t.leq, t.names);
    t.bot = j.contains("bot") ? j["bot"].get<Elem>() : derived.bot();
    t.top = j.contains("top") ? j["top"].get<Elem>() : derived.top();
    if (j.contains("meet")) t.meet = table_from_json(j["meet"], k, "meet");
    if (j.contains("join")) t.join = table_from_json(j["join"], k, "join");
    if (j.contains("imp")) t.imp = table_from_json(j["imp"], k, "imp");
    if (j.contains("coimp")) t.coimp = table_from_json(j["coimp"], k, "coimp");
    return BiHeytingAlgebra::from_tables(t);
}

// Element reference: index or element name.
inline Elem elem_from_json(const BiHeytingAlgebra& a, const Json& j) {
    if (j.is_number_unsigned()) {
        if (j.get<std::size_t>() >= a.size()) throw Error("element index out of range");
        return j.get<Elem>();
    }
    if (j.is_string()) {
        for (Elem e = 0; e < a.size(); ++e)
            if (a.name(e) == j.get<std::string>()) return e;
        throw Error("no element named " + j.dump());
    }
    throw Error("an element is an index or a name");
}

// ---- formulas, valuations, maps ----

inline Json valuation_to_json(const BiHeytingAlgebra& a, const Valuation& v) {
    Json j = Json::object();
    std::vector<std::string> names;
    for (auto& [k, _] : v) names.push_back(k);
    std::sort(names.begin(), names.end(), NaturalLess{});
    for (auto& n : names) j[n] = {{"index", v.at(n)}, {"name", a.name(v.at(n))}};
    return j;
}

inline Valuation valuation_from_json(const BiHeytingAlgebra& a, const Json& j) {
    if (!j.is_object()) throw Error("a valuation is an object from variables to elements");
    Valuation v;
    for (auto& [k, e] : j.items()) v[k] = elem_from_json(a, e.is_object() ? e.at("index") : e);
    return v;
}

inline Json coloring_to_json(const Poset& p, const Coloring& c) {
    Json j = Json::object();
    std::vector<std::string> names;
    for (auto& [k, _] : c) names.push_back(k);
    std::sort(names.begin(), names.end(), NaturalLess{});
    for (auto& n : names) j[n] = set_to_json(p, c.at(n));
    return j;
}

inline Json map_to_json(const Poset& src, const Poset& dst, const PosetMap& f) {
    Json j = tagged("map");
    j["indices"] = f.map;
    Json named = Json::object();
    for (std::size_t x = 0; x < f.map.size(); ++x) named[src.label(x)] = dst.label(f(x));
    j["labels"] = named;
    return j;
}

inline Json partition_to_json(const Poset& p, const EquivPartition& e) {
    Json j = Json::array();
    for (auto b : e.blocks()) j.push_back(set_to_json(p, b));
    return j;
}

inline EquivPartition partition_from_json(const Poset& p, const Json& j) {
    if (!j.is_array()) throw Error("a partition is a list of blocks");
    std::vector<PointSet> blocks;
    for (auto& b : j) blocks.push_back(set_from_json(p, b));
    return EquivPartition(p.size(), blocks);
}

inline Json domain_to_json(const StableDomain& d) {
    Json j = Json::array();
    for (auto [a, b] : d.pairs) j.push_back({a, b});
    return j;
}

inline StableDomain domain_from_json(const BiHeytingAlgebra& a, const Json& j) {
    if (!j.is_array()) throw Error("a stable domain is a list of element pairs");
    StableDomain d;
    for (auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw Error("each domain entry is a pair");
        d.pairs.emplace_back(elem_from_json(a, p[0]), elem_from_json(a, p[1]));
    }
    return d;
}

}  // namespace cotree
