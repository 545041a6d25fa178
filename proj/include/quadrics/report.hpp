#pragma once

// JSON documents for analysis results. Scalars are exact strings ("a/b+c/d i"); every
// document carries schema_version and the config that produced it.

#include "hypersurface.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace quadrics::report {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json scalar(const Scalar& s) { return s.to_string(); }
inline Scalar parse_scalar(const json& j) { return Scalar::parse(j.get<std::string>()); }

inline json vec(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar(s));
    return out;
}
inline Vec parse_vec(const json& j) {
    Vec v;
    for (const auto& s : j) v.push_back(parse_scalar(s));
    return v;
}

// coefficients from the constant term up
inline json poly(const Poly& p) { return vec(p.coeffs()); }
inline Poly parse_poly(const json& j) { return Poly(parse_vec(j)); }

inline json sizes(const std::vector<std::size_t>& v) { return json(v); }

inline json config(const AnalysisConfig& c) {
    return {{"truncation", c.truncation},
            {"search_height", c.search_height},
            {"search_attempts", c.search_attempts},
            {"frobenius_attempts", c.frobenius_attempts},
            {"regularity_degree", c.regularity_degree},
            {"seed", c.seed}};
}

inline AnalysisConfig parse_config(const json& j) {
    AnalysisConfig c;
    c.truncation = j.at("truncation").get<std::size_t>();
    c.search_height = j.at("search_height").get<long>();
    c.search_attempts = j.at("search_attempts").get<std::size_t>();
    c.frobenius_attempts = j.at("frobenius_attempts").get<std::size_t>();
    c.regularity_degree = j.at("regularity_degree").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

inline BlockKind parse_kind(const std::string& s) {
    for (auto k : {BlockKind::MatrixOverBase, BlockKind::FieldExtension, BlockKind::CentralSimpleUndetermined,
                   BlockKind::LocalCommutative, BlockKind::NonSemisimple})
        if (kind_name(k) == s) return k;
    throw std::invalid_argument("unknown block kind '" + s + "'");
}

inline json block(const Block& b) {
    json j{{"dim", b.dim}, {"kind", kind_name(b.kind)}, {"simple_count", b.simple_count}};
    if (b.kind == BlockKind::MatrixOverBase) j["matrix_size"] = b.matrix_size;
    if (!b.center_poly.is_zero()) j["center_poly"] = poly(b.center_poly);
    if (!b.radical_layers.empty()) j["radical_layers"] = sizes(b.radical_layers);
    j["idempotent"] = vec(b.idempotent);
    return j;
}

inline Block parse_block(const json& j) {
    Block b;
    b.dim = j.at("dim").get<std::size_t>();
    b.kind = parse_kind(j.at("kind").get<std::string>());
    b.simple_count = j.at("simple_count").get<std::size_t>();
    if (j.contains("matrix_size")) b.matrix_size = j["matrix_size"].get<std::size_t>();
    if (j.contains("center_poly")) b.center_poly = parse_poly(j["center_poly"]);
    if (j.contains("radical_layers")) b.radical_layers = j["radical_layers"].get<std::vector<std::size_t>>();
    b.idempotent = parse_vec(j.at("idempotent"));
    return b;
}

inline json blocks(const BlockReport& r) {
    json list = json::array();
    for (const auto& b : r.blocks) list.push_back(block(b));
    return {{"count", r.count()}, {"dims", sizes(r.dims())}, {"radical_dim", r.radical_dim}, {"blocks", list}};
}

inline BlockReport parse_blocks(const json& j) {
    BlockReport r;
    r.radical_dim = j.at("radical_dim").get<std::size_t>();
    for (const auto& b : j.at("blocks")) r.blocks.push_back(parse_block(b));
    return r;
}

inline json classification(const ClassificationReport& r) {
    json graded = json::array();
    for (const auto& g : r.graded_blocks)
        graded.push_back({{"dim", g.dim}, {"type", graded_type_name(g.type)}, {"degree0", blocks(g.degree0)}});
    json j{{"verdict", verdict_name(r.verdict)},
           {"dim", r.dim},
           {"radical_dim", r.radical_dim},
           {"strongly_graded", r.strongly_graded},
           {"graded_blocks", graded},
           {"degree0", blocks(r.degree0)},
           {"degree0_simple_count", r.degree0_simple_count}};
    if (r.verdict != Verdict::NotGradedSemisimple) {
        const MoritaInvariant inv = graded_morita_invariant(r);
        json mb = json::array();
        for (const auto& [type, s] : inv.blocks) mb.push_back({{"type", type}, {"sizes", sizes(s)}});
        j["morita_invariant"] = {{"blocks", mb}, {"mcm_count", inv.mcm_count}};
    }
    return j;
}

inline std::string polynomial_string(const Vec& lift, const std::vector<std::string>& gens) {
    return QuadraticPresentation::to_free_poly(lift, gens.size()).to_string(gens);
}

inline json presentation(const QuadraticPresentation& p) {
    json rels = json::array();
    for (std::size_t k = 0; k < p.relations().size(); ++k) rels.push_back(p.relation_string(k));
    return {{"generators", p.gens()}, {"relations", rels}};
}

inline json analysis(const AnalysisReport& r) {
    return {{"label", r.label},
            {"algebra", presentation(r.algebra)},
            {"central", polynomial_string(r.f.lift, r.algebra.gens())},
            {"regularity_degree", r.regularity_degree},
            {"dual", presentation(r.dual)},
            {"theta", vec(r.theta)},
            {"clifford",
             {{"dim", r.clifford_dim},
              {"even_dim", r.even_dim},
              {"odd_dim", r.odd_dim},
              {"dual_dim", r.dual_dim},
              {"dim_is_power_of_two", r.dim_is_power_of_two},
              {"basis", r.clifford.labels()}}},
            {"checks",
             {{"dimension_invariance", r.checks.dimension_invariance},
              {"strongly_graded", r.checks.strongly_graded},
              {"frobenius_found", r.checks.frobenius_found}}},
            {"classification", classification(r.classification)},
            {"mcm_count", r.mcm_count ? json(*r.mcm_count) : json(nullptr)},
            {"ungraded_block_count", r.ungraded_block_count},
            {"ungraded", blocks(r.ungraded)}};
}

inline json tensor_check(const TensorCheck& t) {
    return {{"ok", t.ok},
            {"presentations_equal", t.presentations_equal},
            {"lhs_dim", t.lhs_dim},
            {"rhs_dim", t.rhs_dim},
            {"isomorphism",
             {{"bijective", t.iso.bijective}, {"multiplicative", t.iso.multiplicative}, {"unital", t.iso.unital}, {"graded", t.iso.graded}}},
            {"detail", t.detail}};
}

inline json knorrer_check(const KnorrerCheck& k) {
    return {{"ok", k.ok()},
            {"applicable", k.applicable},
            {"invariant_equal", k.invariant_equal},
            {"mcm_equal", k.mcm_equal},
            {"original", analysis(k.original)},
            {"covered", analysis(k.covered)}};
}

inline json cover_check(const CoverCheck& c) {
    return {{"ok", c.ok()},
            {"commutative", c.commutative},
            {"copy_ok", c.copy_ok},
            {"factor_dims", sizes(c.factor_dims)},
            {"block_dims", sizes(c.c_block_dims)},
            {"degree0_block_dims", sizes(c.c0_block_dims)},
            {"count_ok", c.count_ok},
            {"report", analysis(c.report)}};
}

inline json document(const std::string& kind, const AnalysisConfig& cfg, json result) {
    return {{"schema_version", schema_version}, {"kind", kind}, {"config", config(cfg)}, {"result", std::move(result)}};
}

// ---------------------------------------------------------------- schema

/// Schema subset: type (string or list), required, properties, items, enum.
inline const json& schema() {
    static const json s = json::parse(R"({
  "type": "object",
  "required": ["schema_version", "kind", "config", "result"],
  "properties": {
    "schema_version": {"type": "integer", "enum": [1]},
    "kind": {"type": "string", "enum": ["analysis", "cover", "verify-tensor", "verify-knorrer", "verify-rank", "verify-copy", "atlas-record"]},
    "config": {
      "type": "object",
      "required": ["truncation", "search_height", "search_attempts", "frobenius_attempts", "regularity_degree", "seed"],
      "properties": {
        "truncation": {"type": "integer"}, "search_height": {"type": "integer"}, "search_attempts": {"type": "integer"},
        "frobenius_attempts": {"type": "integer"}, "regularity_degree": {"type": "integer"}, "seed": {"type": "integer"}
      }
    },
    "result": {"type": "object"}
  },
  "definitions": {
    "blocks": {
      "type": "object",
      "required": ["count", "dims", "radical_dim", "blocks"],
      "properties": {
        "count": {"type": "integer"},
        "dims": {"type": "array", "items": {"type": "integer"}},
        "radical_dim": {"type": "integer"},
        "blocks": {"type": "array", "items": {
          "type": "object",
          "required": ["dim", "kind", "simple_count", "idempotent"],
          "properties": {
            "dim": {"type": "integer"},
            "kind": {"type": "string", "enum": ["matrix-over-base", "field-extension", "central-simple-undetermined", "local-commutative", "non-semisimple"]},
            "simple_count": {"type": "integer"},
            "matrix_size": {"type": "integer"},
            "center_poly": {"type": "array", "items": {"type": "string"}},
            "radical_layers": {"type": "array", "items": {"type": "integer"}},
            "idempotent": {"type": "array", "items": {"type": "string"}}
          }
        }}
      }
    },
    "analysis": {
      "type": "object",
      "required": ["label", "algebra", "central", "dual", "theta", "clifford", "checks", "classification", "mcm_count", "ungraded_block_count", "ungraded"],
      "properties": {
        "label": {"type": "string"},
        "central": {"type": "string"},
        "theta": {"type": "array", "items": {"type": "string"}},
        "clifford": {"type": "object", "required": ["dim", "even_dim", "odd_dim", "dual_dim", "dim_is_power_of_two"]},
        "checks": {"type": "object", "required": ["dimension_invariance", "strongly_graded", "frobenius_found"]},
        "classification": {
          "type": "object",
          "required": ["verdict", "dim", "radical_dim", "strongly_graded", "graded_blocks", "degree0", "degree0_simple_count"],
          "properties": {
            "verdict": {"type": "string", "enum": ["simple-0-type", "simple-1-type", "graded-semisimple-not-simple", "not-graded-semisimple", "undetermined-nonsplit"]},
            "degree0": {"$ref": "blocks"}
          }
        },
        "mcm_count": {"type": ["integer", "null"]},
        "ungraded_block_count": {"type": "integer"},
        "ungraded": {"$ref": "blocks"}
      }
    },
    "atlas-record": {
      "type": "object",
      "required": ["key", "params", "status"],
      "properties": {
        "key": {"type": "string"},
        "status": {"type": "string", "enum": ["ok", "non-central", "not-regular", "error"]},
        "params": {"type": "object", "required": ["family", "alpha", "beta", "gamma", "a", "b", "c"]}
      }
    }
  }
})");
    return s;
}

namespace detail {

inline bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "number") return v.is_number();
    return false;
}

inline void validate_node(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) {
    if (s.contains("$ref")) {
        validate_node(v, schema()["definitions"][s["$ref"].get<std::string>()], path, errors);
        return;
    }
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto& t : s["type"]) ok = ok || type_matches(v, t.get<std::string>());
        } else {
            ok = type_matches(v, s["type"].get<std::string>());
        }
        if (!ok) {
            errors.push_back(path + ": expected " + s["type"].dump());
            return;
        }
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
        errors.push_back(path + ": value " + v.dump() + " not allowed");
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& key : s["required"])
                if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing '" + key.get<std::string>() + "'");
        if (s.contains("properties"))
            for (const auto& [key, sub] : s["properties"].items())
                if (v.contains(key)) validate_node(v[key], sub, path + "." + key, errors);
    }
    if (v.is_array() && s.contains("items"))
        for (std::size_t k = 0; k < v.size(); ++k) validate_node(v[k], s["items"], path + "[" + std::to_string(k) + "]", errors);
}

inline void check_block_counts(const json& b, const std::string& path, std::vector<std::string>& errors) {
    if (!b.is_object() || !b.contains("blocks")) return;
    if (b["count"] != b["blocks"].size()) errors.push_back(path + ": count differs from the stored blocks");
    std::vector<std::size_t> dims;
    for (const auto& x : b["blocks"]) dims.push_back(x["dim"].get<std::size_t>());
    if (b["dims"] != json(dims)) errors.push_back(path + ": dims differ from the stored blocks");
}

}  // namespace detail

/// Schema errors plus consistency of counts with the stored block data; empty when valid.
inline std::vector<std::string> validate(const json& doc) {
    std::vector<std::string> errors;
    detail::validate_node(doc, schema(), "$", errors);
    if (!errors.empty()) return errors;
    const std::string kind = doc["kind"];
    const json& result = doc["result"];
    auto check_analysis = [&](const json& a, const std::string& path) {
        detail::validate_node(a, schema()["definitions"]["analysis"], path, errors);
        if (!errors.empty()) return;
        detail::check_block_counts(a["ungraded"], path + ".ungraded", errors);
        detail::check_block_counts(a["classification"]["degree0"], path + ".classification.degree0", errors);
        if (a["ungraded_block_count"] != a["ungraded"]["count"])
            errors.push_back(path + ": ungraded_block_count differs from the stored blocks");
        const bool semisimple = a["classification"]["verdict"] != "not-graded-semisimple";
        if (semisimple && a["mcm_count"] != a["classification"]["degree0"]["count"])
            errors.push_back(path + ": mcm_count differs from the degree-0 blocks");
        if (!semisimple && !a["mcm_count"].is_null()) errors.push_back(path + ": mcm_count set without graded semisimplicity");
    };
    if (kind == "analysis") check_analysis(result, "$.result");
    if (kind == "cover") {
        check_analysis(result.value("original", json::object()), "$.result.original");
        check_analysis(result.value("covered", json::object()), "$.result.covered");
    }
    if (kind == "verify-knorrer") {
        check_analysis(result.value("original", json::object()), "$.result.original");
        check_analysis(result.value("covered", json::object()), "$.result.covered");
    }
    if (kind == "verify-copy") check_analysis(result.value("report", json::object()), "$.result.report");
    if (kind == "atlas-record") detail::validate_node(result, schema()["definitions"]["atlas-record"], "$.result", errors);
    return errors;
}

}  // namespace quadrics::report
