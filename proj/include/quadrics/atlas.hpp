#pragma once

// Sweeps over conic parameter grids. Output is newline-delimited JSON, one record per grid
// point in grid order; timestamps live only in the "<out>.meta.json" sidecar.

#include "report.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace quadrics::atlas {

using report::json;

/// Grid text: ';'-separated fields.
///   family=skew|commutative              (default skew)
///   alpha=..., beta=..., gamma=..., a=..., b=..., c=...   comma-separated scalar lists
///   abg=(0,0,0)|(1,1,0)                  tuples for (alpha,beta,gamma)
///   abc=(1,0,0)|(1,1,0)                  tuples for (a,b,c)
/// Integer ranges "lo..hi" are allowed inside lists. Unset coordinates default to 0.
struct Grid {
    std::vector<ConicFamily> families{ConicFamily::Skew};
    std::vector<std::array<Scalar, 3>> abg, abc;
    std::vector<ConicParams> points() const;
};

namespace detail {

inline std::string trim(std::string s) {
    auto issp = [](unsigned char ch) { return std::isspace(ch); };
    while (!s.empty() && issp(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(trim(cur));
    return out;
}

inline std::vector<Scalar> scalar_list(const std::string& text) {
    std::vector<Scalar> out;
    for (const auto& item : split(text, ',')) {
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const long lo = std::stol(item.substr(0, dots)), hi = std::stol(item.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("grid: empty range '" + item + "'");
            for (long v = lo; v <= hi; ++v) out.push_back(Scalar(v));
        } else {
            out.push_back(Scalar::parse(item));
        }
    }
    return out;
}

inline std::vector<std::array<Scalar, 3>> tuple_list(const std::string& text) {
    std::vector<std::array<Scalar, 3>> out;
    for (const auto& item : split(text, '|')) {
        if (item.size() < 2 || item.front() != '(' || item.back() != ')')
            throw std::invalid_argument("grid: expected a tuple '(u,v,w)', got '" + item + "'");
        auto parts = split(item.substr(1, item.size() - 2), ',');
        if (parts.size() != 3) throw std::invalid_argument("grid: tuple needs three entries: '" + item + "'");
        out.push_back({Scalar::parse(parts[0]), Scalar::parse(parts[1]), Scalar::parse(parts[2])});
    }
    return out;
}

inline std::vector<std::array<Scalar, 3>> product(const std::array<std::vector<Scalar>, 3>& axes) {
    std::vector<std::array<Scalar, 3>> out;
    for (const auto& u : axes[0])
        for (const auto& v : axes[1])
            for (const auto& w : axes[2]) out.push_back({u, v, w});
    return out;
}

}  // namespace detail

inline Grid parse_grid(const std::string& text) {
    Grid g;
    std::array<std::vector<Scalar>, 3> abg_axes{{{Scalar(0)}, {Scalar(0)}, {Scalar(0)}}};
    std::array<std::vector<Scalar>, 3> abc_axes{{{Scalar(0)}, {Scalar(0)}, {Scalar(0)}}};
    bool abg_tuples = false, abc_tuples = false, abg_axes_set = false, abc_axes_set = false;
    for (const auto& field : detail::split(text, ';')) {
        if (field.empty()) continue;
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("grid: expected key=value, got '" + field + "'");
        const std::string key = detail::trim(field.substr(0, eq)), value = detail::trim(field.substr(eq + 1));
        if (key == "family") {
            g.families.clear();
            for (const auto& f : detail::split(value, ',')) {
                if (f == "skew") g.families.push_back(ConicFamily::Skew);
                else if (f == "commutative") g.families.push_back(ConicFamily::Commutative);
                else throw std::invalid_argument("grid: unknown family '" + f + "'");
            }
        } else if (key == "abg") {
            g.abg = detail::tuple_list(value);
            abg_tuples = true;
        } else if (key == "abc") {
            g.abc = detail::tuple_list(value);
            abc_tuples = true;
        } else {
            static const std::map<std::string, std::pair<int, int>> axes{{"alpha", {0, 0}}, {"beta", {0, 1}}, {"gamma", {0, 2}},
                                                                          {"a", {1, 0}},     {"b", {1, 1}},    {"c", {1, 2}}};
            auto it = axes.find(key);
            if (it == axes.end()) throw std::invalid_argument("grid: unknown key '" + key + "'");
            auto& target = it->second.first == 0 ? abg_axes : abc_axes;
            target[static_cast<std::size_t>(it->second.second)] = detail::scalar_list(value);
            (it->second.first == 0 ? abg_axes_set : abc_axes_set) = true;
        }
    }
    if ((abg_tuples && abg_axes_set) || (abc_tuples && abc_axes_set))
        throw std::invalid_argument("grid: use either tuples or per-coordinate lists, not both");
    if (!abg_tuples) g.abg = detail::product(abg_axes);
    if (!abc_tuples) g.abc = detail::product(abc_axes);
    return g;
}

inline std::vector<ConicParams> Grid::points() const {
    std::vector<ConicParams> out;
    for (auto fam : families)
        for (const auto& s : abg)
            for (const auto& t : abc) {
                if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) continue;
                out.push_back({fam, s[0], s[1], s[2], t[0], t[1], t[2]});
            }
    return out;
}

inline std::string key(const ConicParams& p) {
    return family_name(p.family) + ":" + p.alpha.to_string() + "," + p.beta.to_string() + "," + p.gamma.to_string() + ":" +
           p.a.to_string() + "," + p.b.to_string() + "," + p.c.to_string();
}

inline json params_json(const ConicParams& p) {
    return {{"family", family_name(p.family)}, {"alpha", report::scalar(p.alpha)}, {"beta", report::scalar(p.beta)},
            {"gamma", report::scalar(p.gamma)}, {"a", report::scalar(p.a)},         {"b", report::scalar(p.b)},
            {"c", report::scalar(p.c)}};
}

/// One dataset record; never throws for a bad point.
inline json analyze_point(const ConicParams& p, const AnalysisConfig& cfg) {
    json rec{{"key", key(p)}, {"params", params_json(p)}};
    if (p.family == ConicFamily::Commutative && !(p.alpha.is_zero() && p.beta.is_zero() && p.gamma.is_zero())) {
        rec["status"] = "error";
        rec["error"] = "the commutative family has alpha = beta = gamma = 0";
        return rec;
    }
    try {
        const QuadricInput q = conic(p, cfg);
        const CoverCheck cc = conic_cover_check(q, cfg);
        const AnalysisReport& r = cc.report;
        rec["status"] = "ok";
        rec["central"] = true;
        rec["verdict"] = verdict_name(r.classification.verdict);
        rec["clifford_dim"] = r.clifford_dim;
        rec["radical_dim"] = r.classification.radical_dim;
        rec["commutative"] = cc.commutative;
        rec["degree0_blocks"] = report::sizes(r.classification.degree0.dims());
        std::vector<std::string> kinds;
        for (const auto& b : r.classification.degree0.blocks) kinds.push_back(kind_name(b.kind));
        rec["degree0_kinds"] = kinds;
        rec["ungraded_blocks"] = report::sizes(r.ungraded.dims());
        rec["mcm_count"] = r.mcm_count ? json(*r.mcm_count) : json(nullptr);
        if (cc.commutative)
            rec["copy"] = {{"ok", cc.copy_ok}, {"factor_dims", report::sizes(cc.factor_dims)}, {"block_dims", report::sizes(cc.c_block_dims)},
                           {"count_ok", cc.count_ok}};
        else
            rec["copy"] = nullptr;
    } catch (const NotCentral&) {
        rec["status"] = "non-central";
        rec["central"] = false;
    } catch (const NotRegular& e) {
        rec["status"] = "not-regular";
        rec["central"] = true;
        rec["error"] = e.what();
    } catch (const std::exception& e) {
        rec["status"] = "error";
        rec["error"] = e.what();
    }
    return rec;
}

struct SweepResult {
    std::size_t total = 0, computed = 0, reused = 0;
};

/// Writes `out` (and the sidecar `out.meta.json`); records already present in `out` are
/// reused by key. Output order is grid order, then any foreign records in their old order.
inline SweepResult sweep(const Grid& grid, const std::string& out, const AnalysisConfig& cfg, std::size_t jobs,
                         const std::string& grid_text = "") {
    const auto points = grid.points();
    std::map<std::string, std::string> existing;
    std::vector<std::string> existing_order;
    if (std::ifstream in{out}) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                const json rec = json::parse(line);
                const std::string k = rec.at("result").at("key").get<std::string>();
                if (!existing.count(k)) existing_order.push_back(k);
                existing[k] = line;
            } catch (const std::exception&) {
                // a truncated last line from an interrupted run is recomputed
            }
        }
    }
    SweepResult res;
    res.total = points.size();
    std::vector<std::string> lines(points.size());
    std::vector<std::size_t> todo;
    for (std::size_t k = 0; k < points.size(); ++k) {
        auto it = existing.find(key(points[k]));
        if (it != existing.end()) {
            lines[k] = it->second;
            ++res.reused;
        } else {
            todo.push_back(k);
        }
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < todo.size(); t = next++) {
            const std::size_t k = todo[t];
            lines[k] = report::document("atlas-record", cfg, analyze_point(points[k], cfg)).dump();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    res.computed = todo.size();

    std::set<std::string> in_grid;
    for (const auto& p : points) in_grid.insert(key(p));
    const std::string tmp = out + ".tmp";
    {
        std::ofstream o(tmp, std::ios::trunc);
        if (!o) throw std::runtime_error("cannot write '" + out + "'");
        for (const auto& l : lines) o << l << "\n";
        for (const auto& k : existing_order)
            if (!in_grid.count(k)) o << existing[k] << "\n";
        if (!o) throw std::runtime_error("cannot write '" + out + "'");
    }
    if (std::rename(tmp.c_str(), out.c_str()) != 0) throw std::runtime_error("cannot write '" + out + "'");

    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    json meta{{"schema_version", report::schema_version}, {"grid", grid_text}, {"config", report::config(cfg)},
              {"jobs", jobs},     {"points", res.total},   {"computed", res.computed}, {"reused", res.reused},
              {"finished_at", stamp}};
    std::ofstream(out + ".meta.json", std::ios::trunc) << meta.dump(2) << "\n";
    return res;
}

}  // namespace quadrics::atlas
