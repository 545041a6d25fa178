// Command-line driver: analyze, cover, atlas, verify, schema.
// Exit codes: 0 success, 1 error or failed check, 2 undetermined (non-split) classification.

#include "quadrics/quadrics.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace quadrics;
using report::json;

namespace {

QuadricInput load(const std::string& path, const AnalysisConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return quadric_from_source(parse_source(ss.str()), path, cfg);
}

void emit(const json& doc, const std::string& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(out, std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write '" + out + "'");
    o << text;
}

int verdict_exit(const AnalysisReport& r) { return r.classification.verdict == Verdict::UndeterminedNonSplit ? 2 : 0; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noncommutative quadric hypersurfaces: Clifford deformations and their classification"};
    app.require_subcommand(1);
    app.fallthrough();

    AnalysisConfig cfg;
    std::string out;
    app.add_option("--truncation", cfg.truncation, "rewriting truncation degree (0 = 2n+2)")->envname("QUADRICS_TRUNCATION");
    app.add_option("--search-height", cfg.search_height, "coefficient bound for idempotent searches")
        ->envname("QUADRICS_SEARCH_HEIGHT");
    app.add_option("--search-attempts", cfg.search_attempts, "random draws per search")->envname("QUADRICS_SEARCH_ATTEMPTS");
    app.add_option("--frobenius-attempts", cfg.frobenius_attempts, "random functionals for the Frobenius search")
        ->envname("QUADRICS_FROBENIUS_ATTEMPTS");
    app.add_option("--regularity-degree", cfg.regularity_degree, "check regularity of f up to this degree (0 = skip)")
        ->envname("QUADRICS_REGULARITY_DEGREE");
    app.add_option("--seed", cfg.seed, "random seed")->envname("QUADRICS_SEED");
    app.add_option("-o,--out", out, "write the report here instead of stdout");

    std::string file, with, check, grid;
    int times = 1;
    std::size_t jobs = 1;

    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of a quadric file");
    analyze_cmd->add_option("file", file)->required();

    auto* cover_cmd = app.add_subcommand("cover", "analyze the double branch cover (times 2: Knorrer check)");
    cover_cmd->add_option("file", file)->required();
    cover_cmd->add_option("--times", times)->check(CLI::IsMember({1, 2}));

    auto* atlas_cmd = app.add_subcommand("atlas", "sweep a conic parameter grid into newline-delimited JSON");
    atlas_cmd->add_option("--grid", grid, "e.g. 'family=commutative;abg=(0,0,0);abc=(1,0,0)|(1,1,0)|(1,1,1)'")->required();
    atlas_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run one check; exit 0 iff it passes");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--check", check)->required()->check(CLI::IsMember({"tensor", "knorrer", "rank", "copy"}));
    verify_cmd->add_option("--with", with, "second quadric file for --check tensor");

    app.add_subcommand("schema", "print the report schema");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("schema")) {
            emit(report::schema(), out);
            return 0;
        }
        if (*analyze_cmd) {
            const AnalysisReport r = analyze(load(file, cfg), cfg);
            emit(report::document("analysis", cfg, report::analysis(r)), out);
            return verdict_exit(r);
        }
        if (*cover_cmd) {
            const QuadricInput q = load(file, cfg);
            json result{{"times", times}};
            if (times == 1) {
                const AnalysisReport a = analyze(q, cfg), c = analyze(double_cover(q, cfg), cfg);
                result["original_verdict"] = verdict_name(a.classification.verdict);
                result["covered_verdict"] = verdict_name(c.classification.verdict);
                result["covered_mcm_count"] = c.mcm_count ? json(*c.mcm_count) : json(nullptr);
                result["original"] = report::analysis(a);
                result["covered"] = report::analysis(c);
                emit(report::document("cover", cfg, result), out);
                return verdict_exit(c);
            }
            const KnorrerCheck k = knorrer_check(q, cfg);
            result["original_verdict"] = verdict_name(k.original.classification.verdict);
            result["covered_verdict"] = verdict_name(k.covered.classification.verdict);
            result["covered_mcm_count"] = k.covered.mcm_count ? json(*k.covered.mcm_count) : json(nullptr);
            result["knorrer_equal"] = k.ok();
            result["original"] = report::analysis(k.original);
            result["covered"] = report::analysis(k.covered);
            emit(report::document("cover", cfg, result), out);
            return verdict_exit(k.covered);
        }
        if (*atlas_cmd) {
            if (out.empty()) throw std::runtime_error("atlas needs --out");
            const auto res = atlas::sweep(atlas::parse_grid(grid), out, cfg, jobs, grid);
            std::cerr << "atlas: " << res.total << " points, " << res.computed << " computed, " << res.reused << " reused\n";
            return 0;
        }
        if (*verify_cmd) {
            const QuadricInput q = load(file, cfg);
            json result;
            bool ok = false;
            if (check == "tensor") {
                if (with.empty()) throw std::runtime_error("--check tensor needs --with <file>");
                const TensorCheck t = verify_tensor_decomposition(q, load(with, cfg), cfg);
                result = report::tensor_check(t);
                ok = t.ok;
            } else if (check == "knorrer") {
                const KnorrerCheck k = knorrer_check(q, cfg);
                result = report::knorrer_check(k);
                ok = k.ok();
            } else if (check == "rank") {
                if (q.witness.empty()) throw std::runtime_error("input has no witness");
                ok = verify_rank_witness(q, q.witness);
                result = {{"ok", ok}, {"rank_bound", q.witness.size()}};
            } else {
                const CoverCheck c = conic_cover_check(q, cfg);
                result = report::cover_check(c);
                ok = c.ok();
            }
            emit(report::document("verify-" + check, cfg, result), out);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
