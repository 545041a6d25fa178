#include "quadrics/quadrics.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace quadrics;
using report::json;
namespace fs = std::filesystem;

namespace {

const AnalysisReport& plane() {
    static const AnalysisReport r = analyze(corpus::plane_sum_of_squares());
    return r;
}

const AnalysisReport& worked() {
    static const AnalysisReport r = analyze(corpus::worked_conic());
    return r;
}

std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("quadrics_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::string& args) {
    const fs::path out = scratch("cli_stdout.txt");
    const std::string cmd = std::string(QUADRICS_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string data(const std::string& name) { return std::string(QUADRICS_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Report, ScalarVecPolyRoundTrip) {
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar s = Scalar(mpq_class(testutil::small_int(-50, 50), testutil::small_int(1, 9)),
                                mpq_class(testutil::small_int(-50, 50), testutil::small_int(1, 9)));
        EXPECT_EQ(report::parse_scalar(report::scalar(s)), s);
        Vec v(static_cast<std::size_t>(testutil::small_int(0, 5)));
        for (auto& x : v) x = testutil::small_scalar(7);
        EXPECT_EQ(report::parse_vec(report::vec(v)), v);
        const Poly p(v);
        EXPECT_EQ(report::parse_poly(report::poly(p)), p);
    }
}

TEST(Report, BlocksRoundTrip) {
    for (const BlockReport* br : {&plane().ungraded, &worked().ungraded, &worked().classification.degree0}) {
        const BlockReport back = report::parse_blocks(report::blocks(*br));
        ASSERT_EQ(back.count(), br->count());
        EXPECT_EQ(back.radical_dim, br->radical_dim);
        for (std::size_t k = 0; k < back.count(); ++k) {
            EXPECT_EQ(back.blocks[k].dim, br->blocks[k].dim);
            EXPECT_EQ(back.blocks[k].kind, br->blocks[k].kind);
            EXPECT_EQ(back.blocks[k].idempotent, br->blocks[k].idempotent);
            EXPECT_EQ(back.blocks[k].radical_layers, br->blocks[k].radical_layers);
            EXPECT_EQ(back.blocks[k].matrix_size, br->blocks[k].matrix_size);
        }
    }
    EXPECT_THROW(report::parse_kind("banana"), std::invalid_argument);
}

TEST(Report, ConfigRoundTrip) {
    AnalysisConfig c;
    c.truncation = 9;
    c.search_height = 5;
    c.seed = 77;
    const AnalysisConfig back = report::parse_config(report::config(c));
    EXPECT_EQ(back.truncation, 9u);
    EXPECT_EQ(back.search_height, 5);
    EXPECT_EQ(back.seed, 77u);
    EXPECT_EQ(back.regularity_degree, c.regularity_degree);
}

TEST(Report, AnalysisDocumentsValidate) {
    for (const AnalysisReport* r : {&plane(), &worked()}) {
        const json doc = report::document("analysis", {}, report::analysis(*r));
        EXPECT_TRUE(report::validate(doc).empty()) << doc.dump();
        // survives a text round trip unchanged
        EXPECT_EQ(json::parse(doc.dump()), doc);
    }
    EXPECT_TRUE(worked().mcm_count == std::nullopt);
}

TEST(Report, ValidatorCatchesInconsistencies) {
    json doc = report::document("analysis", {}, report::analysis(plane()));
    ASSERT_TRUE(report::validate(doc).empty());

    json bad = doc;
    bad["result"]["mcm_count"] = 7;
    EXPECT_FALSE(report::validate(bad).empty());

    bad = doc;
    bad["result"]["ungraded"]["count"] = 5;
    EXPECT_FALSE(report::validate(bad).empty());

    bad = doc;
    bad["kind"] = "nonsense";
    EXPECT_FALSE(report::validate(bad).empty());

    bad = doc;
    bad["result"].erase("classification");
    EXPECT_FALSE(report::validate(bad).empty());

    bad = doc;
    bad["schema_version"] = 99;
    EXPECT_FALSE(report::validate(bad).empty());
}

TEST(Atlas, GridParsing) {
    const atlas::Grid g = atlas::parse_grid("family=skew,commutative; alpha=0..1; a=1; b=0,1/2; c=i");
    EXPECT_EQ(g.families.size(), 2u);
    EXPECT_EQ(g.abg.size(), 2u);  // alpha in {0,1}, beta = gamma = 0
    EXPECT_EQ(g.abc.size(), 2u);
    EXPECT_EQ(g.points().size(), 8u);
    EXPECT_EQ(g.abc[1][1], Scalar::rational(1, 2));
    EXPECT_EQ(g.abc[0][2], Scalar::i());

    const atlas::Grid t = atlas::parse_grid("abc=(1,0,0)|(0,0,0)|(1,1,1)");
    EXPECT_EQ(t.points().size(), 2u);  // the zero form is skipped

    EXPECT_THROW(atlas::parse_grid("family=round"), std::invalid_argument);
    EXPECT_THROW(atlas::parse_grid("abc=(1,0)"), std::invalid_argument);
    EXPECT_THROW(atlas::parse_grid("a=1;abc=(1,0,0)"), std::invalid_argument);
    EXPECT_THROW(atlas::parse_grid("zeta=1"), std::invalid_argument);
    EXPECT_THROW(atlas::parse_grid("a=3..1"), std::invalid_argument);
}

TEST(Atlas, PointStatuses) {
    const json ok = atlas::analyze_point({ConicFamily::Commutative, Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(1), Scalar(1)}, {});
    EXPECT_EQ(ok["status"], "ok");
    EXPECT_EQ(ok["verdict"], "simple-1-type");
    EXPECT_EQ(ok["mcm_count"], 1);
    const json bad = atlas::analyze_point({ConicFamily::Commutative, Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0)}, {});
    EXPECT_EQ(bad["status"], "error");
    EXPECT_TRUE(report::validate(report::document("atlas-record", {}, ok)).empty());
}

TEST(Atlas, SweepIsDeterministicAndResumes) {
    const std::string spec = "family=commutative;abc=(1,0,0)|(1,1,0)|(1,1,1)|(1,2,0)";
    const fs::path a = scratch("a.jsonl"), b = scratch("b.jsonl");
    fs::remove(a);
    fs::remove(b);
    const auto ra = atlas::sweep(atlas::parse_grid(spec), a.string(), {}, 1, spec);
    EXPECT_EQ(ra.computed, 4u);
    const auto rb = atlas::sweep(atlas::parse_grid(spec), b.string(), {}, 3, spec);
    EXPECT_EQ(rb.computed, 4u);
    EXPECT_EQ(read_lines(a), read_lines(b));
    for (const auto& line : read_lines(a)) EXPECT_TRUE(report::validate(json::parse(line)).empty()) << line;
    EXPECT_TRUE(fs::exists(a.string() + ".meta.json"));

    // resume: drop a record and truncate the last line as an interrupted run would
    auto lines = read_lines(a);
    {
        std::ofstream o(a, std::ios::trunc);
        o << lines[0] << "\n" << lines[2] << "\n" << lines[3].substr(0, lines[3].size() / 2);
    }
    const auto resumed = atlas::sweep(atlas::parse_grid(spec), a.string(), {}, 1, spec);
    EXPECT_EQ(resumed.reused, 2u);
    EXPECT_EQ(resumed.computed, 2u);
    EXPECT_EQ(read_lines(a), lines);

    // a narrower grid keeps records it no longer covers
    const std::string narrow = "family=commutative;abc=(1,1,1)";
    const auto rn = atlas::sweep(atlas::parse_grid(narrow), a.string(), {}, 1, narrow);
    EXPECT_EQ(rn.reused, 1u);
    EXPECT_EQ(read_lines(a).size(), 4u);
    EXPECT_EQ(read_lines(a)[0], lines[2]);
}

TEST(Cli, ExitCodesAndOutput) {
    CliRun r = cli("analyze " + data("plane.quad"));
    ASSERT_EQ(r.code, 0);
    const json doc = json::parse(r.out);
    EXPECT_TRUE(report::validate(doc).empty());
    EXPECT_EQ(doc["result"]["classification"]["verdict"], "simple-0-type");

    EXPECT_EQ(cli("analyze " + data("does-not-exist.quad")).code, 1);
    EXPECT_EQ(cli("verify " + data("worked_conic.quad") + " --check rank").code, 0);
    EXPECT_EQ(cli("verify " + data("worked_conic.quad") + " --check copy").code, 0);
    EXPECT_EQ(cli("verify " + data("plane.quad") + " --check rank").code, 1);  // no witness
    EXPECT_EQ(cli("verify " + data("plane.quad") + " --check tensor").code, 1);
    EXPECT_EQ(cli("verify " + data("plane.quad") + " --check tensor --with " + data("line.quad")).code, 0);
    EXPECT_EQ(cli("verify " + data("skew_plane.quad") + " --check knorrer").code, 0);

    r = cli("cover " + data("skew_plane.quad"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["result"]["covered_mcm_count"], 4);

    // x^2 + 3y^2: the center needs sqrt(-3), which is not in Q(i)
    const fs::path nonsplit = scratch("nonsplit.quad");
    std::ofstream(nonsplit) << "gens x y;\nrel x*y - y*x;\ncentral f = x^2 + 3*y^2;\n";
    r = cli("analyze " + nonsplit.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.out)["result"]["classification"]["verdict"], "undetermined-nonsplit");

    r = cli("schema");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out), report::schema());
}
