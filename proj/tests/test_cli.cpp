#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hgirth/cli.hpp"
#include "hgirth/geometry.hpp"
#include "hgirth/text_format.hpp"
#include "hgirth/transforms.hpp"

using namespace hgirth;
namespace fs = std::filesystem;

namespace {

const fs::path kRecipes = HGIRTH_RECIPE_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hgirth_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateGeometries) {
    auto r = run({"gen", "hexagon", "--q", "2", "--out", path("h.bgt")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_file(path("h.bgt")), to_bgt(geometry::split_cayley_hexagon(2)));
    r = run({"gen", "plane", "--q", "2", "--out", path("p.bgt")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(read_file(path("p.bgt")), to_bgt(geometry::projective_plane(2)));
}

TEST_F(Cli, GreedyWritesReport) {
    auto r = run({"gen", "greedy", "--left", "30", "--right", "30", "--deg", "3", "--girth", "12", "--seed", "1",
                  "--out", path("g.bgt"), "--report", path("g.rep")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rep = read_file(path("g.rep"));
    EXPECT_NE(rep.find("right_degree_histogram"), std::string::npos);
    EXPECT_NE(rep.find("shortfall"), std::string::npos);
    EXPECT_EQ(read_file(path("g.bgt")), to_bgt(geometry::greedy_high_girth_bipartite({30, 30, 3, 12, 1}).graph));
}

TEST_F(Cli, TransformChain) {
    ASSERT_EQ(run({"gen", "plane", "--q", "2", "--out", path("p.bgt")}).code, 0);
    ASSERT_EQ(run({"transform", "nbhd", "--in", path("p.bgt"), "--out", path("f.hgt")}).code, 0);
    const auto fano = parse_hgt(read_file(path("f.hgt")));
    EXPECT_EQ(fano.num_edges(), 7u);

    write_file(path("seven.hgt"), to_hgt(transforms::single_edge(7)));
    ASSERT_EQ(run({"transform", "split", "--r", "3", "--in", path("seven.hgt"), "--out", path("s.hgt")}).code, 0);
    EXPECT_EQ(parse_hgt(read_file(path("s.hgt"))), Hypergraph::from_edges(7, {{0, 1, 2}, {3, 4, 5}}));

    write_file(path("h819.hgt"), to_hgt(Hypergraph::from_edges(819, {{0, 1, 2}, {5, 818}})));
    ASSERT_EQ(run({"transform", "pad", "--to", "1000", "--in", path("h819.hgt"), "--out", path("pad.hgt")}).code, 0);
    const auto padded = parse_hgt(read_file(path("pad.hgt")));
    EXPECT_EQ(padded.num_vertices(), 1000u);
    EXPECT_EQ(padded.num_edges(), 2u);

    ASSERT_EQ(run({"transform", "substitute", "--template", "edge:2", "--in", path("seven.hgt"), "--out",
                   path("sub.hgt"), "--k", "3"})
                  .code,
              0);
    EXPECT_EQ(parse_hgt(read_file(path("sub.hgt"))).num_edges(), 3u);
}

TEST_F(Cli, Girth) {
    write_file(path("hex.hgt"), to_hgt(transforms::neighborhood_hypergraph(geometry::split_cayley_hexagon(2))));
    auto r = run({"girth", "--in", path("hex.hgt"), "--oracle-max", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 8), "girth 6\n");
    EXPECT_NE(r.out.find("oracle 6"), std::string::npos);

    write_file(path("m.hgt"), to_hgt(Hypergraph::from_edges(6, {{0, 1, 2}, {3, 4, 5}})));
    r = run({"girth", "--in", path("m.hgt")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "girth inf\n");
}

TEST_F(Cli, OracleMismatchIsVerificationFailure) {
    write_file(path("hex.hgt"), to_hgt(transforms::neighborhood_hypergraph(geometry::split_cayley_hexagon(2))));
    cli::Hooks broken;
    broken.fast_girth = [](const Hypergraph&) {
        HypergraphGirthReport r;
        r.girth = Girth::finite(4);
        return r;
    };
    const auto r = run({"girth", "--in", path("hex.hgt"), "--oracle-max", "6"}, broken);
    EXPECT_EQ(r.code, cli::exit_verification) << r.out << r.err;
}

TEST_F(Cli, OracleBudget) {
    write_file(path("hex.hgt"), to_hgt(transforms::neighborhood_hypergraph(geometry::split_cayley_hexagon(2))));
    EXPECT_EQ(run({"girth", "--in", path("hex.hgt"), "--oracle-max", "6", "--budget", "10"}).code,
              cli::exit_resource);
    ::setenv("HGIRTH_ORACLE_BUDGET", "10", 1);
    EXPECT_EQ(cli::oracle_budget_from_env(), 10u);
    EXPECT_EQ(run({"girth", "--in", path("hex.hgt"), "--oracle-max", "6"}).code, cli::exit_resource);
    ::unsetenv("HGIRTH_ORACLE_BUDGET");
    EXPECT_EQ(cli::oracle_budget_from_env(), 2000u);
}

TEST_F(Cli, Plan) {
    auto r = run({"plan", "--girth", "6", "--p", "5", "--r", "3", "--N", "3967295312526", "--cert", path("c.cert")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("m 2\nn 1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("certificate VALID"), std::string::npos);
    r = run({"report", "--in", path("c.cert")});
    EXPECT_EQ(r.code, 0) << r.err;

    r = run({"plan", "--girth", "8", "--r", "3", "--N", "1161119713493025"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("m 5\nn 1\n"), std::string::npos) << r.out;

    r = run({"plan", "--girth", "8", "--r", "3", "--N", "100"});
    EXPECT_EQ(r.code, cli::exit_precondition);
    EXPECT_NE((r.out + r.err).find("1161119713493025"), std::string::npos);
}

TEST_F(Cli, TamperedCertificateFailsReport) {
    ASSERT_EQ(run({"plan", "--girth", "6", "--p", "5", "--r", "3", "--N", "3967295312526", "--cert", path("c.cert")})
                  .code,
              0);
    auto text = read_file(path("c.cert"));
    const auto pos = text.find("value split_factor 8");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 20, "value split_factor 9");
    fs::remove(path("c.cert"));
    write_file(path("c.cert"), text);
    EXPECT_EQ(run({"report", "--in", path("c.cert")}).code, cli::exit_verification);
}

TEST_F(Cli, Pipeline) {
    const auto r = run({"pipeline", "--recipe", (kRecipes / "hexagon_pairs.recipe").string(), "--out",
                        path("final.hgt"), "--report", path("report.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto h = parse_hgt(read_file(path("final.hgt")));
    EXPECT_EQ(h.num_vertices(), 100u);
    EXPECT_EQ(h.num_edges(), 63u);
    EXPECT_NE(read_file(path("report.txt")).find("result PASS"), std::string::npos);

    write_file(path("bad.recipe"), "target girth 8\nstage gen plane --q 2\n");
    EXPECT_EQ(run({"pipeline", "--recipe", path("bad.recipe")}).code, cli::exit_verification);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::exit_usage);
    EXPECT_EQ(run({"bogus"}).code, cli::exit_usage);
    EXPECT_EQ(run({"gen", "plane"}).code, cli::exit_usage);
    EXPECT_EQ(run({"gen", "plane", "--q", "4", "--out", path("x.bgt")}).code, cli::exit_precondition);
    write_file(path("bad.hgt"), "hgt 1\nvertices 2\nedges 1\ne 1 0\n");
    const auto r = run({"girth", "--in", path("bad.hgt")});
    EXPECT_EQ(r.code, cli::exit_parse);
    EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
    write_file(path("bad.recipe"), "stage teleport\n");
    EXPECT_EQ(run({"pipeline", "--recipe", path("bad.recipe")}).code, cli::exit_parse);
    EXPECT_EQ(run({"plan", "--girth", "6", "--p", "5", "--r", "3", "--N", "12x"}).code, cli::exit_usage);
}

TEST_F(Cli, RefusesToClobberExistingTempAndIsDeterministic) {
    ASSERT_EQ(run({"gen", "hexagon", "--q", "3", "--out", path("a.bgt")}).code, 0);
    ASSERT_EQ(run({"gen", "hexagon", "--q", "3", "--out", path("b.bgt")}).code, 0);
    EXPECT_EQ(read_file(path("a.bgt")), read_file(path("b.bgt")));
}
