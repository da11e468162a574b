#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gmepw/cli.hpp"
#include "gmepw/generate.hpp"
#include "gmepw/json_io.hpp"

using namespace gmepw;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/gmepw_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("subspace JSON round trips bit-exactly") {
    Mat<Rat> m(2, 4);
    m.at(0, 0) = Rat(1);
    m.at(0, 2) = Rat(-7, 3);
    m.at(1, 1) = Rat(1);
    m.at(1, 3) = rat_from_string("123456789123456789/2");
    Subspace<Rat> s = Subspace<Rat>::from_spanning(4, m);

    ojson j = subspace_to_json(s);
    Subspace<Rat> back = subspace_from_json(j);
    CHECK(back == s);
    CHECK(dump_json(subspace_to_json(back)) == dump_json(j));
}

TEST_CASE("lagrangian JSON carries the certificate and re-certifies on load") {
    Lagrangian<Rat> a = random_graph_lagrangian(3, 9);
    ojson j = lagrangian_to_json(a);
    CHECK(j["certificate"]["isotropic"] == true);
    CHECK(lagrangian_from_json(j) == a);

    // corrupting a row must fail certification, not load silently
    ojson bad = j;
    bad["rows"][0][19] = "1/7";
    CHECK_THROWS_AS(lagrangian_from_json(bad), Error);
}

TEST_CASE("gm data JSON round trips with validation") {
    Lagrangian<Rat> a = random_graph_lagrangian(5, 9);
    GmData<Rat> gm = lagrangian_to_gm(a, e0_covector());
    ojson j = gm_to_json(gm);
    GmData<Rat> back = gm_from_json(j);
    CHECK(back.n == gm.n);
    CHECK(back.w == gm.w);
    for (int i = 0; i < 6; ++i) CHECK(back.q[i] == gm.q[i]);
    CHECK(dump_json(gm_to_json(back)) == dump_json(j));

    ojson bad = j;
    bad["q"][2][0][1] = "9999";   // symmetry broken
    CHECK_THROWS_AS(gm_from_json(bad), Error);

    ojson bad2 = j;
    bad2["lambda"] = ojson::array({"1", "0", "0"});
    CHECK_THROWS_AS(gm_from_json(bad2), Error);
}

TEST_CASE("polynomial JSON is sorted by exponent and bit-exact") {
    Mpoly f(3);
    f.add_term({0, 0, 1}, Rat(-1, 2));
    f.add_term({2, 0, 0}, Rat(5));
    f.add_term({1, 1, 0}, rat_from_string("7/9"));
    ojson j = poly_to_json(f, {"a", "b", "c"});
    REQUIRE(j["terms"].size() == 3);
    // lex ascending on exponent tuples
    CHECK(j["terms"][0]["exp"] == ojson::array({0, 0, 1}));
    CHECK(j["terms"][2]["exp"] == ojson::array({2, 0, 0}));
    CHECK(poly_from_json(j) == f);
    CHECK(dump_json(poly_to_json(poly_from_json(j), {"a", "b", "c"})) == dump_json(j));

    ojson bad = j;
    bad["terms"][0]["coef"] = "x";
    CHECK_THROWS_AS(poly_from_json(bad), Error);
}

TEST_CASE("cli: gen is byte-identical per seed and roundtrip passes") {
    TempFile f1("a1.json"), f2("a2.json");
    CHECK(run_cli({"gen", "--seed", "12", "--height", "9", "--out", f1.path}) == 0);
    CHECK(run_cli({"gen", "--seed", "12", "--height", "9", "--out", f2.path}) == 0);
    CHECK(slurp(f1.path) == slurp(f2.path));
    CHECK(!slurp(f1.path).empty());

    CHECK(run_cli({"roundtrip", "--in", f1.path}) == 0);

    // a different seed gives a different Lagrangian
    TempFile f3("a3.json");
    CHECK(run_cli({"gen", "--seed", "13", "--height", "9", "--out", f3.path}) == 0);
    CHECK(slurp(f1.path) != slurp(f3.path));
}

TEST_CASE("cli: height 0 emits the degenerate zero graph") {
    TempFile f("zero.json");
    CHECK(run_cli({"gen", "--seed", "1", "--height", "0", "--out", f.path}) == 0);
    Lagrangian<Rat> a = lagrangian_from_json(ojson::parse(slurp(f.path)));
    CHECK(a == lagrangian_from_graph(SymmetricForm<Rat>(Mat<Rat>(10, 10))));
}

TEST_CASE("cli: scan, gm, sigma1, dual, sextic pipelines") {
    TempFile a("pipe_a.json"), g("pipe_gm.json"), s("pipe_s.json"), out("pipe_out.json");
    REQUIRE(run_cli({"gen", "--seed", "7", "--height", "9", "--out", a.path}) == 0);

    CHECK(run_cli({"scan", "--in", a.path, "--prime", "3", "--out", out.path}) == 0);
    ojson scan = ojson::parse(slurp(out.path));
    CHECK(scan["points"] == 364);

    CHECK(run_cli({"gm", "--in", a.path, "--out", g.path}) == 0);
    CHECK(run_cli({"sigma1", "--in", g.path, "--out", s.path}) == 0);
    CHECK(ojson::parse(slurp(s.path))["kind"] == "empty");   // n = 5

    CHECK(run_cli({"dual", "--in", a.path, "--out", out.path}) == 0);
    CHECK(run_cli({"check", "--in", a.path, "--prime", "2", "--out", out.path}) == 0);
    ojson check = ojson::parse(slurp(out.path));
    CHECK(check["certificate_kind"] == "per-prime heuristic");

    CHECK(run_cli({"sextic", "--in", a.path, "--chart", "0", "--out", out.path}) == 0);
    CHECK(ojson::parse(slurp(out.path))["total_degree"] == 6);
}

TEST_CASE("cli: budget violations and bad inputs exit nonzero") {
    TempFile a("bad_a.json");
    REQUIRE(run_cli({"gen", "--seed", "9", "--out", a.path}) == 0);
    CHECK(run_cli({"scan", "--in", a.path, "--prime", "101"}) != 0);   // over budget
    CHECK(run_cli({"scan", "--in", a.path, "--prime", "4"}) != 0);     // not prime
    CHECK(run_cli({"gm", "--in", "/nonexistent.json"}) != 0);
    CHECK(run_cli({"gm", "--in", a.path, "--lambda", "0,0,0,0,0,0"}) != 0);

    TempFile junk("junk.json");
    std::ofstream(junk.path) << "{\"ambient\": 20, \"rows\": [[\"oops\"]]}";
    CHECK(run_cli({"check", "--in", junk.path}) != 0);
}

TEST_CASE("cli: lattice subcommands") {
    CHECK(run_cli({"lattice", "disc", "[[2,2,0],[2,4,1],[0,1,3]]"}) == 0);
    CHECK(run_cli({"lattice", "dd", "10"}) == 0);
    CHECK(run_cli({"lattice", "lambda"}) == 0);
    CHECK(run_cli({"lattice", "nonsense"}) != 0);
    CHECK(run_cli({"lattice", "k3", "-5"}) != 0);
}
