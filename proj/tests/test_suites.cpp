#include "cobarlab/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cobarlab;

namespace {

void require_report(const Report& r) {
  REQUIRE_FALSE(r.checks.empty());
  for (const auto& c : r.checks) {
    INFO(r.suite << " / " << c.name << ": " << c.witness);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("combinatorics suite", "[suite][combinatorics]") { require_report(suite_combinatorics({})); }
TEST_CASE("simplicial suite", "[suite][simplicial]") { require_report(suite_simplicial({})); }
TEST_CASE("cubical suite", "[suite][cubical]") { require_report(suite_cubical({})); }
TEST_CASE("cube lemmas suite", "[suite][simplicial-cube]") { require_report(suite_cube_lemmas({})); }
TEST_CASE("triangulation suite", "[suite][triangulation]") { require_report(suite_triangulation({})); }
TEST_CASE("cobar isomorphism suite", "[suite][cobar]") { require_report(suite_cobar_iso({})); }
TEST_CASE("Szczarba contract suite", "[suite][szczarba]") { require_report(suite_szczarba_contract({})); }
TEST_CASE("main theorem suite", "[suite][szczarba]") { require_report(suite_main_theorem({})); }

TEST_CASE("homology of S3", "[simplicial]") {
  auto c = chains(fixture("S3"), 5);
  std::vector<std::string> got;
  for (int d = 0; d <= 4; ++d) got.push_back(homology(c.complex, d).str());
  CHECK(got == std::vector<std::string>{"Z", "0", "0", "Z", "0"});
}

TEST_CASE("Sz on the top cell of S2 is its generator", "[szczarba]") {
  auto X = fixture("S2");
  LoopGroup g(X);
  auto p = small_sz_provider();
  auto x = X.gen("sigma");
  auto w = sz_index(p, g, SzIndex({0}), x);
  CHECK(w == g.tau(x));
  auto t = t_sz(p, g, x);
  REQUIRE(t.size() == 1);
  CHECK(t.begin()->first == g.tau(x));
  CHECK(t.begin()->second == 1);
}

TEST_CASE("Sz beyond n = 2 on a nondegenerate simplex is reported, not guessed", "[szczarba]") {
  auto X = fixture("delta5/sk1");
  LoopGroup g(X);
  auto x = X.nondegenerate(4).front();
  CHECK_THROWS_AS(sz(small_sz_provider(), g, Permutation::identity(3), x), Error);
}

TEST_CASE("suite options cap dimensions", "[suite]") {
  SuiteOptions o;
  o.max_dim = 1;
  CHECK(o.cap(3) == 1);
  CHECK(o.cap(0) == 0);
  CHECK_THROWS_AS(run_suite("no-such-suite", o), Error);
  auto r = run_suite("combinatorics", o);
  CHECK(r.ok());
}

TEST_CASE("report JSON schema", "[suite]") {
  Report r{"demo", {}};
  r.add("good", Verdict::pass(3), 1.5);
  r.add("bad", Verdict::fail("x != y"), 0.5);
  auto j = r.json();
  CHECK(j["suite"] == "demo");
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][1]["witness"] == "x != y");
  CHECK(j["checks"][1]["millis"] == 0.5);
  CHECK_FALSE(r.ok());
}
