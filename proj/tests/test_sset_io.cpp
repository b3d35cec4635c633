#include "cobarlab/sset_io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cobarlab;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_sset(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("built-in fixtures round trip through the text format", "[sset-io]") {
  for (std::string name : {"S2", "S3", "delta2", "delta3/sk0", "delta4/sk1", "interval"}) {
    auto p = fixture(name);
    auto text = serialize_sset(p);
    auto q = parse_sset(text);
    INFO(name);
    CHECK(serialize_sset(q) == text);
    CHECK(validate(q, 4).ok);
  }
}

TEST_CASE("fixture files load and validate", "[sset-io]") {
  std::string dir = COBARLAB_FIXTURE_DIR;
  for (std::string f : {"s2", "s3", "delta2", "delta3_sk0", "delta4_sk1"}) {
    INFO(f);
    auto p = load_sset(dir + "/" + f + ".sset");
    CHECK(validate(p, 5).ok);
  }
  auto bad = load_sset(dir + "/delta2_corrupt.sset");
  auto v = validate(bad, 3);
  CHECK_FALSE(v.ok);
  CHECK_THAT(v.witness, ContainsSubstring("[0,1,2]"));
  CHECK_THROWS_WITH(load_sset(dir + "/malformed.sset"), ContainsSubstring("line 4"));
}

TEST_CASE("the basepoint is implicit", "[sset-io]") {
  auto p = parse_sset("sset s2 1-reduced\ngen sigma dim=2\nface sigma 0 = s0 *\nface sigma 1 = s0 *\nface sigma 2 = s0 *\n");
  CHECK(p.has("*"));
  CHECK(p.flag == Reduction::one_reduced);
  CHECK(validate(p, 4).ok);
}

TEST_CASE("parse errors carry line numbers", "[sset-io]") {
  CHECK_THAT(parse_error("gen a dim=0\n"), ContainsSubstring("line 1: missing sset header"));
  CHECK_THAT(parse_error("sset x\nsset y\n"), ContainsSubstring("line 2: duplicate"));
  CHECK_THAT(parse_error("sset x\n# c\n\ngen a dim=q\n"), ContainsSubstring("line 4: bad dimension"));
  CHECK_THAT(parse_error("sset x\ngen a dim=0\ngen a dim=0\n"), ContainsSubstring("line 3: duplicate generator"));
  CHECK_THAT(parse_error("sset x\nface b 0 = a\n"), ContainsSubstring("line 2: undeclared generator b"));
  CHECK_THAT(parse_error("sset x\ngen a dim=0\ngen e dim=1\nface e 0 = a\nface e 0 = a\n"),
             ContainsSubstring("line 5: duplicate face"));
  CHECK_THAT(parse_error("sset x\ngen a dim=0\ngen e dim=1\nface e 0 = s0 a\n"), ContainsSubstring("line 4: face 0 of e has dimension 1"));
  CHECK_THAT(parse_error("sset x\ngen e dim=2\nface e 0 = s0 s1 *\n"), ContainsSubstring("line 3: degeneracies must be strictly decreasing"));
  CHECK_THAT(parse_error("sset x\nvertex a\n"), ContainsSubstring("line 2: unknown directive"));
  CHECK_THAT(parse_error("sset x reduced-ish\n"), ContainsSubstring("line 1: unknown flag"));
  CHECK_THAT(parse_error("sset x\ngen e dim=1\nface e 0 = *\n"), ContainsSubstring("face 1 of e not given"));
  CHECK_THAT(parse_error(""), ContainsSubstring("missing sset header"));
}
