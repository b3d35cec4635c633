#include "cobarlab/chain_algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cobarlab;

namespace {

ChainComplex two_cell(long long multiplier) {
  // Z --m--> Z in degrees 1 -> 0
  ChainComplex c;
  c.labels = {{"a"}, {"b"}};
  c.boundary = {IntMatrix(0, 1), IntMatrix::from_rows({{multiplier}})};
  return c;
}

}  // namespace

TEST_CASE("Smith normal form of a 2x2 example", "[chain-algebra]") {
  auto s = smith_normal_form(IntMatrix::from_rows({{1, 2}, {3, 4}}), true);
  REQUIRE(s.rank == 2);
  CHECK(s.diag == std::vector<Integer>{1, 2});
  CHECK(s.U * IntMatrix::from_rows({{1, 2}, {3, 4}}) * s.V == s.D);
}

TEST_CASE("Smith normal form divisibility and transforms on random matrices", "[chain-algebra]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(size(rng), size(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    auto s = smith_normal_form(a, true);
    CHECK(s.U * a * s.V == s.D);
    CHECK(std::abs(static_cast<long long>(determinant(s.U))) == 1);
    CHECK(std::abs(static_cast<long long>(determinant(s.V))) == 1);
    for (std::size_t k = 0; k + 1 < s.diag.size(); ++k) CHECK(s.diag[k + 1] % s.diag[k] == 0);
    if (a.rows() == a.cols()) {
      Integer prod = 1;
      for (const auto& d : s.diag) prod *= d;
      Integer det = determinant(a);
      if (s.rank == a.rows()) CHECK(abs(det) == prod);
      else CHECK(det == 0);
    }
  }
}

TEST_CASE("homology detects torsion", "[chain-algebra]") {
  auto c = two_cell(2);
  CHECK(homology(c, 0).str() == "Z/2");
  CHECK(homology(c, 1).str() == "0");
  auto z = two_cell(0);
  CHECK(homology(z, 0).str() == "Z");
  CHECK(homology(z, 1).str() == "Z");
}

TEST_CASE("d squared check reports a witness", "[chain-algebra]") {
  ChainComplex c;
  c.labels = {{"v"}, {"e"}, {"f"}};
  c.boundary = {IntMatrix(0, 1), IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})};
  auto v = check_d_squared(c);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("mapping cone detects quasi-isomorphisms", "[chain-algebra]") {
  auto s = two_cell(0), t = two_cell(0);
  ChainMap id = identity_map(s);
  CHECK(check_quasi_iso(s, t, id).ok);
  ChainMap times2 = id;
  for (auto& m : times2.components)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= 2;
  CHECK(check_chain_map(s, t, times2).ok);
  CHECK_FALSE(check_quasi_iso(s, t, times2).ok);
}
