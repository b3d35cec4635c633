#include "cobarlab/combinatorics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace cobarlab;

namespace {

// Lehmer code: entry k counts later positions holding smaller values.
std::vector<int> lehmer(const Permutation& pi) {
  std::vector<int> e;
  for (int k = 1; k <= pi.size(); ++k) {
    int c = 0;
    for (int j = k + 1; j <= pi.size(); ++j) c += pi(j) < pi(k);
    e.push_back(c);
  }
  return e;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("index sequences enumerate n! elements", "[combinatorics]") {
  for (int n = 0; n <= 6; ++n) {
    auto all = all_sz_indices(n);
    CHECK(static_cast<long>(all.size()) == factorial(n));
    CHECK(std::set<SzIndex>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("p agrees with the Lehmer-code oracle and preserves degree", "[combinatorics]") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& i : all_sz_indices(n)) {
      auto pi = sz_to_perm(i);
      INFO(i.str() << " -> " << pi.str());
      CHECK(lehmer(pi) == i.entries());
      CHECK(pi.degree() == i.degree());
      CHECK(perm_to_sz(pi) == i);
    }
}

TEST_CASE("small values of p", "[combinatorics]") {
  CHECK(sz_to_perm(SzIndex({0, 0})) == Permutation({1, 2}));
  CHECK(sz_to_perm(SzIndex({1, 0})) == Permutation({2, 1}));
  CHECK(sz_to_perm(SzIndex({2, 1, 0})) == Permutation({3, 2, 1}));
  CHECK(sz_to_perm(SzIndex({1, 1, 0})) == Permutation({2, 3, 1}));
}

TEST_CASE("shuffles of (k,l) number binomially and split through psi", "[combinatorics]") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      auto sh = all_shuffles(k, l);
      CHECK(static_cast<long>(sh.size()) == factorial(k + l) / (factorial(k) * factorial(l)));
      for (const auto& s : sh)
        for (const auto& a : all_permutations(k))
          for (const auto& b : all_permutations(l)) {
            auto pi = psi(s, a, b);
            auto back = psi_inv(pi, k);
            CHECK(back.shuffle == s);
            CHECK(back.sigma == a);
            CHECK(back.tau == b);
          }
    }
}

TEST_CASE("add and remove assignment are inverse", "[combinatorics]") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : all_permutations(n))
      for (int i = 1; i <= n; ++i) {
        auto smaller = remove_assignment(pi, i);
        CHECK(smaller.size() == n - 1);
        CHECK(add_assignment(smaller, i, pi(i)) == pi);
      }
}

TEST_CASE("malformed permutations and index sequences are rejected", "[combinatorics]") {
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(SzIndex({1, 1}), Error);
  CHECK_THROWS_AS(SzIndex({-1}), Error);
}
