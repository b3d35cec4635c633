#pragma once

#include "cobarlab/cobar.hpp"
#include "cobarlab/report.hpp"
#include "cobarlab/sset_io.hpp"
#include "cobarlab/szczarba.hpp"
#include "cobarlab/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace cobarlab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<int> max_dim;  // caps every per-suite dimension bound

  int cap(int d) const { return max_dim ? std::min(d, *max_dim) : d; }
};

// Every simplicial identity on the simplices listed by `simplices(n)`, n <= max_dim.
template <SimplicialSet S, class Enumerate>
Verdict check_simplicial_identities(const S& s, Enumerate simplices, int max_dim) {
  Verdict v;
  for (int n = 0; n <= max_dim; ++n)
    for (const auto& x : simplices(n)) {
      auto fail = [&](const std::string& what) { return Verdict::fail(what + " fails on " + s.label(x)); };
      for (int j = 0; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
          if (s.face(s.face(x, j), i) != s.face(s.face(x, i), j - 1)) return fail(cat("d_", i, " d_", j));
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (s.degeneracy(s.degeneracy(x, j), i) != s.degeneracy(s.degeneracy(x, i), j + 1))
            return fail(cat("s_", i, " s_", j));
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          auto lhs = s.face(s.degeneracy(x, j), i);
          auto rhs = i < j ? s.degeneracy(s.face(x, i), j - 1) : i <= j + 1 ? x : s.degeneracy(s.face(x, i - 1), j);
          if (lhs != rhs) return fail(cat("d_", i, " s_", j));
        }
      ++v.checked;
    }
  return v;
}

// Multiplication of a cubical group against faces, degeneracies and connections,
// plus associativity and the unit, on sampled pairs of cubes of total dimension <= max_dim.
template <CubicalGroup Y>
Verdict check_cubical_group(const Y& y, int max_dim, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<typename Y::Cube>> cubes;
  for (int n = 0; n <= max_dim; ++n) cubes.push_back(y.cubes(n));
  auto pick = [&](int n) {
    std::uniform_int_distribution<std::size_t> d(0, cubes[n].size() - 1);
    return cubes[n][d(rng)];
  };
  Verdict v;
  for (int p = 0; p <= max_dim; ++p)
    for (int q = 0; p + q <= max_dim; ++q) {
      if (cubes[p].empty() || cubes[q].empty()) continue;
      for (std::size_t s = 0; s < samples; ++s) {
        auto a = pick(p), b = pick(q);
        auto ab = y.multiply(a, b);
        auto fail = [&](const std::string& what) {
          return Verdict::fail(what + " for a = " + y.label(a) + ", b = " + y.label(b));
        };
        if (y.dim(ab) != p + q) return fail("dimension of product");
        for (int i = 1; i <= p + q; ++i)
          for (int e = 0; e <= 1; ++e) {
            auto rhs = i <= p ? y.multiply(y.face(a, i, e), b) : y.multiply(a, y.face(b, i - p, e));
            if (y.face(ab, i, e) != rhs) return fail(cat("d", e, "_", i, "(ab)"));
          }
        for (int i = 1; i <= p + q + 1; ++i) {
          auto rhs = i <= p + 1 ? y.multiply(y.degeneracy(a, i), b) : y.multiply(a, y.degeneracy(b, i - p));
          if (y.degeneracy(ab, i) != rhs) return fail(cat("s_", i, "(ab)"));
        }
        for (int i = 1; i <= p + q; ++i) {
          if (i == p) continue;  // mixes the two factors
          auto rhs = i < p ? y.multiply(y.connection(a, i), b) : y.multiply(a, y.connection(b, i - p));
          if (y.connection(ab, i) != rhs) return fail(cat("γ_", i, "(ab)"));
        }
        if (y.multiply(y.unit(0), a) != a || y.multiply(a, y.unit(0)) != a) return fail("unit law");
        auto c = pick(q);
        if (y.multiply(ab, c) != y.multiply(a, y.multiply(b, c))) return fail("associativity");
        ++v.checked;
      }
    }
  return v;
}

namespace suite_detail {

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline Verdict expect(bool cond, const std::string& what) { return cond ? Verdict::pass(1) : Verdict::fail(what); }

inline std::string homology_str(const ChainComplex& c, int upto) {
  std::string s;
  for (int d = 0; d <= upto; ++d) s += (d ? "," : "") + homology(c, d).str();
  return s;
}

inline Verdict expect_homology(const ChainComplex& c, const std::vector<std::string>& want) {
  std::string got = homology_str(c, static_cast<int>(want.size()) - 1), w;
  for (std::size_t d = 0; d < want.size(); ++d) w += (d ? "," : "") + want[d];
  return got == w ? Verdict::pass(want.size()) : Verdict::fail("homology " + got + ", expected " + w);
}

}  // namespace suite_detail

// ---- combinatorics ------------------------------------------------------------

inline Report suite_combinatorics(const SuiteOptions& o) {
  using namespace suite_detail;
  Report r{"combinatorics", {}};
  int N = o.cap(6), N5 = o.cap(5);

  r.run(cat("p is a bijection, n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n) {
      auto idx = all_sz_indices(n);
      if (static_cast<long long>(idx.size()) != factorial(n)) return Verdict::fail(cat("|S_", n, "| != ", n, "!"));
      std::set<Permutation> seen;
      for (const auto& i : idx) {
        auto pi = sz_to_perm(i);
        if (perm_to_sz(pi) != i) return Verdict::fail("p^{-1} p != id on " + i.str());
        seen.insert(pi);
        ++v.checked;
      }
      if (seen.size() != idx.size()) return Verdict::fail(cat("p not injective for n = ", n));
      for (const auto& pi : all_permutations(n))
        if (sz_to_perm(perm_to_sz(pi)) != pi) return Verdict::fail("p p^{-1} != id on " + pi.str());
    }
    return v;
  });

  r.run(cat("parity of p, n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n)
      for (const auto& i : all_sz_indices(n)) {
        if (sz_to_perm(i).sign() != (i.degree() % 2 == 0 ? 1 : -1))
          return Verdict::fail("sign of p" + i.str() + " != (-1)^deg " + i.str());
        ++v.checked;
      }
    return v;
  });

  r.run(cat("Psi round trips, k + l <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n)
      for (int k = 0; k <= n; ++k) {
        int l = n - k;
        for (const auto& sh : all_shuffles(k, l))
          for (const auto& s : all_permutations(k))
            for (const auto& t : all_permutations(l)) {
              auto pi = psi(sh, s, t);
              if (psi_inv(pi, k) != PsiData{sh, s, t})
                return Verdict::fail("Psi^{-1} Psi != id on " + sh.str() + ", " + s.str() + ", " + t.str());
              ++v.checked;
            }
        for (const auto& pi : all_permutations(n)) {
          auto d = psi_inv(pi, k);
          if (psi(d.shuffle, d.sigma, d.tau) != pi) return Verdict::fail(cat("Psi Psi^{-1} != id on ", pi.str(), ", k = ", k));
        }
      }
    return v;
  });

  r.run(cat("Xi is a bijection, n <= ", N), [&] {
    Verdict v;
    for (int n = 1; n <= N; ++n) {
      std::set<std::tuple<Shuffle, SzIndex, SzIndex>> seen;
      for (const auto& i : all_sz_indices(n)) {
        auto x = xi(i);
        if (x.shuffle.k + x.shuffle.l != n - 1 || x.j.size() != x.shuffle.k || x.k.size() != x.shuffle.l)
          return Verdict::fail("Xi" + i.str() + " has inconsistent sizes");
        if (!seen.insert({x.shuffle, x.j, x.k}).second) return Verdict::fail("Xi not injective at " + i.str());
        ++v.checked;
      }
      long long target = 0;  // |⊔ Shuff(k,l) × S_k × S_l| over k + l = n - 1
      for (int k = 0; k < n; ++k) target += static_cast<long long>(all_shuffles(k, n - 1 - k).size()) * factorial(k) * factorial(n - 1 - k);
      if (static_cast<long long>(seen.size()) != target) return Verdict::fail(cat("Xi not surjective for n = ", n));
    }
    return v;
  });

  r.run(cat("Phi round trips, n <= ", N), [&] {
    Verdict v;
    for (int n = 1; n <= N; ++n)
      for (int p = 0; p <= n; ++p) {
        std::map<std::pair<SzIndex, int>, int> fibre;
        for (const auto& i : all_sz_indices(n)) {
          auto [j, q] = phi(i, p);
          if (j.size() != n - 1 || q < 0 || q >= n) return Verdict::fail(cat("Phi(", i.str(), ", ", p, ") out of range"));
          ++fibre[{j, q}];
          ++v.checked;
        }
        int want = (p == 0 || p == n) ? 1 : 2;
        if (static_cast<long long>(fibre.size()) * want != factorial(n))
          return Verdict::fail(cat("Phi(-, ", p, ") has the wrong image size for n = ", n));
        for (const auto& [key, c] : fibre)
          if (c != want) return Verdict::fail(cat("Phi(-, ", p, ") fibre of size ", c, " over ", key.first.str()));
      }
    return v;
  });

  r.run(cat("Xi agrees with Psi^{-1} of pi minus n, n <= ", N5), [&] {
    Verdict v;
    for (int n = 1; n <= N5; ++n)
      for (const auto& i : all_sz_indices(n)) {
        auto x = xi(i);
        auto pi = sz_to_perm(i);
        auto s = sz_shuffle_split(pi);
        if (x.shuffle != s.shuffle || sz_to_perm(x.j) != s.sigma || sz_to_perm(x.k) != s.tau)
          return Verdict::fail("Xi" + i.str() + " disagrees with the permutation form for " + pi.str());
        if (s.shuffle.k != pi(n) - 1) return Verdict::fail("k != pi(n) - 1 for " + pi.str());
        ++v.checked;
      }
    return v;
  });

  r.run(cat("Phi agrees with assignment removal, n <= ", N5), [&] {
    Verdict v;
    for (int n = 1; n <= N5; ++n)
      for (const auto& i : all_sz_indices(n))
        for (int p = 0; p <= n; ++p) {
          auto [j, q] = phi(i, p);
          auto pi = sz_to_perm(i);
          auto pp = phi_perm(pi, p);
          if (sz_to_perm(j) != pp.pi || q != pp.q)
            return Verdict::fail(cat("Phi(", i.str(), ", ", p, ") disagrees with the permutation form"));
          int val = pi(q + 1);
          bool ok = p == 0 ? val == 1 : p == n ? val == n : (val == p || val == p + 1);
          if (!ok) return Verdict::fail(cat("removed value ", val, " not allowed for p = ", p, " on ", pi.str()));
          if (add_assignment(pp.pi, q + 1, val) != pi) return Verdict::fail("reinserting the assignment fails on " + pi.str());
          ++v.checked;
        }
    return v;
  });

  r.run("add and remove assignment are inverse", [&] {
    Verdict v;
    for (int n = 1; n <= N; ++n)
      for (const auto& pi : all_permutations(n))
        for (int j = 1; j <= n; ++j) {
          if (add_assignment(remove_assignment(pi, j), j, pi(j)) != pi) return Verdict::fail(cat("on ", pi.str(), ", j = ", j));
          ++v.checked;
        }
    return v;
  });

  r.run("example p(4,2,0,1,0)", [] {
    return expect(sz_to_perm(SzIndex({4, 2, 0, 1, 0})) == Permutation({5, 3, 1, 4, 2}),
                  "p(4,2,0,1,0) = " + sz_to_perm(SzIndex({4, 2, 0, 1, 0})).str());
  });
  r.run("example Psi_{2,3}", [] {
    Shuffle sh = Shuffle::from_alpha(5, {2, 5});
    Permutation s({2, 1}), t({1, 3, 2}), pi({3, 2, 5, 4, 1});
    Verdict v = expect(sh.beta == std::vector<int>{1, 3, 4}, "beta of alpha = (2,5)");
    v &= expect(psi(sh, s, t) == pi, "Psi gives " + psi(sh, s, t).str());
    v &= expect(psi_inv(pi, 2) == PsiData{sh, s, t}, "Psi^{-1} of (3,2,5,4,1)");
    return v;
  });
  r.run("example split of (5,3,1,4,2)", [] {
    Permutation pi({5, 3, 1, 4, 2});
    auto d = sz_shuffle_split(pi);
    Verdict v = expect(remove_assignment(pi, 5) == Permutation({4, 2, 1, 3}), "pi tilde");
    v &= expect(d.shuffle.k == 1 && d.shuffle.l == 3, "k = 1, l = 3");
    v &= expect(d.shuffle.alpha == std::vector<int>{3} && d.shuffle.beta == std::vector<int>{1, 2, 4}, "alpha, beta");
    v &= expect(d.sigma == Permutation({1}) && d.tau == Permutation({3, 1, 2}), "sigma, tau = " + d.sigma.str() + ", " + d.tau.str());
    return v;
  });
  r.run("example concatenation", [] {
    auto c = concat({Permutation({2, 1}), Permutation({3, 1, 2}), Permutation({1})});
    return expect(c == Permutation({2, 1, 5, 3, 4, 6}), "concat = " + c.str());
  });
  r.run("example remove assignment 3 -> 2", [] {
    auto c = remove_assignment(Permutation({3, 4, 2, 1}), 3);
    return expect(c == Permutation({2, 3, 1}), "got " + c.str());
  });
  r.run("example hereditary decomposition in S_6", [] {
    Permutation pi({5, 4, 2, 1, 3, 6}), pi2({2, 4, 5, 1, 6, 3});
    auto b = block_decomposition(pi, pi2);
    Verdict v = expect(b.common_face == CubeSimplex::from_parts({{}, {2, 4, 5}, {1}, {3, 6}, {}}),
                       "common face " + b.common_face.str());
    v &= expect(b.blocks == std::vector<Permutation>{Permutation({3, 2, 1}), Permutation({1}), Permutation({2, 1})},
                "blocks");
    v &= expect(pi.compose(concat(b.blocks)) == pi2, "pi o (tau_1 ⊔ tau_2 ⊔ tau_3) = pi'");
    return v;
  });
  r.sort();
  return r;
}

// ---- simplicial -----------------------------------------------------------------

inline std::vector<std::string> simplicial_fixture_names() {
  return {"interval", "delta2", "delta3", "S1", "S2", "S3", "delta2/sk0", "delta3/sk0", "delta4/sk1"};
}

inline Report suite_simplicial(const SuiteOptions& o) {
  using namespace suite_detail;
  Report r{"simplicial", {}};
  int D = o.cap(5);
  for (const auto& name : simplicial_fixture_names()) {
    auto X = fixture(name);
    r.run("identities " + name + cat(" up to dim ", D), [&] { return validate(X, D); });
    r.run("sset round trip " + name, [&] {
      auto text = serialize_sset(X);
      auto Y = parse_sset(text);
      Verdict v = expect(serialize_sset(Y) == text, "serialize(parse(text)) != text");
      v &= expect(Y.generators.size() == X.generators.size() && Y.faces == X.faces, "face tables differ");
      return v;
    });
    r.run("chains " + name + " d^2 = 0, AW coassociative", [&] {
      auto c = chains(X, std::max(X.max_generator_dim(), 0));
      Verdict v = check_d_squared(c.complex);
      v &= check_coassociative(c.complex);
      return v;
    });
  }
  struct Want {
    std::string name;
    std::vector<std::string> h;
  };
  for (const auto& w : std::vector<Want>{{"S2", {"Z", "0", "Z"}},
                                         {"S3", {"Z", "0", "0", "Z"}},
                                         {"delta3", {"Z", "0", "0", "0"}},
                                         {"delta3/sk0", {"Z", "Z^3", "0", "0"}},
                                         {"delta4/sk1", {"Z", "0", "Z^6", "0", "0"}}}) {
    r.run("homology " + w.name, [&] {
      auto X = fixture(w.name);
      return expect_homology(chains(X, X.max_generator_dim()).complex, w.h);
    });
  }
  r.run("shuffle map on delta1 x delta1 is a dgc map", [&] {
    auto I = standard_simplex(1);
    ProductSimplicial<SimplicialPresentation, SimplicialPresentation> P(I, I);
    auto ci = chains(I, 1);
    std::vector<std::vector<std::pair<Simplex, Simplex>>> basis(3);
    for (int n = 0; n <= 2; ++n)
      for (const auto& x : I.simplices(n))
        for (const auto& y : I.simplices(n))
          if (!P.is_degenerate({x, y})) basis[n].push_back({x, y});
    auto cp = simplicial_chains(P, basis, false);
    auto t = tensor(ci.complex, ci.complex);
    auto tb = tensor_basis(ci.complex, ci.complex, 2);
    ChainMap sh;
    for (int n = 0; n <= 2; ++n) {
      IntMatrix m(cp.complex.rank(n), t.rank(n));
      for (std::size_t col = 0; col < tb.keys[n].size(); ++col) {
        const auto& k = tb.keys[n][col];
        for (const auto& [pr, c] : shuffle_map(I, ci.basis[k.p][k.left], I, ci.basis[n - k.p][k.right]))
          if (!P.is_degenerate(pr)) m(cp.index[n].at(pr), col) += c;
      }
      sh.components.push_back(std::move(m));
    }
    Verdict v = check_chain_map(t, cp.complex, sh);
    v &= check_coalgebra_map(t, cp.complex, sh);
    v &= expect_homology(cp.complex, {"Z", "0", "0"});
    return v;
  });
  r.run("product presentation delta1 x delta1", [&] {
    auto I = standard_simplex(1);
    auto P = product(I, I);
    Verdict v = validate(P, o.cap(4));
    v &= expect_homology(chains(P, 2).complex, {"Z", "0", "0"});
    return v;
  });
  r.sort();
  return r;
}

// ---- cubical ----------------------------------------------------------------------

inline Report suite_cubical(const SuiteOptions& o) {
  using namespace suite_detail;
  Report r{"cubical", {}};
  for (int n = 0; n <= o.cap(4); ++n) {
    StandardCube c(n);
    r.run(cat("identities standard cube ", n), [&] { return validate_cubical(c, n); });
  }
  for (int n = 0; n <= o.cap(3); ++n) {
    StandardCube c(n);
    r.run(cat("chains standard cube ", n, ": d^2, Serre diagonal, homology"), [&] {
      auto cc = cubical_chains(c, n, false);
      Verdict v = check_d_squared(cc.complex);
      v &= check_coassociative(cc.complex);
      std::vector<std::string> point(n + 1, "0");
      point[0] = "Z";
      v &= expect_homology(cc.complex, point);
      return v;
    });
  }
  {
    StandardCube a(1), b(2), a2(1);
    ProductCubical<StandardCube, StandardCube> p12(a, b), p11(a, a2);
    r.run("identities cube1 x cube2", [&] { return validate_cubical(p12, o.cap(3)); });
    r.run("identities cube1 x cube1", [&] { return validate_cubical(p11, o.cap(2)); });
    r.run("chains cube1 x cube1 = chains cube1 ⊗ chains cube1", [&] {
      auto cp = cubical_chains(p11, 2, false);
      auto c1 = cubical_chains(a, 1, false);
      auto t = tensor(c1.complex, c1.complex);
      auto tb = tensor_basis(c1.complex, c1.complex, 2);
      ChainMap iso;
      for (int n = 0; n <= 2; ++n) {
        IntMatrix m(cp.complex.rank(n), t.rank(n));
        for (std::size_t col = 0; col < tb.keys[n].size(); ++col) {
          const auto& k = tb.keys[n][col];
          m(cp.index[n].at(p11.make(c1.basis[k.p][k.left], c1.basis[n - k.p][k.right])), col) += 1;
        }
        iso.components.push_back(std::move(m));
      }
      Verdict v = expect(cp.complex.rank(0) == t.rank(0) && cp.complex.rank(1) == t.rank(1) && cp.complex.rank(2) == t.rank(2),
                         "ranks differ");
      v &= check_chain_map(t, cp.complex, iso);
      v &= check_coalgebra_map(t, cp.complex, iso);
      return v;
    });
  }
  r.run("cube category word normal form", [&] {
    Verdict v;
    for (int k = 0; k <= o.cap(3); ++k)
      for (int n = 0; n <= o.cap(3); ++n)
        for (const auto& f : all_cube_morphisms(k, n)) {
          if (CubeMorphism::from_word(k, f.word()) != f) return Verdict::fail("from_word(word f) != f for " + f.str());
          ++v.checked;
        }
    return v;
  });
  r.run("cube category composition is associative", [&] {
    std::mt19937_64 rng(o.seed);
    Verdict v;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          for (int d = 0; d <= 2; ++d) {
            auto F = all_cube_morphisms(c, d), G = all_cube_morphisms(b, c), H = all_cube_morphisms(a, b);
            std::uniform_int_distribution<std::size_t> pf(0, F.size() - 1), pg(0, G.size() - 1), ph(0, H.size() - 1);
            for (int s = 0; s < 50; ++s) {
              auto &f = F[pf(rng)], &g = G[pg(rng)], &h = H[ph(rng)];
              if (f.compose(g).compose(h) != f.compose(g.compose(h)))
                return Verdict::fail("(fg)h != f(gh) for " + f.str() + ", " + g.str() + ", " + h.str());
              ++v.checked;
            }
          }
    return v;
  });
  for (std::string name : {"S2", "S3", "delta4/sk1"}) {
    r.run("identities cobar cubes " + name + cat(" up to dim ", o.cap(3)), [&] {
      auto X = fixture(name);
      CubicalCobar cob(X);
      return validate_cubical(cob, o.cap(3));
    });
    r.run("cubical group " + name, [&] {
      auto X = fixture(name);
      CubicalCobar cob(X);
      return check_cubical_group(cob, o.cap(3), o.seed, 200);
    });
  }
  r.sort();
  return r;
}

// ---- the simplicial cube ----------------------------------------------------------

inline Report suite_cube_lemmas(const SuiteOptions& o) {
  using namespace suite_detail;
  Report r{"cube-lemmas", {}};
  int N = o.cap(4);

  r.run(cat("simplicial identities of the simplicial n-cube, n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n) {
      SimplicialCube c(n);
      v &= check_simplicial_identities(c, [&](int m) { return c.simplices(m); }, n + 1);
    }
    return v;
  });
  r.run(cat("the u_pi are the n! top simplices, n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n) {
      SimplicialCube c(n);
      std::set<CubeSimplex> tops;
      for (const auto& pi : all_permutations(n)) tops.insert(u_pi(pi));
      auto nd = c.nondegenerate(n);
      if (std::set<CubeSimplex>(nd.begin(), nd.end()) != tops) return Verdict::fail(cat("top simplices differ for n = ", n));
      if (!c.nondegenerate(n + 1).empty()) return Verdict::fail(cat("nondegenerate simplex above dimension ", n));
      v.checked += tops.size();
    }
    return v;
  });
  r.run(cat("every simplex is a degeneracy of a face of some u_pi, n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n) {
      SimplicialCube c(n);
      for (int m = 0; m <= n + 1; ++m)
        for (const auto& u : c.simplices(m)) {
          auto rf = refine(u);
          if (apply_refinement(c, u_pi(rf.pi), rf) != u) return Verdict::fail("refinement fails on " + u.str());
          ++v.checked;
        }
    }
    return v;
  });
  r.run(cat("adjacent u_pi share the face d_j, n <= ", N), [&] {
    Verdict v;
    for (int n = 2; n <= N; ++n)
      for (const auto& pi : all_permutations(n))
        for (int j = 1; j < n; ++j) {
          auto other = pi.compose(Permutation::transposition(n, j));
          if (u_pi(pi).face(j) != u_pi(other).face(j)) return Verdict::fail(cat("d_", j, " on ", pi.str()));
          ++v.checked;
        }
    return v;
  });
  r.run(cat("adding 1 -> i: d_0 u_pi~ = (δ1_i)_* u_pi, n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n < N; ++n)
      for (const auto& pi : all_permutations(n))
        for (int i = 1; i <= n + 1; ++i) {
          auto pt = add_assignment(pi, 1, i);
          if (u_pi(pt).face(0) != lambda_star(CubeMorphism::delta(n + 1, i, 1), u_pi(pi)))
            return Verdict::fail(cat("on ", pi.str(), ", i = ", i));
          ++v.checked;
        }
    return v;
  });
  r.run(cat("adding n -> i: d_n u_pi~ = (δ0_i)_* u_pi, n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n < N; ++n)
      for (const auto& pi : all_permutations(n))
        for (int i = 1; i <= n + 1; ++i) {
          auto pt = add_assignment(pi, n + 1, i);
          if (u_pi(pt).face(n + 1) != lambda_star(CubeMorphism::delta(n + 1, i, 0), u_pi(pi)))
            return Verdict::fail(cat("on ", pi.str(), ", i = ", i));
          ++v.checked;
        }
    return v;
  });
  r.run(cat("removing j -> i: s_{j-1} u_pi~ = (σ_i)_* u_pi, n <= ", N), [&] {
    Verdict v;
    for (int n = 1; n <= N; ++n)
      for (const auto& pi : all_permutations(n))
        for (int i = 1; i <= n; ++i) {
          int j = pi.preimage(i);
          auto pt = remove_assignment(pi, j);
          if (u_pi(pt).degeneracy(j - 1) != lambda_star(CubeMorphism::sigma(n, i), u_pi(pi)))
            return Verdict::fail(cat("on ", pi.str(), ", i = ", i));
          ++v.checked;
        }
    return v;
  });
  r.run(cat("connections: s_{j-1} u_pi~ = (γ_i)_* u_pi, n <= ", N), [&] {
    Verdict v;
    for (int n = 2; n <= N; ++n)
      for (const auto& pi : all_permutations(n))
        for (int i = 1; i < n; ++i) {
          int j = std::min(pi.preimage(i), pi.preimage(i + 1));
          auto pt = remove_assignment(pi, j);
          if (u_pi(pt).degeneracy(j - 1) != lambda_star(CubeMorphism::gamma(n, i), u_pi(pi)))
            return Verdict::fail(cat("on ", pi.str(), ", i = ", i));
          ++v.checked;
        }
    return v;
  });
  r.run(cat("hereditary: paths through the common face, n <= ", N), [&] {
    Verdict v;
    for (int n = 1; n <= N; ++n) {
      SimplicialCube c(n);
      for (const auto& pi : all_permutations(n))
        for (const auto& pi2 : all_permutations(n)) {
          if (pi == pi2) continue;
          auto b = block_decomposition(pi, pi2);
          if (pi.compose(concat(b.blocks)) != pi2) return Verdict::fail("block decomposition fails for " + pi.str() + ", " + pi2.str());
          // vertices of the common face are the shared vertices
          std::set<std::vector<int>> va, vb, vc;
          for (int k = 0; k <= n; ++k) {
            va.insert(u_pi(pi).vertex(k));
            vb.insert(u_pi(pi2).vertex(k));
          }
          for (int k = 0; k <= b.common_face.dim(); ++k) vc.insert(b.common_face.vertex(k));
          std::set<std::vector<int>> shared;
          for (const auto& x : va)
            if (vb.count(x)) shared.insert(x);
          if (shared != vc) return Verdict::fail("common face is not the intersection for " + pi.str() + ", " + pi2.str());
          auto path = hereditary_path(pi, pi2);
          if (path.front() != pi || path.back() != pi2) return Verdict::fail("path endpoints");
          for (std::size_t t = 0; t < path.size(); ++t) {
            std::set<std::vector<int>> vt;
            for (int k = 0; k <= n; ++k) vt.insert(u_pi(path[t]).vertex(k));
            for (const auto& x : vc)
              if (!vt.count(x)) return Verdict::fail("path leaves the common face at " + path[t].str());
            if (t + 1 < path.size()) {
              bool adjacent = false;
              for (int j = 1; j < n; ++j)
                if (path[t].compose(Permutation::transposition(n, j)) == path[t + 1]) adjacent = true;
              if (!adjacent) return Verdict::fail("non-adjacent step " + path[t].str() + " -> " + path[t + 1].str());
            }
          }
          ++v.checked;
        }
    }
    return v;
  });
  r.run(cat("product simplex decomposition, k + l <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& pi : all_permutations(n)) {
          auto [a, b] = decompose_product_simplex(pi, k, n - k);
          auto u = u_pi(pi);
          if (a != project(u, 1, k) || b != project(u, k + 1, n - k))
            return Verdict::fail(cat("on ", pi.str(), ", k = ", k));
          ++v.checked;
        }
    return v;
  });
  r.run("extend_family accepts families matching on shared facets", [&] {
    // the identity family of the simplicial cube extends to the identity
    Verdict v;
    for (int n = 0; n <= N; ++n) {
      SimplicialCube c(n);
      std::map<Permutation, CubeSimplex> fam;
      for (const auto& pi : all_permutations(n)) fam[pi] = u_pi(pi);
      auto ext = extend_family(c, n, fam);
      if (!ext) return Verdict::fail(ext.witness);
      for (int m = 0; m <= n + 1; ++m)
        for (const auto& u : c.simplices(m)) {
          if ((*ext.map)(u) != u) return Verdict::fail("extension differs from identity on " + u.str());
          ++v.checked;
        }
      if (n >= 2) {
        auto bad = fam;
        bad[Permutation::identity(n)] = u_pi(Permutation::identity(n)).face(0).degeneracy(0);
        if (extend_family(c, n, bad)) return Verdict::fail(cat("corrupted family accepted for n = ", n));
      }
    }
    return v;
  });
  r.sort();
  return r;
}

// ---- triangulation -------------------------------------------------------------

inline Report suite_triangulation(const SuiteOptions& o) {
  using namespace suite_detail;
  Report r{"triangulation", {}};
  int N = o.cap(3);

  for (int n = 0; n <= N; ++n) {
    r.run(cat("T(cube ", n, ") is the simplicial cube"), [&] {
      StandardCube y(n);
      Triangulation<StandardCube> t(y, n);
      SimplicialCube c(n);
      Verdict v;
      for (int m = 0; m <= n + 1; ++m) {
        std::set<TriSimplex<CubeMorphism>> image;
        for (const auto& u : c.simplices(m)) {
          auto s = t.make(y.top(), u);
          image.insert(s);
          for (int j = 0; j <= m && m > 0; ++j)
            if (t.face(s, j) != t.make(y.top(), u.face(j))) return Verdict::fail("faces differ on " + u.str());
          ++v.checked;
        }
        auto all = t.simplices(m);
        if (image != std::set<TriSimplex<CubeMorphism>>(all.begin(), all.end()) || image.size() != c.simplices(m).size())
          return Verdict::fail(cat("not a bijection in dimension ", m));
      }
      v &= check_simplicial_identities(t, [&](int m) { return t.simplices(m); }, n + 1);
      return v;
    });
    r.run(cat("t is a chain and coalgebra map on C(cube ", n, ")"), [&] {
      StandardCube y(n);
      Triangulation<StandardCube> t(y, n);
      auto cy = cubical_chains(y, n, false);
      auto ct = triangulated_chains(t);
      auto f = t_map(t, cy, ct);
      Verdict v = check_chain_map(cy.complex, ct.complex, f);
      v &= check_coalgebra_map(cy.complex, ct.complex, f);
      return v;
    });
    r.run(cat("t induces an isomorphism on homology for cube ", n), [&] {
      StandardCube y(n);
      Triangulation<StandardCube> t(y, n);
      auto cy = cubical_chains(y, n, false);
      auto ct = triangulated_chains(t);
      Verdict v = check_quasi_iso(cy.complex, ct.complex, t_map(t, cy, ct));
      v &= expect(homology_str(cy.complex, n) == homology_str(ct.complex, n), "homology groups differ");
      return v;
    });
  }
  r.run("t on a 2-cube is (y,u_(1,2)) - (y,u_(2,1))", [&] {
    StandardCube y(2);
    Triangulation<StandardCube> t(y, 2);
    LinComb<TriSimplex<CubeMorphism>> want;
    add_term(want, t.make(y.top(), u_pi(Permutation({1, 2}))), Integer(1));
    add_term(want, t.make(y.top(), u_pi(Permutation({2, 1}))), Integer(-1));
    return expect(t_chain(t, y.top()) == want, "wrong signed sum");
  });
  r.run(cat("canonical forms are confluent on T(cube n), n <= ", N), [&] {
    Verdict v;
    for (int n = 0; n <= N; ++n) {
      StandardCube y(n);
      Triangulation<StandardCube> t(y, n);
      for (int k = 0; k <= n; ++k)
        for (const auto& c : y.cubes(k))
          for (int m = 0; m <= std::min(k, 2); ++m)
            for (const auto& u : SimplicialCube(k).simplices(m)) {
              auto nf = t.all_normal_forms({c, u});
              if (nf.size() != 1) return Verdict::fail(cat(nf.size(), " normal forms for ", t.label({c, u})));
              ++v.checked;
            }
    }
    return v;
  });
  r.run(cat("canonical forms are confluent on T(cobar S2), dim <= ", N), [&] {
    auto X = fixture("S2");
    CubicalCobar cob(X);
    Triangulation<CubicalCobar> t(cob, N);
    Verdict v;
    for (int k = 0; k <= N; ++k)
      for (const auto& c : cob.cubes(k))
        for (int m = 0; m <= std::min(k, 2); ++m)
          for (const auto& u : SimplicialCube(k).simplices(m)) {
            auto nf = t.all_normal_forms({c, u});
            if (nf.size() != 1) return Verdict::fail(cat(nf.size(), " normal forms for ", t.label({c, u})));
            ++v.checked;
          }
    return v;
  });
  {
    StandardCube a(1), b(1);
    using P = ProductCubical<StandardCube, StandardCube>;
    P p(a, b);
    Triangulation<StandardCube> ta(a, 1), tb(b, 1);
    Triangulation<P> tp(p, 2);
    TriangulationProduct<StandardCube, StandardCube> q(ta, tb, tp);
    r.run("t induces an isomorphism on homology for cube1 x cube1", [&] {
      auto cp = cubical_chains(p, 2, false);
      auto ct = triangulated_chains(tp);
      Verdict v = check_chain_map(cp.complex, ct.complex, t_map(tp, cp, ct));
      v &= check_quasi_iso(cp.complex, ct.complex, t_map(tp, cp, ct));
      return v;
    });
    r.run("q is a simplicial bijection on cube1 x cube1 up to dim 2", [&] {
      Verdict v;
      for (int m = 0; m <= 2; ++m) {
        std::set<TriSimplex<P::Cube>> image;
        for (const auto& x : ta.simplices(m))
          for (const auto& y : tb.simplices(m)) {
            auto s = q.forward(x, y);
            image.insert(s);
            if (q.inverse(s) != std::pair{x, y}) return Verdict::fail("q^{-1} q != id on " + ta.label(x) + ", " + tb.label(y));
            for (int j = 0; j <= m && m > 0; ++j)
              if (q.forward(ta.face(x, j), tb.face(y, j)) != tp.face(s, j)) return Verdict::fail(cat("q d_", j, " != d_", j, " q"));
            for (int j = 0; j <= m; ++j)
              if (q.forward(ta.degeneracy(x, j), tb.degeneracy(y, j)) != tp.degeneracy(s, j))
                return Verdict::fail(cat("q s_", j, " != s_", j, " q"));
            ++v.checked;
          }
        auto all = tp.simplices(m);
        if (image != std::set<TriSimplex<P::Cube>>(all.begin(), all.end())) return Verdict::fail(cat("q not onto in dimension ", m));
        for (const auto& s : all)
          if (std::apply([&](auto&& x, auto&& y) { return q.forward(x, y); }, q.inverse(s)) != s)
            return Verdict::fail("q q^{-1} != id on " + tp.label(s));
      }
      return v;
    });
    r.run("q square with t ⊗ t and the shuffle map commutes on cube1 x cube1", [&] {
      auto ca = cubical_chains(a, 1, false), cb = cubical_chains(b, 1, false);
      auto ct = triangulated_chains(tp);
      auto tens = tensor(ca.complex, cb.complex);
      auto keys = tensor_basis(ca.complex, cb.complex, 2);
      ChainMap top_right, bottom_left;
      for (int n = 0; n <= 2; ++n) {
        IntMatrix m1(ct.complex.rank(n), tens.rank(n)), m2(ct.complex.rank(n), tens.rank(n));
        for (std::size_t col = 0; col < keys.keys[n].size(); ++col) {
          const auto& k = keys.keys[n][col];
          const auto& y = ca.basis[k.p][k.left];
          const auto& z = cb.basis[n - k.p][k.right];
          for (const auto& [s, c] : t_chain(tp, p.make(y, z))) m1(ct.index[n].at(s), col) += c;
          for (const auto& [s1, c1] : t_chain(ta, y))
            for (const auto& [s2, c2] : t_chain(tb, z))
              for (const auto& [pr, c] : shuffle_map(ta, s1, tb, s2)) {
                auto s = q.forward(pr.first, pr.second);
                if (!tp.is_degenerate(s)) m2(ct.index[n].at(s), col) += c * c1 * c2;
              }
        }
        top_right.components.push_back(std::move(m1));
        bottom_left.components.push_back(std::move(m2));
      }
      Verdict v = check_maps_equal(tens, top_right, bottom_left, 2);
      v &= check_chain_map(tens, ct.complex, top_right);
      return v;
    });
  }
  r.run(cat("t induces an isomorphism on homology for the ", N, "-skeleton of cobar S2"), [&] {
    auto X = fixture("S2");
    CubicalCobar cob(X);
    Triangulation<CubicalCobar> t(cob, N);
    auto cc = cubical_chains(cob, N, false);
    auto ct = triangulated_chains(t);
    auto f = t_map(t, cc, ct);
    Verdict v = check_chain_map(cc.complex, ct.complex, f);
    v &= check_quasi_iso(cc.complex, ct.complex, f);
    if (N >= 3) v &= expect_homology(ct.complex, {"Z", "Z", "Z"});
    return v;
  });
  r.run("t is multiplicative on C(cobar S2) up to degree 2", [&] {
    auto X = fixture("S2");
    CubicalCobar cob(X);
    int D = o.cap(2);
    Triangulation<CubicalCobar> t(cob, D);
    auto cc = cubical_chains(cob, D, true);
    attach_cubical_product(cob, cc);
    auto ct = triangulated_chains(t);
    attach_tri_product(t, ct);
    return check_algebra_map(cc.complex, ct.complex, t_map(t, cc, ct));
  });
  r.run("T(cobar S2) is a simplicial group up to dim 2", [&] {
    auto X = fixture("S2");
    CubicalCobar cob(X);
    Triangulation<CubicalCobar> t(cob, 2);
    Verdict v = check_simplicial_identities(t, [&](int m) { return t.simplices(m); }, 2);
    for (int m = 0; m <= 2; ++m) {
      auto all = t.simplices(m);
      for (const auto& a : all)
        for (const auto& b : all) {
          auto ab = tri_multiply(t, a, b);
          for (int j = 0; j <= m && m > 0; ++j)
            if (t.face(ab, j) != tri_multiply(t, t.face(a, j), t.face(b, j)))
              return Verdict::fail("d_j(ab) != d_j a d_j b for " + t.label(a) + ", " + t.label(b));
          if (tri_multiply(t, tri_unit(t, m), a) != a || tri_multiply(t, a, tri_unit(t, m)) != a)
            return Verdict::fail("unit law fails on " + t.label(a));
          ++v.checked;
        }
    }
    return v;
  });
  r.run("realization coordinates", [&] {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> den(1, 12);
    Verdict v;
    for (int s = 0; s < 100; ++s) {
      std::vector<Rational> b;
      for (int i = 0; i < 3; ++i) {
        int d = den(rng);
        b.push_back(Rational(std::uniform_int_distribution<int>(0, d)(rng), d));
      }
      auto [u, a] = unrealize(b);
      Rational total = 0;
      for (const auto& x : a) {
        if (x < 0) return Verdict::fail("negative barycentric coordinate");
        total += x;
      }
      if (total != 1 || realize(u, a) != b) return Verdict::fail("realize(unrealize(b)) != b");
      ++v.checked;
    }
    SimplicialCube c(3);
    for (const auto& u : c.simplices(3))
      for (int k = 0; k <= 3; ++k) {
        std::vector<Rational> a(4, 0);
        a[k] = 1;
        auto b = realize(u, a);
        auto vert = u.vertex(k);
        for (int i = 0; i < 3; ++i)
          if (b[i] != vert[i]) return Verdict::fail("vertex " + std::to_string(k) + " of " + u.str());
        ++v.checked;
      }
    auto bc = realize(u_pi(Permutation({1, 2})), {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    v &= expect(bc == std::vector<Rational>{Rational(2, 3), Rational(1, 3)}, "barycenter of u_id in the 2-cube");
    return v;
  });
  r.sort();
  return r;
}

// ---- cobar ------------------------------------------------------------------------

inline Report suite_cobar_iso(const SuiteOptions& o) {
  using namespace suite_detail;
  Report r{"cobar-iso", {}};
  int D = o.cap(3);
  for (std::string name : {"S2", "S3", "delta4/sk1"}) {
    auto X = fixture(name);
    CubicalCobar cob(X);
    auto cc = cubical_chains(cob, D, true);
    attach_cubical_product(cob, cc);
    auto om = omega_complex(X, D);
    auto iso = cobar_iso(cob, cc, om);
    r.add("basis bijection " + name, iso.bijection);
    r.add("differentials agree " + name, iso.differential);
    r.add("products agree " + name, iso.product);
    r.run("cobar d^2 = 0 " + name, [&] { return check_d_squared(om.complex); });
    r.run("transported diagonal coassociative " + name, [&] {
      transport_diagonal(cc, om);
      return check_coassociative(om.complex);
    });
    r.run("letter rendering round trip " + name, [&] {
      Verdict v;
      for (int n = 0; n <= D; ++n)
        for (const auto& c : cob.cubes(n)) {
          if (cob.from_letters(cob.letters(c)) != c) return Verdict::fail("round trip fails on " + cob.label(c));
          ++v.checked;
        }
      return v;
    });
    r.run("letter formulas agree with the global form " + name, [&] {
      Verdict v;
      for (int m = 1; m <= D + 1; ++m)
        for (const auto& x : X.simplices(m))
          for (int n = m - 1; n <= D; ++n) {
            int k = n - (m - 1);
            for (int mask = 0; mask < (1 << n); ++mask) {
              if (__builtin_popcount(mask) != k || (mask & 1)) continue;
              std::vector<int> I;
              for (int p = 1; p <= n; ++p)
                if (mask >> (p - 1) & 1) I.push_back(p);
              CobarLetter l{x, I};
              auto c = cob.letter(l);
              for (int i = 1; i <= n + 1 && n + 1 <= D; ++i)
                if (cob.letter(cob.literal_degeneracy(l, i)) != cob.degeneracy(c, i))
                  return Verdict::fail(cat("s_", i, " on ", cob.letter_str(l)));
              if (!I.empty()) continue;
              for (int i = 1; i <= n; ++i) {
                if (cob.letter(cob.literal_d1(l, i)) != cob.face(c, i, 1)) return Verdict::fail(cat("d1_", i, " on ", cob.letter_str(l)));
                if (cob.from_letters(cob.literal_d0(l, i)) != cob.face(c, i, 0)) return Verdict::fail(cat("d0_", i, " on ", cob.letter_str(l)));
                if (i < n && n + 1 <= D && cob.letter(cob.literal_connection(l, i)) != cob.connection(c, i))
                  return Verdict::fail(cat("γ_", i, " on ", cob.letter_str(l)));
              }
              ++v.checked;
            }
          }
      return v;
    });
  }
  r.run("identification graph matches normal forms on S2", [&] {
    auto X = fixture("S2");
    CubicalCobar cob(X);
    CobarWordGraph graph(cob, 3);
    std::vector<CobarLetter> ls;
    for (int m = 1; m <= 4; ++m)
      for (const auto& x : X.simplices(m))
        for (int n = m - 1; n <= 3; ++n) {
          int k = n - (m - 1);
          for (int mask = 0; mask < (1 << n); ++mask) {
            if (__builtin_popcount(mask) != k || (mask & 1)) continue;
            std::vector<int> I;
            for (int p = 1; p <= n; ++p)
              if (mask >> (p - 1) & 1) I.push_back(p);
            ls.push_back({x, I});
          }
        }
    std::vector<std::vector<CobarLetter>> words;
    for (const auto& a : ls) {
      if (a.dim() <= 3) words.push_back({a});
      for (const auto& b : ls)
        if (a.dim() + b.dim() <= 2) words.push_back({a, b});
    }
    std::set<std::vector<CobarLetter>> done;
    std::map<CobarCube, std::vector<CobarLetter>> seen;
    Verdict v;
    for (const auto& w : words) {
      if (done.count(w)) continue;
      auto comp = graph.component(w);
      auto c0 = cob.from_letters(w);
      for (const auto& u : comp) {
        done.insert(u);
        if (cob.from_letters(u) != c0) return Verdict::fail("one class, two normal forms: " + cob.label(c0));
      }
      if (seen.count(c0)) return Verdict::fail("two classes, one normal form: " + cob.label(c0));
      seen[c0] = w;
      ++v.checked;
    }
    return v;
  });
  struct Want {
    std::string name;
    std::vector<std::string> h;
  };
  for (const auto& w : std::vector<Want>{{"S2", {"Z", "Z", "Z"}}, {"S3", {"Z", "0", "Z"}}, {"delta4/sk1", {"Z", "Z^6", "Z^36"}}}) {
    r.run("homology of the cobar construction " + w.name, [&] {
      auto X = fixture(w.name);
      return expect_homology(omega_complex(X, 3).complex, w.h);
    });
  }
  r.sort();
  return r;
}

// ---- Szczarba contract --------------------------------------------------------------

inline std::vector<std::string> contract_fixture_names() { return {"S2", "S3", "delta4/sk1", "delta3/sk0"}; }

inline Report suite_szczarba_contract(const SuiteOptions& o) {
  using namespace suite_detail;
  Report r{"szczarba-contract", {}};
  auto provider = small_sz_provider();
  int N = o.cap(2);
  for (const auto& name : contract_fixture_names()) {
    auto X = fixture(name);
    LoopGroup g(X);
    r.run("loop group identities " + name, [&] { return g.validate(o.cap(3)); });
    r.run("universal twisting function " + name, [&] { return g.check_twisting(o.cap(4)); });
    std::vector<ContractFamily> fams;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fams = contract_check(provider, g, N);
    } catch (const Error& e) {
      fams = {{"all", Verdict::fail(e.what())}};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& f : fams) r.add("contract " + f.name + " " + name + cat(", n <= ", N), f.verdict, ms / fams.size());
    r.run("degenerate extension at n = 3 " + name, [&] { return degenerate_extension_check(provider, g, 3); });
  }
  r.run("twisting convention on delta2/sk0", [&] {
    auto cases = convention_test(fixture("delta2/sk0"));
    Verdict v;
    bool rival_caught = false;
    for (const auto& c : cases) {
      if (c.convention == TwistConvention::standard) {
        if (c.tau_first && !(c.d_i && c.d_iii))
          return Verdict::fail("pinned convention fails: " + (c.d_i ? c.d_iii.witness : c.d_i.witness));
      } else {
        if (c.d_i && c.d_iii) return Verdict::fail("a word passes both identities under the rival convention");
        if (c.d_i && !c.d_iii) rival_caught = true;  // (d-i) holds, (d-iii) fails
      }
      v.checked += c.d_i.checked;
    }
    if (!rival_caught) return Verdict::fail("no rival-convention word satisfies (d-i), so (d-iii) was not exercised");
    return v;
  });
  r.run("Sz_(0) of the generator of S2 is its bar", [&] {
    auto X = fixture("S2");
    LoopGroup g(X);
    auto w = sz(provider, g, Permutation({1}), X.gen("sigma"));
    return expect(w == g.tau(X.gen("sigma")) && g.label(w) == "sigmā", "got " + g.label(w));
  });
  r.sort();
  return r;
}

// ---- main theorem ---------------------------------------------------------------

inline Report suite_main_theorem(const SuiteOptions& o) {
  Report r{"main-theorem", {}};
  int D = o.cap(2);
  auto provider = small_sz_provider();
  for (std::string name : {"S2", "delta4/sk1"}) {
    auto X = fixture(name);
    LoopGroup g(X);
    CubicalCobar cob(X);
    SzczarbaMap f(cob, g, provider);
    Triangulation<CubicalCobar> t(cob, D);
    BuildFReport b;
    r.run("Sz families extend " + name, [&] {
      b = build_f(f, t, D, o.seed);
      return b.families;
    });
    r.add("f respects the identifications " + name, b.identifications);
    r.add("f is simplicial " + name, b.simplicial);
    r.add("f is multiplicative " + name, b.multiplicative);
    auto cc = cubical_chains(cob, D, true);
    auto om = omega_complex(X, D);
    transport_diagonal(cc, om);
    MainTheoremReport m;
    r.run("C(f) t iso = f_Sz " + name, [&] {
      m = main_theorem_check(f, t, provider, om, D);
      return m.equality;
    });
    r.add("f_Sz is a chain map " + name, m.chain_map);
    r.add("f_Sz is comultiplicative " + name, m.comultiplicative);
  }
  r.sort();
  return r;
}

// ---- registry ---------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
  return {"combinatorics", "simplicial", "cubical", "cube-lemmas", "triangulation", "cobar-iso", "szczarba-contract", "main-theorem"};
}

inline Report run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "combinatorics") return suite_combinatorics(o);
  if (name == "simplicial") return suite_simplicial(o);
  if (name == "cubical") return suite_cubical(o);
  if (name == "cube-lemmas") return suite_cube_lemmas(o);
  if (name == "triangulation") return suite_triangulation(o);
  if (name == "cobar-iso") return suite_cobar_iso(o);
  if (name == "szczarba-contract") return suite_szczarba_contract(o);
  if (name == "main-theorem") return suite_main_theorem(o);
  throw Error("unknown suite " + name);
}

}  // namespace cobarlab
