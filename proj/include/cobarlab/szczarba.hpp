#pragma once

#include "cobarlab/cobar.hpp"
#include "cobarlab/combinatorics.hpp"
#include "cobarlab/loop_group.hpp"
#include "cobarlab/simplicial_cube.hpp"
#include "cobarlab/triangulation.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cobarlab {

// ---- Szczarba operators -------------------------------------------------------

// Sz_π x for π ∈ S_n, x ∈ X_{n+1}, with values in G_n. `max_n` bounds the
// permutation sizes the provider evaluates directly.
struct SzProvider {
  std::string name;
  int max_n = 2;
  std::function<GroupWord(const LoopGroup&, const Permutation&, const Simplex&)> eval;
};

namespace detail {

inline GroupWord s_tau(const LoopGroup& g, const Simplex& x, std::initializer_list<int> degs) {
  auto w = g.tau(x);
  for (int j : degs) w = g.degeneracy(w, j);
  return w;
}

}  // namespace detail

// Words for n <= 2:
//   Sz_∅ x       = τ(x)
//   Sz_(0) x     = τ(x)·s_0τ(d_0x)
//   Sz_(0,0) x   = τ(x)·s_0τ(d_0x)·s_1s_0τ(d_0²x)
//   Sz_(1,0) x   = s_0τ(d_2x)·s_1τ(d_0x)·s_1s_0τ(d_0²x)
// swap_10 exchanges the first two factors of Sz_(1,0) (negative control).
inline SzProvider small_sz_provider(bool swap_10 = false) {
  SzProvider p;
  p.name = swap_10 ? "small-n (Sz_(1,0) factors swapped)" : "small-n";
  p.max_n = 2;
  p.eval = [swap_10](const LoopGroup& g, const Permutation& pi, const Simplex& x) -> GroupWord {
    const auto& X = g.base();
    int n = pi.size();
    if (n == 0) return g.tau(x);
    auto d0 = X.face(x, 0);
    if (n == 1) return g.multiply(g.tau(x), detail::s_tau(g, d0, {0}));
    auto d00 = X.face(d0, 0);
    auto tail = detail::s_tau(g, d00, {0, 1});
    if (pi == Permutation::identity(2))
      return g.product({g.tau(x), detail::s_tau(g, d0, {0}), tail}, 2);
    auto a = detail::s_tau(g, X.face(x, 2), {0}), b = detail::s_tau(g, d0, {1});
    return swap_10 ? g.product({b, a, tail}, 2) : g.product({a, b, tail}, 2);
  };
  return p;
}

// Sz_π x. Beyond the provider's range, degenerate x = s_p y is handled by the
// degeneracy identity Sz_π s_p y = s_q Sz_π̃ y; nondegenerate x is unsupported.
inline GroupWord sz(const SzProvider& p, const LoopGroup& g, const Permutation& pi, const Simplex& x) {
  require(x.dim == pi.size() + 1, cat("Sz: simplex of dimension ", x.dim, " with permutation of size ", pi.size()));
  if (pi.size() <= p.max_n) return p.eval(g, pi, x);
  const auto& X = g.base();
  for (int q = 0; q < x.dim; ++q)
    if (is_s_image(X, x, q)) {
      auto r = phi_perm(pi, q);
      return g.degeneracy(sz(p, g, r.pi, X.face(x, q)), r.q);
    }
  throw Error(cat("Sz: unsupported n = ", pi.size(), " on nondegenerate ", X.label(x), " (provider ", p.name, ")"));
}

inline GroupWord sz_index(const SzProvider& p, const LoopGroup& g, const SzIndex& i, const Simplex& x) {
  return sz(p, g, sz_to_perm(i), x);
}

// t_Sz(x): 0 in degree 0, Sz_∅x - 1 in degree 1, Σ_i (-1)^{deg i} Sz_i x above.
inline GroupChain t_sz(const SzProvider& p, const LoopGroup& g, const Simplex& x) {
  GroupChain out;
  if (x.dim == 0) return out;
  if (x.dim == 1) {
    add_term(out, sz(p, g, Permutation(), x), Integer(1));
    add_term(out, g.identity(0), Integer(-1));
    return out;
  }
  for (const auto& i : all_sz_indices(x.dim - 1)) {
    auto w = sz_index(p, g, i, x);
    if (!g.is_degenerate(w)) add_term(out, w, Integer(i.degree() % 2 == 0 ? 1 : -1));
  }
  return out;
}

// ---- the contract -----------------------------------------------------------

struct ContractFamily {
  std::string name;
  Verdict verdict;
};

// Every identity of the permutation-indexed contract and of the index-sequence
// originals, on all simplices of the fixture, for all Sz terms with n <= n_max.
inline std::vector<ContractFamily> contract_check(const SzProvider& p, const LoopGroup& g, int n_max) {
  const auto& X = g.base();
  std::vector<ContractFamily> out;
  auto run = [&](const std::string& name, auto&& body) {
    Verdict v;
    try {
      body(v);
    } catch (const Error& e) {
      v &= Verdict::fail(std::string("error: ") + e.what());
    }
    out.push_back({name, v});
  };
  auto word = [&](const GroupWord& w) { return g.label(w); };
  auto mismatch = [&](std::string what, const Simplex& x, const GroupWord& lhs, const GroupWord& rhs) {
    return Verdict::fail(what + " on x = " + X.label(x) + ": " + word(lhs) + " vs " + word(rhs));
  };

  run("d-i", [&](Verdict& v) {
    for (int n = 1; n <= n_max; ++n)
      for (const auto& x : X.simplices(n + 1))
        for (const auto& pi : all_permutations(n - 1))
          for (int i = 1; i <= n; ++i) {
            auto pt = add_assignment(pi, 1, i);
            auto lhs = g.face(sz(p, g, pt, x), 0), rhs = sz(p, g, pi, X.face(x, i));
            if (lhs != rhs) return void(v &= mismatch(cat("d_0 Sz_", pt.str(), " x != Sz_", pi.str(), " d_", i, " x"), x, lhs, rhs));
            ++v.checked;
          }
  });
  run("d-ii", [&](Verdict& v) {
    for (int n = 2; n <= n_max; ++n)
      for (const auto& x : X.simplices(n + 1))
        for (const auto& pi : all_permutations(n))
          for (int j = 1; j < n; ++j) {
            auto pt = pi.compose(Permutation::transposition(n, j));
            auto lhs = g.face(sz(p, g, pt, x), j), rhs = g.face(sz(p, g, pi, x), j);
            if (lhs != rhs) return void(v &= mismatch(cat("d_", j, " Sz_", pt.str(), " x != d_", j, " Sz_", pi.str(), " x"), x, lhs, rhs));
            ++v.checked;
          }
  });
  run("d-iii", [&](Verdict& v) {
    for (int n = 1; n <= n_max; ++n)
      for (const auto& x : X.simplices(n + 1))
        for (const auto& pi : all_permutations(n - 1))
          for (int i = 1; i <= n; ++i) {
            auto pt = add_assignment(pi, n, i);
            auto data = psi_inv(pi, i - 1);
            auto lhs = g.face(sz(p, g, pt, x), n);
            auto a = degenerate_along(g, sz(p, g, data.sigma, front_face(X, x, i)), data.shuffle.beta);
            auto b = degenerate_along(g, sz(p, g, data.tau, back_face(X, x, i)), data.shuffle.alpha);
            auto rhs = g.multiply(a, b);
            if (lhs != rhs) return void(v &= mismatch(cat("d_", n, " Sz_", pt.str(), " x splitting at ", i), x, lhs, rhs));
            ++v.checked;
          }
  });
  for (const char* fam : {"s-i", "s-ii", "s-iii"}) {
    std::string name = fam;
    run(name, [&](Verdict& v) {
      for (int n = 0; n + 1 <= n_max; ++n)
        for (const auto& x : X.simplices(n + 1))
          for (const auto& pi : all_permutations(n + 1))
            for (int q = 0; q <= n + 1; ++q) {
              bool first = q == 0, last = q == n + 1;
              if ((name == "s-i") != first || (name == "s-iii") != (last && !first)) continue;
              auto r = phi_perm(pi, q);
              auto lhs = g.degeneracy(sz(p, g, r.pi, x), r.q), rhs = sz(p, g, pi, X.degeneracy(x, q));
              if (lhs != rhs)
                return void(v &= mismatch(cat("s_", r.q, " Sz_", r.pi.str(), " x != Sz_", pi.str(), " s_", q, " x"), x, lhs, rhs));
              ++v.checked;
            }
    });
  }
  run("index d_0", [&](Verdict& v) {
    for (int n = 1; n <= n_max; ++n)
      for (const auto& x : X.simplices(n + 1))
        for (const auto& i : all_sz_indices(n)) {
          auto lhs = g.face(sz_index(p, g, i, x), 0), rhs = sz_index(p, g, i.tail(), X.face(x, i[1] + 1));
          if (lhs != rhs) return void(v &= mismatch("d_0 Sz_" + i.str(), x, lhs, rhs));
          ++v.checked;
        }
  });
  run("index d_k", [&](Verdict& v) {
    for (int n = 2; n <= n_max; ++n)
      for (const auto& x : X.simplices(n + 1))
        for (const auto& i : all_sz_indices(n))
          for (int k = 1; k < n; ++k) {
            if (i[k] <= i[k + 1]) continue;
            auto e = i.entries();
            std::swap(e[k - 1], e[k]);
            e[k] -= 1;
            auto lhs = g.face(sz_index(p, g, i, x), k), rhs = g.face(sz_index(p, g, SzIndex(e), x), k);
            if (lhs != rhs) return void(v &= mismatch(cat("d_", k, " Sz_", i.str()), x, lhs, rhs));
            ++v.checked;
          }
  });
  run("index d_n", [&](Verdict& v) {
    for (int n = 1; n <= n_max; ++n)
      for (const auto& x : X.simplices(n + 1))
        for (const auto& i : all_sz_indices(n)) {
          auto r = xi(i);
          int k = r.shuffle.k;
          auto a = degenerate_along(g, sz_index(p, g, r.j, front_face(X, x, k + 1)), r.shuffle.beta);
          auto b = degenerate_along(g, sz_index(p, g, r.k, back_face(X, x, k + 1)), r.shuffle.alpha);
          auto lhs = g.face(sz_index(p, g, i, x), n), rhs = g.multiply(a, b);
          if (lhs != rhs) return void(v &= mismatch(cat("d_", n, " Sz_", i.str()), x, lhs, rhs));
          ++v.checked;
        }
  });
  run("index s_p", [&](Verdict& v) {
    for (int n = 1; n <= n_max; ++n)
      for (const auto& x : X.simplices(n))
        for (const auto& i : all_sz_indices(n))
          for (int q = 0; q <= n; ++q) {
            auto r = phi(i, q);
            auto lhs = sz_index(p, g, i, X.degeneracy(x, q)), rhs = g.degeneracy(sz_index(p, g, r.j, x), r.q);
            if (lhs != rhs) return void(v &= mismatch(cat("Sz_", i.str(), " s_", q), x, lhs, rhs));
            ++v.checked;
          }
  });
  return out;
}

inline Verdict contract_verdict(const std::vector<ContractFamily>& fams) {
  Verdict v;
  for (const auto& f : fams) {
    Verdict w = f.verdict;
    if (!w) w.witness = f.name + ": " + w.witness;
    v &= w;
  }
  return v;
}

// Beyond the provider's range: every way of writing x = s_p y must give the same Sz_π x.
inline Verdict degenerate_extension_check(const SzProvider& p, const LoopGroup& g, int n) {
  const auto& X = g.base();
  Verdict v;
  for (const auto& x : X.simplices(n + 1)) {
    if (!x.degenerate()) continue;
    for (const auto& pi : all_permutations(n)) {
      std::optional<GroupWord> first;
      for (int q = 0; q < x.dim; ++q) {
        if (!is_s_image(X, x, q)) continue;
        auto r = phi_perm(pi, q);
        auto w = g.degeneracy(sz(p, g, r.pi, X.face(x, q)), r.q);
        if (first && *first != w)
          return Verdict::fail(cat("Sz_", pi.str(), " on ", X.label(x), " depends on the chosen degeneracy s_", q));
        first = w;
      }
      ++v.checked;
    }
  }
  return v;
}

// ---- the twisting-function convention ----------------------------------------

// For one convention and one ordering of the two factors τ(x), s_0τ(d_0x) of the
// n = 1 word, the verdicts of (d-i) and (d-iii) over all 2-simplices.
struct ConventionCase {
  TwistConvention convention;
  bool tau_first;
  Verdict d_i, d_iii;
};

inline std::vector<ConventionCase> convention_test(const SimplicialPresentation& X) {
  std::vector<ConventionCase> out;
  for (auto conv : {TwistConvention::standard, TwistConvention::rival}) {
    LoopGroup g(X, conv);
    for (bool tau_first : {true, false}) {
      auto word = [&](const Simplex& x) {
        auto a = g.tau(x), b = g.degeneracy(g.tau(X.face(x, 0)), 0);
        return tau_first ? g.multiply(a, b) : g.multiply(b, a);
      };
      ConventionCase c{conv, tau_first, Verdict::pass(), Verdict::pass()};
      for (const auto& x : X.simplices(2)) {
        auto w = word(x);
        auto lhs1 = g.face(w, 0), rhs1 = g.tau(X.face(x, 1));
        if (lhs1 != rhs1) c.d_i &= Verdict::fail("d_0 Sz_(1) x != Sz_∅ d_1 x on " + X.label(x) + ": " + g.label(lhs1) + " vs " + g.label(rhs1));
        auto lhs3 = g.face(w, 1), rhs3 = g.multiply(g.tau(X.face(x, 2)), g.tau(X.face(x, 0)));
        if (lhs3 != rhs3) c.d_iii &= Verdict::fail("d_1 Sz_(1) x != Sz_∅ x(0..1)·Sz_∅ x(1..2) on " + X.label(x) + ": " + g.label(lhs3) + " vs " + g.label(rhs3));
        ++c.d_i.checked;
        ++c.d_iii.checked;
      }
      out.push_back(c);
    }
  }
  return out;
}

// ---- the map f : 𝕋Ω̂X -> G ------------------------------------------------

class SzczarbaMap {
 public:
  SzczarbaMap(const CubicalCobar& cob, const LoopGroup& g, SzProvider p) : cob_(&cob), g_(&g), p_(std::move(p)) {}

  const LoopGroup& group() const { return *g_; }
  const CubicalCobar& cobar() const { return *cob_; }

  // π ↦ Sz_π x extended over the simplicial cube; throws with the extension witness.
  const CubeFamilyMap<LoopGroup>& family(const Simplex& x) const {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    std::map<Permutation, GroupWord> fam;
    for (const auto& pi : all_permutations(x.dim - 1)) fam[pi] = sz(p_, *g_, pi, x);
    auto ext = extend_family(*g_, x.dim - 1, fam);
    if (!ext) throw Error("Sz family of " + g_->base().label(x) + " does not extend: " + ext.witness);
    return cache_.emplace(x, *ext.map).first->second;
  }

  // F(⟦x⟧_I; u) = F(⟦x⟧; (σ_I)_* u)
  GroupWord letter_value(const CobarLetter& l, const CubeSimplex& u) const {
    require(u.arity() == l.dim(), "F: simplex arity differs from letter dimension");
    auto v = u;
    for (auto it = l.inner.rbegin(); it != l.inner.rend(); ++it) v = detail::delete_row(v, *it);
    return family(l.x)(v);
  }

  // F(z; u) = Π_t F(letter_t; u_t)
  GroupWord value(const CobarCube& z, const CubeSimplex& u) const {
    require(u.arity() == z.dim(), "F: simplex arity differs from cube dimension");
    GroupWord r = g_->identity(u.dim());
    int first = 1;
    for (const auto& l : cob_->letters(z)) {
      int n = l.dim();
      r = g_->multiply(r, letter_value(l, project(u, first, n)));
      first += n;
    }
    return r;
  }

  GroupWord operator()(const TriSimplex<CobarCube>& s) const { return value(s.cube, s.u); }

 private:
  const CubicalCobar* cob_;
  const LoopGroup* g_;
  SzProvider p_;
  mutable std::map<Simplex, CubeFamilyMap<LoopGroup>> cache_;
};

struct BuildFReport {
  Verdict families, identifications, simplicial, multiplicative;
  Verdict all() const {
    Verdict v;
    for (auto [name, w] : {std::pair{"families", families}, {"identifications", identifications},
                           {"simplicial", simplicial}, {"multiplicative", multiplicative}}) {
      if (!w) w.witness = std::string(name) + ": " + w.witness;
      v &= w;
    }
    return v;
  }
};

// Builds f and verifies it: extension of every Sz family that occurs, the
// identifications F(λ^*z; u) = F(z; λ_*u) for λ ∈ {δ^ε_i, σ_i, γ_i} on all cubes z
// of dimension <= max_dim and simplices u of dimension <= max_dim, compatibility
// with faces and degeneracies, and multiplicativity (at most `pairs` sampled pairs per degree).
inline BuildFReport build_f(const SzczarbaMap& f, const Triangulation<CubicalCobar>& t, int max_dim,
                            std::uint64_t seed = 1, std::size_t pairs = 4000) {
  BuildFReport r;
  const auto& cob = f.cobar();
  const auto& g = f.group();
  const auto& X = cob.base();

  try {
    for (int m = 1; m <= max_dim + 2; ++m)
      for (const auto& x : X.simplices(m)) {
        if (m == max_dim + 2 && !x.degenerate()) continue;
        f.family(x);
        ++r.families.checked;
      }
  } catch (const Error& e) {
    r.families = Verdict::fail(e.what());
  }

  auto simplices = [](int arity, int max_m) {
    std::vector<CubeSimplex> out;
    SimplicialCube c(arity);
    for (int m = 0; m <= max_m; ++m)
      for (auto& u : c.simplices(m)) out.push_back(u);
    return out;
  };
  try {
    for (int n = 0; n <= max_dim && r.identifications; ++n)
      for (const auto& z : cob.cubes(n)) {
        auto check = [&](const CobarCube& pulled, const CubeMorphism& lam, const std::string& what) {
          for (const auto& u : simplices(pulled.dim(), max_dim)) {
            auto lhs = f.value(pulled, u), rhs = f.value(z, lambda_star(lam, u));
            if (lhs != rhs) {
              r.identifications &= Verdict::fail(what + " on z = " + cob.label(z) + ", u = " + u.str() + ": " +
                                                 g.label(lhs) + " vs " + g.label(rhs));
              return false;
            }
            ++r.identifications.checked;
          }
          return true;
        };
        for (int i = 1; i <= n; ++i)
          for (int e = 0; e <= 1; ++e)
            if (!check(cob.face(z, i, e), CubeMorphism::delta(n, i, e), cat("δ", e, "_", i))) break;
        for (int i = 1; i <= n + 1; ++i)
          if (!check(cob.degeneracy(z, i), CubeMorphism::sigma(n + 1, i), cat("σ_", i))) break;
        for (int i = 1; i <= n; ++i)
          if (!check(cob.connection(z, i), CubeMorphism::gamma(n + 1, i), cat("γ_", i))) break;
        if (!r.identifications) break;
      }
  } catch (const Error& e) {
    r.identifications &= Verdict::fail(e.what());
  }

  try {
    for (int m = 0; m <= max_dim && r.simplicial; ++m)
      for (const auto& s : t.simplices(m)) {
        auto fs = f(s);
        for (int j = 0; j <= m && m > 0; ++j)
          if (f(t.face(s, j)) != g.face(fs, j)) {
            r.simplicial = Verdict::fail(cat("f d_", j, " != d_", j, " f on ", t.label(s)));
            break;
          }
        for (int j = 0; j <= m && r.simplicial; ++j)
          if (f(t.degeneracy(s, j)) != g.degeneracy(fs, j)) {
            r.simplicial = Verdict::fail(cat("f s_", j, " != s_", j, " f on ", t.label(s)));
            break;
          }
        if (!r.simplicial) break;
        ++r.simplicial.checked;
      }
  } catch (const Error& e) {
    r.simplicial = Verdict::fail(e.what());
  }

  try {
    std::mt19937_64 rng(seed);
    for (int m = 0; m <= max_dim && r.multiplicative; ++m) {
      auto all = t.simplices(m);
      std::vector<std::pair<std::size_t, std::size_t>> idx;
      if (all.size() * all.size() <= pairs) {
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = 0; b < all.size(); ++b) idx.push_back({a, b});
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (std::size_t k = 0; k < pairs; ++k) idx.push_back({pick(rng), pick(rng)});
      }
      for (auto [a, b] : idx) {
        auto prod = tri_multiply(t, all[a], all[b]);
        if (f(prod) != g.multiply(f(all[a]), f(all[b]))) {
          r.multiplicative = Verdict::fail("f(ab) != f(a)f(b) for a = " + t.label(all[a]) + ", b = " + t.label(all[b]));
          break;
        }
        ++r.multiplicative.checked;
      }
    }
  } catch (const Error& e) {
    r.multiplicative = Verdict::fail(e.what());
  }
  return r;
}

// ---- the chain-level statement ------------------------------------------------

// f_Sz(⟦x_1|...|x_k⟧) = t_Sz(x_1) ··· t_Sz(x_k)
inline GroupChain f_sz(const SzProvider& p, const LoopGroup& g, const CobarWord& w) {
  const auto& X = g.base();
  GroupChain out;
  add_term(out, g.identity(0), Integer(1));
  for (int x : w) out = group_product(g, out, t_sz(p, g, X.gen(x)));
  return out;
}

// C(f) ∘ 𝒕 ∘ iso on a basis word.
inline GroupChain f_t_iso(const SzczarbaMap& f, const Triangulation<CubicalCobar>& t, const CobarWord& w) {
  GroupChain out;
  const auto& g = f.group();
  for (const auto& [s, c] : t_chain(t, f.cobar().basis_cube(w))) {
    auto v = f(s);
    if (!g.is_degenerate(v)) add_term(out, v, c);
  }
  return out;
}

struct MainTheoremReport {
  Verdict equality, chain_map, comultiplicative;
};

inline MainTheoremReport main_theorem_check(const SzczarbaMap& f, const Triangulation<CubicalCobar>& t,
                                            const SzProvider& p, const OmegaComplex& om, int max_deg) {
  MainTheoremReport r;
  const auto& g = f.group();
  const auto& X = g.base();
  const auto& cob = f.cobar();
  int top = std::min(max_deg, om.complex.top());
  auto apply = [&](const LinComb<CobarWord>& c) {
    GroupChain out;
    for (const auto& [w, coef] : c) add_comb(out, f_sz(p, g, w), coef);
    return out;
  };
  try {
    for (int d = 0; d <= top; ++d)
      for (const auto& w : om.basis[d]) {
        auto lhs = f_t_iso(f, t, w), rhs = f_sz(p, g, w);
        if (lhs != rhs) {
          r.equality &= Verdict::fail("C(f)𝒕 and f_Sz differ on " + cob.word_label(w) + ": " +
                                      render_group_chain(g, lhs) + " vs " + render_group_chain(g, rhs));
          break;
        }
        ++r.equality.checked;
      }
    for (int d = 1; d <= top; ++d)
      for (const auto& w : om.basis[d]) {
        auto lhs = apply(omega_boundary(X, w)), rhs = group_boundary(g, f_sz(p, g, w));
        if (lhs != rhs) {
          r.chain_map &= Verdict::fail("f_Sz d != d f_Sz on " + cob.word_label(w));
          break;
        }
        ++r.chain_map.checked;
      }
    require(om.complex.diagonal.has_value(), "comultiplicativity needs the transported diagonal");
    for (int d = 0; d <= top; ++d)
      for (std::size_t j = 0; j < om.basis[d].size(); ++j) {
        GroupTensor lhs = group_diagonal(g, f_sz(p, g, om.basis[d][j])), rhs;
        for (const auto& [k, c] : (*om.complex.diagonal)[d][j]) {
          auto a = f_sz(p, g, om.basis[k.p][k.left]), b = f_sz(p, g, om.basis[d - k.p][k.right]);
          for (const auto& [x, cx] : a)
            for (const auto& [y, cy] : b) add_term(rhs, std::pair{x, y}, c * cx * cy);
        }
        if (lhs != rhs) {
          r.comultiplicative &= Verdict::fail("Δ f_Sz != (f_Sz ⊗ f_Sz) Δ on " + cob.word_label(om.basis[d][j]));
          break;
        }
        ++r.comultiplicative.checked;
      }
  } catch (const Error& e) {
    r.equality &= Verdict::fail(e.what());
  }
  return r;
}

}  // namespace cobarlab
