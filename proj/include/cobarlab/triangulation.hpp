#pragma once

#include "cobarlab/cubical.hpp"
#include "cobarlab/simplicial.hpp"
#include "cobarlab/simplicial_cube.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cobarlab {

template <class Cube>
struct TriSimplex {
  Cube cube;
  CubeSimplex u;
  auto operator<=>(const TriSimplex&) const = default;
  bool operator==(const TriSimplex&) const = default;
};

namespace detail {

inline CubeSimplex delete_row(const CubeSimplex& u, int i) {
  auto k = u.bracket();
  k.erase(k.begin() + (i - 1));
  return {u.dim(), k};
}

inline CubeSimplex merge_rows_min(const CubeSimplex& u, int i) {
  auto k = u.bracket();
  k[i - 1] = std::max(k[i - 1], k[i]);
  k.erase(k.begin() + i);
  return {u.dim(), k};
}

}  // namespace detail

// The triangulation of a cubical set. Simplices are classes [y,u] stored by a
// canonical representative: y neither degenerate nor folded, no row of u constant.
// Cubes of dimension above cube_cap are never produced, so simplices(m) and the
// chain complex describe the triangulation of the cube_cap-skeleton.
template <CubicalSet Y>
class Triangulation {
 public:
  using Cube = typename Y::Cube;
  using Simplex = TriSimplex<Cube>;

  Triangulation(const Y& y, int cube_cap) : y_(&y), cap_(cube_cap) {}

  const Y& cubical() const { return *y_; }
  int cube_cap() const { return cap_; }

  // One application of each identification rule that currently applies:
  //   (a) u lies on the face t_i = eps: (y,u) -> (d^eps_i y, u without row i)
  //   (b) y = s_i y':                   (y,u) -> (y', (σ_i)_* u)
  //   (c) y = γ_i y':                   (y,u) -> (y', (γ_i)_* u)
  std::vector<Simplex> reductions(const Simplex& x) const {
    std::vector<Simplex> out;
    const auto& y = *y_;
    int d = y.dim(x.cube), m = x.u.dim();
    for (int i = 1; i <= d; ++i) {
      int k = x.u.part_of(i);
      if (k == 0) out.push_back({y.face(x.cube, i, 1), detail::delete_row(x.u, i)});
      if (k == m + 1) out.push_back({y.face(x.cube, i, 0), detail::delete_row(x.u, i)});
    }
    for (int i = 1; i <= d; ++i) {
      auto lower = y.face(x.cube, i, 0);
      if (y.degeneracy(lower, i) == x.cube) out.push_back({lower, detail::delete_row(x.u, i)});
    }
    for (int i = 1; i < d; ++i) {
      auto lower = y.face(x.cube, i, 1);
      if (y.connection(lower, i) == x.cube) out.push_back({lower, detail::merge_rows_min(x.u, i)});
    }
    return out;
  }

  Simplex canonical(Simplex x) const {
    require(y_->dim(x.cube) == x.u.arity(), "triangulation: simplex arity differs from cube dimension");
    for (auto r = reductions(x); !r.empty(); r = reductions(x)) x = r.front();
    return x;
  }
  Simplex make(const Cube& c, const CubeSimplex& u) const { return canonical({c, u}); }

  // Every terminal form reachable by applying the rules in any order.
  std::set<Simplex> all_normal_forms(const Simplex& x) const {
    std::set<Simplex> out, seen;
    std::vector<Simplex> todo{x};
    while (!todo.empty()) {
      auto cur = todo.back();
      todo.pop_back();
      if (!seen.insert(cur).second) continue;
      auto r = reductions(cur);
      if (r.empty()) out.insert(cur);
      for (auto& s : r) todo.push_back(s);
    }
    return out;
  }

  int dim(const Simplex& x) const { return x.u.dim(); }
  Simplex face(const Simplex& x, int j) const { return canonical({x.cube, x.u.face(j)}); }
  Simplex degeneracy(const Simplex& x, int j) const { return canonical({x.cube, x.u.degeneracy(j)}); }
  bool is_degenerate(const Simplex& x) const { return x.u.degenerate(); }
  std::string label(const Simplex& x) const { return "[" + y_->label(x.cube) + ", " + x.u.str() + "]"; }

  // Canonical m-simplices (degenerate ones included) over basis cubes of dimension <= cube_cap.
  std::vector<Simplex> simplices(int m) const {
    std::vector<Simplex> out;
    for (int n = 0; n <= cap_; ++n)
      for (const auto& c : basis_cubes(*y_, n))
        for (const auto& u : SimplicialCube(n).simplices(m))
          if (interior(u)) out.push_back({c, u});
    return out;
  }
  std::vector<Simplex> nondegenerate(int m) const {
    std::vector<Simplex> out;
    for (auto& s : simplices(m))
      if (!s.u.degenerate()) out.push_back(s);
    return out;
  }

  static bool interior(const CubeSimplex& u) {
    for (int k : u.bracket())
      if (k == 0 || k == u.dim() + 1) return false;
    return true;
  }

 private:
  const Y* y_;
  int cap_;
};

template <CubicalSet Y>
SimplicialChains<TriSimplex<typename Y::Cube>> triangulated_chains(const Triangulation<Y>& t) {
  std::vector<std::vector<TriSimplex<typename Y::Cube>>> basis;
  for (int m = 0; m <= t.cube_cap(); ++m) basis.push_back(t.nondegenerate(m));
  return simplicial_chains(t, std::move(basis), false);
}

// 𝒕(y) = Σ_π (-1)^{deg π} [y, u_π]
template <CubicalSet Y>
LinComb<TriSimplex<typename Y::Cube>> t_chain(const Triangulation<Y>& t, const typename Y::Cube& y, int sign = 1) {
  LinComb<TriSimplex<typename Y::Cube>> out;
  int n = t.cubical().dim(y);
  for (const auto& pi : all_permutations(n)) {
    auto s = t.make(y, u_pi(pi));
    if (!t.is_degenerate(s)) add_term(out, s, Integer(sign * pi.sign()));
  }
  return out;
}

// Matrix of 𝒕 between the normalized chains of Y and of its triangulation.
// sign_flip_degree >= 0 negates 𝒕 in that degree (negative control).
template <CubicalSet Y>
ChainMap t_map(const Triangulation<Y>& t, const CubicalChains<typename Y::Cube>& cy,
               const SimplicialChains<TriSimplex<typename Y::Cube>>& ct, int sign_flip_degree = -1) {
  ChainMap f;
  int top = std::min(cy.complex.top(), ct.complex.top());
  for (int d = 0; d <= top; ++d) {
    IntMatrix m(ct.complex.rank(d), cy.complex.rank(d));
    for (std::size_t j = 0; j < cy.basis[d].size(); ++j)
      for (const auto& [s, c] : t_chain(t, cy.basis[d][j], d == sign_flip_degree ? -1 : 1))
        m(ct.index[d].at(s), j) += c;
    f.components.push_back(std::move(m));
  }
  return f;
}

// q : 𝕋Y × 𝕋Z -> 𝕋(Y × Z) and its inverse.
template <CubicalSet Y, CubicalSet Z>
class TriangulationProduct {
 public:
  using P = ProductCubical<Y, Z>;
  using Left = TriSimplex<typename Y::Cube>;
  using Right = TriSimplex<typename Z::Cube>;
  using Joint = TriSimplex<typename P::Cube>;

  TriangulationProduct(const Triangulation<Y>& ty, const Triangulation<Z>& tz, const Triangulation<P>& tp)
      : ty_(ty), tz_(tz), tp_(tp) {}

  Joint forward(const Left& a, const Right& b) const {
    require(a.u.dim() == b.u.dim(), "q: simplices of different dimensions");
    auto k = a.u.bracket();
    k.insert(k.end(), b.u.bracket().begin(), b.u.bracket().end());
    return tp_.canonical({tp_.cubical().make(a.cube, b.cube), CubeSimplex(a.u.dim(), k)});
  }
  std::pair<Left, Right> inverse(const Joint& x) const {
    int k = ty_.cubical().dim(x.cube.first), l = tz_.cubical().dim(x.cube.second);
    return {ty_.make(x.cube.first, project(x.u, 1, k)), tz_.make(x.cube.second, project(x.u, k + 1, l))};
  }

 private:
  const Triangulation<Y>& ty_;
  const Triangulation<Z>& tz_;
  const Triangulation<P>& tp_;
};

// Simplicial-group product on 𝕋Y for a cubical group Y: [y,v]·[z,w] = [y·z, (v,w)].
template <CubicalGroup Y>
TriSimplex<typename Y::Cube> tri_multiply(const Triangulation<Y>& t, const TriSimplex<typename Y::Cube>& a,
                                          const TriSimplex<typename Y::Cube>& b) {
  require(a.u.dim() == b.u.dim(), "product of simplices of different dimensions");
  auto k = a.u.bracket();
  k.insert(k.end(), b.u.bracket().begin(), b.u.bracket().end());
  return t.make(t.cubical().multiply(a.cube, b.cube), CubeSimplex(a.u.dim(), k));
}

template <CubicalGroup Y>
TriSimplex<typename Y::Cube> tri_unit(const Triangulation<Y>& t, int m) {
  return t.make(t.cubical().unit(0), CubeSimplex(m, {}));
}

// Attach the Eilenberg-Zilber product to triangulated chains of a cubical group.
template <CubicalGroup Y>
void attach_tri_product(const Triangulation<Y>& t, SimplicialChains<TriSimplex<typename Y::Cube>>& ct) {
  const auto* tp = &t;
  const auto* chains = &ct;
  ct.complex.product = [tp, chains](int p, std::size_t i, int q, std::size_t j) {
    SparseVec out;
    if (p + q > chains->complex.top()) return out;
    for (const auto& [pair, c] : shuffle_map(*tp, chains->basis[p][i], *tp, chains->basis[q][j])) {
      auto s = tri_multiply(*tp, pair.first, pair.second);
      if (!tp->is_degenerate(s)) add_term(out, chains->index[p + q].at(s), c);
    }
    return out;
  };
  auto u = tri_unit(t, 0);
  ct.complex.unit = ct.index[0].at(u);
}

// Attach the cubical-group product to normalized cubical chains.
template <CubicalGroup Y>
void attach_cubical_product(const Y& y, CubicalChains<typename Y::Cube>& cy) {
  const auto* yp = &y;
  const auto* chains = &cy;
  cy.complex.product = [yp, chains](int p, std::size_t i, int q, std::size_t j) {
    SparseVec out;
    if (p + q > chains->complex.top()) return out;
    auto c = yp->multiply(chains->basis[p][i], chains->basis[q][j]);
    auto it = chains->index[p + q].find(c);
    if (it != chains->index[p + q].end()) add_term(out, it->second, Integer(1));
    return out;
  };
  cy.complex.unit = cy.index[0].at(y.unit(0));
}

// ---- realization coordinates ------------------------------------------------

// b_j = a_i + ... + a_m where j lies in part u_i.
inline std::vector<Rational> realize(const CubeSimplex& u, const std::vector<Rational>& a) {
  require(static_cast<int>(a.size()) == u.dim() + 1, "realize: wrong number of barycentric coordinates");
  Rational total = 0;
  for (const auto& x : a) {
    require(x >= 0, "realize: negative barycentric coordinate");
    total += x;
  }
  require(total == 1, "realize: barycentric coordinates must sum to 1");
  std::vector<Rational> b;
  for (int k : u.bracket()) {
    Rational s = 0;
    for (int v = k; v <= u.dim(); ++v) s += a[v];
    b.push_back(s);
  }
  return b;
}

// Inverse on the top simplices: sort b decreasingly (ties: smaller label first).
inline std::pair<CubeSimplex, std::vector<Rational>> unrealize(const std::vector<Rational>& b) {
  int n = static_cast<int>(b.size());
  for (const auto& x : b) require(x >= 0 && x <= 1, "unrealize: coordinate outside [0,1]");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return b[p - 1] > b[q - 1]; });
  Permutation pi(order);
  std::vector<Rational> a(n + 1);
  if (n == 0) {
    a[0] = 1;
    return {u_pi(pi), a};
  }
  a[0] = 1 - b[pi(1) - 1];
  for (int i = 1; i < n; ++i) a[i] = b[pi(i) - 1] - b[pi(i + 1) - 1];
  a[n] = b[pi(n) - 1];
  return {u_pi(pi), a};
}

}  // namespace cobarlab
