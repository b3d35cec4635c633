#pragma once

#include "cobarlab/chain_algebra.hpp"
#include "cobarlab/combinatorics.hpp"
#include "cobarlab/cube_category.hpp"

#include <concepts>
#include <map>
#include <string>
#include <vector>

namespace cobarlab {

// Faces d^eps_i (1 <= i <= n), degeneracies s_i (1 <= i <= n+1) and min-connections
// gamma_i (1 <= i <= n) on n-cubes; cubes(n) lists every n-cube reachable up to
// the instance's own cap (degenerate and folded ones included).
template <class Y>
concept CubicalSet = requires(const Y& y, const typename Y::Cube& c, int i, int e, int n) {
  { y.dim(c) } -> std::convertible_to<int>;
  { y.face(c, i, e) } -> std::same_as<typename Y::Cube>;
  { y.degeneracy(c, i) } -> std::same_as<typename Y::Cube>;
  { y.connection(c, i) } -> std::same_as<typename Y::Cube>;
  { y.cubes(n) } -> std::same_as<std::vector<typename Y::Cube>>;
  { y.label(c) } -> std::convertible_to<std::string>;
};

// Cubical sets that are also monoids compatible with the structure maps.
template <class Y>
concept CubicalGroup = CubicalSet<Y> && requires(const Y& y, const typename Y::Cube& a) {
  { y.multiply(a, a) } -> std::same_as<typename Y::Cube>;
  { y.unit(0) } -> std::same_as<typename Y::Cube>;
};

template <CubicalSet Y>
bool is_degenerate(const Y& y, const typename Y::Cube& c) {
  int n = y.dim(c);
  for (int i = 1; i <= n; ++i)
    if (y.degeneracy(y.face(c, i, 0), i) == c) return true;
  return false;
}

template <CubicalSet Y>
bool is_folded(const Y& y, const typename Y::Cube& c) {
  int n = y.dim(c);
  for (int i = 1; i < n; ++i)
    if (y.connection(y.face(c, i, 1), i) == c) return true;
  return false;
}

template <CubicalSet Y>
bool is_basis_cube(const Y& y, const typename Y::Cube& c) {
  return !is_degenerate(y, c) && !is_folded(y, c);
}

template <CubicalSet Y>
std::vector<typename Y::Cube> basis_cubes(const Y& y, int n) {
  std::vector<typename Y::Cube> out;
  for (const auto& c : y.cubes(n))
    if (is_basis_cube(y, c)) out.push_back(c);
  return out;
}

// Every identity among faces, degeneracies and connections, on every cube of
// dimension <= max_dim.
template <CubicalSet Y>
Verdict validate_cubical(const Y& y, int max_dim) {
  Verdict v;
  using C = typename Y::Cube;
  for (int n = 0; n <= max_dim; ++n)
    for (const C& c : y.cubes(n)) {
      auto fail = [&](const std::string& what) { return Verdict::fail(what + " fails on " + y.label(c)); };
      if (y.dim(c) != n) return fail("dimension");
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i < j; ++i)
          for (int e = 0; e <= 1; ++e)
            for (int f = 0; f <= 1; ++f)
              if (y.face(y.face(c, j, f), i, e) != y.face(y.face(c, i, e), j - 1, f))
                return fail(cat("d", e, "_", i, " d", f, "_", j));
      for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= j; ++i)
          if (y.degeneracy(y.degeneracy(c, j), i) != y.degeneracy(y.degeneracy(c, i), j + 1))
            return fail(cat("s_", i, " s_", j));
      for (int j = 1; j <= n + 1; ++j) {
        C sj = y.degeneracy(c, j);
        for (int i = 1; i <= n + 1; ++i)
          for (int e = 0; e <= 1; ++e) {
            C lhs = y.face(sj, i, e);
            C rhs = i < j ? y.degeneracy(y.face(c, i, e), j - 1) : i == j ? c : y.degeneracy(y.face(c, i - 1, e), j);
            if (lhs != rhs) return fail(cat("d", e, "_", i, " s_", j));
          }
      }
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i)
          if (y.connection(y.connection(c, j), i) != y.connection(y.connection(c, i), j + 1))
            return fail(cat("γ_", i, " γ_", j));
      for (int j = 1; j <= n; ++j) {
        C gj = y.connection(c, j);
        for (int i = 1; i <= n + 1; ++i)
          for (int e = 0; e <= 1; ++e) {
            C lhs = y.face(gj, i, e), rhs;
            if (i < j) rhs = y.connection(y.face(c, i, e), j - 1);
            else if (i == j || i == j + 1) rhs = e == 0 ? y.degeneracy(y.face(c, j, 0), j) : c;
            else rhs = y.connection(y.face(c, i - 1, e), j);
            if (lhs != rhs) return fail(cat("d", e, "_", i, " γ_", j));
          }
      }
      for (int j = 1; j <= n + 1; ++j) {
        C sj = y.degeneracy(c, j);
        for (int i = 1; i <= n + 1; ++i) {
          C lhs = y.connection(sj, i), rhs;
          if (i < j) rhs = y.degeneracy(y.connection(c, i), j + 1);
          else if (i == j) rhs = y.degeneracy(y.degeneracy(c, j), j + 1);
          else rhs = y.degeneracy(y.connection(c, i - 1), j);
          if (lhs != rhs) return fail(cat("γ_", i, " s_", j));
        }
      }
      ++v.checked;
    }
  return v;
}

template <class Cube>
struct CubicalChains {
  ChainComplex complex;
  std::vector<std::vector<Cube>> basis;
  std::vector<std::map<Cube, std::size_t>> index;
};

// Normalized chains (degenerate and folded cubes divided out) with the Serre
// diagonal and augmentation. d y = Σ (-1)^i (d^0_i y - d^1_i y).
template <CubicalSet Y>
CubicalChains<typename Y::Cube> cubical_chains(const Y& y, int max_dim, bool truncated) {
  CubicalChains<typename Y::Cube> out;
  for (int n = 0; n <= max_dim; ++n) out.basis.push_back(basis_cubes(y, n));
  out.index.resize(max_dim + 1);
  auto& c = out.complex;
  c.truncated = truncated;
  c.labels.resize(max_dim + 1);
  c.boundary.resize(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n)
    for (std::size_t i = 0; i < out.basis[n].size(); ++i) {
      out.index[n][out.basis[n][i]] = i;
      c.labels[n].push_back(y.label(out.basis[n][i]));
    }
  auto lookup = [&](int n, const typename Y::Cube& f) -> std::optional<std::size_t> {
    auto it = out.index[n].find(f);
    if (it != out.index[n].end()) return it->second;
    require(!is_basis_cube(y, f), "cube missing from basis: " + y.label(f));
    return std::nullopt;
  };
  for (int n = 0; n <= max_dim; ++n) {
    c.boundary[n] = IntMatrix(n == 0 ? 0 : out.basis[n - 1].size(), out.basis[n].size());
    for (std::size_t j = 0; j < out.basis[n].size() && n > 0; ++j)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e)
          if (auto r = lookup(n - 1, y.face(out.basis[n][j], i, e)))
            c.boundary[n](*r, j) += Integer((i % 2 == 0 ? 1 : -1) * (e == 0 ? 1 : -1));
  }
  std::vector<std::vector<TensorVec>> diag(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n)
    for (const auto& cube : out.basis[n]) {
      TensorVec v;
      for (int k = 0; k <= n; ++k)
        for (const auto& sh : all_shuffles(k, n - k)) {
          auto left = cube, right = cube;
          for (auto it = sh.beta.rbegin(); it != sh.beta.rend(); ++it) left = y.face(left, *it, 0);
          for (auto it = sh.alpha.rbegin(); it != sh.alpha.rend(); ++it) right = y.face(right, *it, 1);
          auto li = lookup(k, left), ri = lookup(n - k, right);
          if (li && ri) add_term(v, TensorKey{k, *li, *ri}, Integer(sh.sign()));
        }
      diag[n].push_back(std::move(v));
    }
  c.diagonal = std::move(diag);
  c.augmentation = std::vector<Integer>(out.basis[0].size(), Integer(1));
  return out;
}

// The standard n-cube: k-cubes are the morphisms 2^k -> 2^n, acting by precomposition.
class StandardCube {
 public:
  using Cube = CubeMorphism;
  explicit StandardCube(int n) : n_(n) {}
  int arity() const { return n_; }
  int dim(const Cube& c) const { return c.source(); }
  Cube face(const Cube& c, int i, int e) const { return c.compose(CubeMorphism::delta(c.source(), i, e)); }
  Cube degeneracy(const Cube& c, int i) const { return c.compose(CubeMorphism::sigma(c.source() + 1, i)); }
  Cube connection(const Cube& c, int i) const { return c.compose(CubeMorphism::gamma(c.source() + 1, i)); }
  std::vector<Cube> cubes(int k) const { return all_cube_morphisms(k, n_); }
  std::string label(const Cube& c) const { return c.str(); }
  Cube top() const { return CubeMorphism::identity(n_); }

 private:
  int n_;
};

// Y x Z with (s_{k+1} a, b) ~ (a, s_1 b). The stored left factor is never
// top-degenerate, so equality of classes is equality of pairs.
template <CubicalSet Y, CubicalSet Z>
class ProductCubical {
 public:
  using Cube = std::pair<typename Y::Cube, typename Z::Cube>;
  ProductCubical(const Y& y, const Z& z) : y_(y), z_(z) {}

  Cube make(typename Y::Cube a, typename Z::Cube b) const {
    for (int k = y_.dim(a); k >= 1; k = y_.dim(a)) {
      auto lower = y_.face(a, k, 0);
      if (y_.degeneracy(lower, k) != a) break;
      a = lower;
      b = z_.degeneracy(b, 1);
    }
    return {a, b};
  }
  int dim(const Cube& c) const { return y_.dim(c.first) + z_.dim(c.second); }
  Cube face(const Cube& c, int i, int e) const {
    int k = y_.dim(c.first);
    if (i <= k) return make(y_.face(c.first, i, e), c.second);
    return make(c.first, z_.face(c.second, i - k, e));
  }
  Cube degeneracy(const Cube& c, int i) const {
    int k = y_.dim(c.first);
    if (i <= k + 1) return make(y_.degeneracy(c.first, i), c.second);
    return make(c.first, z_.degeneracy(c.second, i - k));
  }
  Cube connection(const Cube& c, int i) const {
    int k = y_.dim(c.first);
    if (i <= k) return make(y_.connection(c.first, i), c.second);
    return make(c.first, z_.connection(c.second, i - k));
  }
  std::vector<Cube> cubes(int n) const {
    std::vector<Cube> out;
    for (int p = 0; p <= n; ++p)
      for (const auto& a : y_.cubes(p)) {
        if (p >= 1 && y_.degeneracy(y_.face(a, p, 0), p) == a) continue;
        for (const auto& b : z_.cubes(n - p)) out.push_back({a, b});
      }
    return out;
  }
  std::string label(const Cube& c) const { return "[" + y_.label(c.first) + ", " + z_.label(c.second) + "]"; }

  const Y& left() const { return y_; }
  const Z& right() const { return z_; }

 private:
  const Y& y_;
  const Z& z_;
};

}  // namespace cobarlab
