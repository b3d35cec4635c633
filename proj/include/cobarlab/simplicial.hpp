#pragma once

#include "cobarlab/chain_algebra.hpp"
#include "cobarlab/combinatorics.hpp"

#include <algorithm>
#include <concepts>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cobarlab {

// A simplex s_{j_r}...s_{j_1} g in Eilenberg-Zilber normal form, j_r > ... > j_1.
struct Simplex {
  int gen = -1;
  std::vector<int> degen;  // strictly decreasing
  int dim = 0;

  bool degenerate() const { return !degen.empty(); }
  auto operator<=>(const Simplex& o) const {
    if (auto c = gen <=> o.gen; c != 0) return c;
    if (auto c = dim <=> o.dim; c != 0) return c;
    return degen <=> o.degen;
  }
  bool operator==(const Simplex&) const = default;
};

namespace detail {

// A monotone surjection [n] -> [m] stored as its value vector.
using Surj = std::vector<int>;

inline Surj surj_of(const Simplex& x) {
  Surj eta(x.dim + 1);
  for (int v = 0; v <= x.dim; ++v) {
    int below = 0;
    for (int j : x.degen)
      if (j < v) ++below;
    eta[v] = v - below;
  }
  return eta;
}

inline std::vector<int> collapsed(const Surj& eta) {
  std::vector<int> J;
  for (int v = static_cast<int>(eta.size()) - 2; v >= 0; --v)
    if (eta[v] == eta[v + 1]) J.push_back(v);
  return J;  // decreasing
}

// (h, K) pulled back along theta : [n] -> [dim of base].
inline Simplex pull_back(const Simplex& base, const Surj& theta) {
  Surj eta = surj_of(base);
  Surj total(theta.size());
  for (std::size_t v = 0; v < theta.size(); ++v) total[v] = eta[theta[v]];
  return {base.gen, collapsed(total), static_cast<int>(theta.size()) - 1};
}

}  // namespace detail

enum class Reduction { none, reduced, one_reduced };

struct Generator {
  std::string name;
  int dim = 0;
};

class SimplicialPresentation {
 public:
  using Simplex = cobarlab::Simplex;

  std::string name;
  Reduction flag = Reduction::none;
  std::vector<Generator> generators;
  std::vector<std::vector<Simplex>> faces;  // faces[g][i] = d_i g

  int add_generator(const std::string& gname, int dim) {
    require(!index_.count(gname), "duplicate generator " + gname);
    require(dim >= 0, "negative dimension for " + gname);
    index_[gname] = static_cast<int>(generators.size());
    generators.push_back({gname, dim});
    faces.emplace_back(dim == 0 ? 0 : dim + 1);
    return static_cast<int>(generators.size()) - 1;
  }
  int find(const std::string& gname) const {
    auto it = index_.find(gname);
    require(it != index_.end(), "unknown generator " + gname);
    return it->second;
  }
  bool has(const std::string& gname) const { return index_.count(gname) > 0; }

  Simplex gen(int g) const { return {g, {}, generators.at(g).dim}; }
  Simplex gen(const std::string& gname) const { return gen(find(gname)); }

  int dim(const Simplex& x) const { return x.dim; }
  bool is_degenerate(const Simplex& x) const { return x.degenerate(); }

  Simplex face(const Simplex& x, int i) const {
    require(x.dim >= 1 && i >= 0 && i <= x.dim, cat("face index ", i, " out of range for dim ", x.dim));
    auto eta = detail::surj_of(x);
    detail::Surj comp;
    for (int v = 0; v < x.dim; ++v) comp.push_back(eta[v < i ? v : v + 1]);
    int w = eta[i];
    bool hit = (i > 0 && eta[i - 1] == w) || (i < x.dim && eta[i + 1] == w);
    if (hit) return {x.gen, detail::collapsed(comp), x.dim - 1};
    for (auto& c : comp)
      if (c > w) --c;
    const auto& base = faces.at(x.gen).at(w);
    require(base.gen >= 0, cat("face table entry missing: d_", w, " ", generators[x.gen].name));
    return detail::pull_back(base, comp);
  }

  Simplex degeneracy(const Simplex& x, int i) const {
    require(i >= 0 && i <= x.dim, cat("degeneracy index ", i, " out of range for dim ", x.dim));
    auto eta = detail::surj_of(x);
    detail::Surj comp;
    for (int v = 0; v <= x.dim + 1; ++v) comp.push_back(eta[v <= i ? v : v - 1]);
    return {x.gen, detail::collapsed(comp), x.dim + 1};
  }

  Simplex degenerate_basepoint(int n) const {
    int b = find("*");
    Simplex x = gen(b);
    while (x.dim < n) x = degeneracy(x, 0);
    return x;
  }

  std::string label(const Simplex& x) const {
    std::string s;
    for (int j : x.degen) s += "s" + std::to_string(j) + " ";
    return s + generators.at(x.gen).name;
  }

  // All simplices of dimension n, degenerate ones included.
  std::vector<Simplex> simplices(int n) const {
    std::vector<Simplex> out;
    for (int g = 0; g < static_cast<int>(generators.size()); ++g) {
      int m = generators[g].dim;
      if (m > n) continue;
      int r = n - m;
      std::vector<bool> mask(n, false);
      std::fill(mask.begin(), mask.begin() + r, true);
      do {
        std::vector<int> J;
        for (int v = n - 1; v >= 0; --v)
          if (mask[v]) J.push_back(v);
        out.push_back({g, J, n});
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return out;
  }
  std::vector<Simplex> nondegenerate(int n) const {
    std::vector<Simplex> out;
    for (int g = 0; g < static_cast<int>(generators.size()); ++g)
      if (generators[g].dim == n) out.push_back(gen(g));
    return out;
  }
  int max_generator_dim() const {
    int d = -1;
    for (const auto& g : generators) d = std::max(d, g.dim);
    return d;
  }

 private:
  std::map<std::string, int> index_;
};

template <class S>
concept SimplicialSet = requires(const S& s, const typename S::Simplex& x, int i) {
  { s.dim(x) } -> std::convertible_to<int>;
  { s.face(x, i) } -> std::same_as<typename S::Simplex>;
  { s.degeneracy(x, i) } -> std::same_as<typename S::Simplex>;
  { s.is_degenerate(x) } -> std::convertible_to<bool>;
  { s.label(x) } -> std::convertible_to<std::string>;
};

// x(0...i) = d_{i+1} ... d_n x
template <SimplicialSet S>
typename S::Simplex front_face(const S& s, typename S::Simplex x, int i) {
  int n = s.dim(x);
  require(i >= 0 && i <= n, "front_face: index out of range");
  for (int j = n; j > i; --j) x = s.face(x, j);
  return x;
}

// x(i...n) = d_0 ... d_{i-1} x
template <SimplicialSet S>
typename S::Simplex back_face(const S& s, typename S::Simplex x, int i) {
  require(i >= 0 && i <= s.dim(x), "back_face: index out of range");
  for (int j = 0; j < i; ++j) x = s.face(x, 0);
  return x;
}

// s_{b_l - 1} ... s_{b_1 - 1} x for an increasing index list b.
template <SimplicialSet S>
typename S::Simplex degenerate_along(const S& s, typename S::Simplex x, const std::vector<int>& b) {
  for (int j : b) x = s.degeneracy(x, j - 1);
  return x;
}

// Faces applied right to left: ops = (i_1, ..., i_r) means d_{i_1} ... d_{i_r} x.
template <SimplicialSet S>
typename S::Simplex apply_faces(const S& s, typename S::Simplex x, const std::vector<int>& ops) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) x = s.face(x, *it);
  return x;
}

template <SimplicialSet S>
bool is_s_image(const S& s, const typename S::Simplex& x, int j) {
  return s.degeneracy(s.face(x, j), j) == x;
}

template <SimplicialSet S>
LinComb<typename S::Simplex> normalized_boundary(const S& s, const typename S::Simplex& x) {
  LinComb<typename S::Simplex> out;
  int n = s.dim(x);
  if (n == 0) return out;
  for (int i = 0; i <= n; ++i) {
    auto f = s.face(x, i);
    if (!s.is_degenerate(f)) add_term(out, f, Integer(i % 2 == 0 ? 1 : -1));
  }
  return out;
}

template <class A, class B>
using PairComb = LinComb<std::pair<A, B>>;

// Σ_{(α,β)} (-1)^{(α,β)} (s_{β-1} x, s_{α-1} y), with degenerate pairs kept.
template <SimplicialSet S, SimplicialSet T>
PairComb<typename S::Simplex, typename T::Simplex> shuffle_map(const S& s, const typename S::Simplex& x,
                                                               const T& t, const typename T::Simplex& y) {
  PairComb<typename S::Simplex, typename T::Simplex> out;
  int k = s.dim(x), l = t.dim(y);
  for (const auto& sh : all_shuffles(k, l))
    add_term(out, std::pair{degenerate_along(s, x, sh.beta), degenerate_along(t, y, sh.alpha)},
             Integer(sh.sign()));
  return out;
}

// Cartesian product of two simplicial sets, componentwise structure maps.
template <SimplicialSet S, SimplicialSet T>
class ProductSimplicial {
 public:
  using Simplex = std::pair<typename S::Simplex, typename T::Simplex>;
  ProductSimplicial(const S& s, const T& t) : s_(s), t_(t) {}

  int dim(const Simplex& x) const { return s_.dim(x.first); }
  Simplex face(const Simplex& x, int i) const { return {s_.face(x.first, i), t_.face(x.second, i)}; }
  Simplex degeneracy(const Simplex& x, int i) const {
    return {s_.degeneracy(x.first, i), t_.degeneracy(x.second, i)};
  }
  bool is_degenerate(const Simplex& x) const {
    for (int j = 0; j < dim(x); ++j)
      if (is_s_image(s_, x.first, j) && is_s_image(t_, x.second, j)) return true;
    return false;
  }
  std::string label(const Simplex& x) const { return "(" + s_.label(x.first) + ", " + t_.label(x.second) + ")"; }
  const S& left() const { return s_; }
  const T& right() const { return t_; }

 private:
  const S& s_;
  const T& t_;
};

template <class Simp>
struct SimplicialChains {
  ChainComplex complex;
  std::vector<std::vector<Simp>> basis;
  std::vector<std::map<Simp, std::size_t>> index;

  // Coefficient vector of a combination of degree-d simplices; degenerate ones
  // must already be dropped by the caller.
  SparseVec coords(int d, const LinComb<Simp>& c) const {
    SparseVec v;
    for (const auto& [x, coef] : c) {
      auto it = index[d].find(x);
      require(it != index[d].end(), "simplex not in basis");
      add_term(v, it->second, coef);
    }
    return v;
  }
};

// Normalized chains on an explicit nondegenerate basis, with AW diagonal and augmentation.
template <SimplicialSet S>
SimplicialChains<typename S::Simplex> simplicial_chains(const S& s,
                                                       std::vector<std::vector<typename S::Simplex>> basis,
                                                       bool truncated) {
  SimplicialChains<typename S::Simplex> out;
  out.basis = std::move(basis);
  int top = static_cast<int>(out.basis.size()) - 1;
  out.index.resize(top + 1);
  auto& c = out.complex;
  c.truncated = truncated;
  c.labels.resize(top + 1);
  c.boundary.resize(top + 1);
  for (int d = 0; d <= top; ++d)
    for (std::size_t i = 0; i < out.basis[d].size(); ++i) {
      out.index[d][out.basis[d][i]] = i;
      c.labels[d].push_back(s.label(out.basis[d][i]));
    }
  for (int d = 0; d <= top; ++d) {
    c.boundary[d] = IntMatrix(d == 0 ? 0 : out.basis[d - 1].size(), out.basis[d].size());
    if (d == 0) continue;
    for (std::size_t j = 0; j < out.basis[d].size(); ++j)
      for (const auto& [f, coef] : normalized_boundary(s, out.basis[d][j]))
        c.boundary[d](out.index[d - 1].at(f), j) += coef;
  }
  std::vector<std::vector<TensorVec>> diag(top + 1);
  for (int n = 0; n <= top; ++n)
    for (const auto& x : out.basis[n]) {
      TensorVec v;
      for (int i = 0; i <= n; ++i) {
        auto a = front_face(s, x, i), b = back_face(s, x, i);
        if (s.is_degenerate(a) || s.is_degenerate(b)) continue;
        add_term(v, TensorKey{i, out.index[i].at(a), out.index[n - i].at(b)}, Integer(1));
      }
      diag[n].push_back(std::move(v));
    }
  c.diagonal = std::move(diag);
  c.augmentation = std::vector<Integer>(top >= 0 ? out.basis[0].size() : 0, Integer(1));
  return out;
}

inline SimplicialChains<Simplex> chains(const SimplicialPresentation& p, int max_dim) {
  std::vector<std::vector<Simplex>> basis;
  for (int d = 0; d <= max_dim; ++d) basis.push_back(p.nondegenerate(d));
  return simplicial_chains(p, std::move(basis), max_dim < p.max_generator_dim());
}

// Checks every simplicial identity on every simplex up to max_dim, plus the
// reduction flags. Structural defects of the table are reported as failures.
inline Verdict validate(const SimplicialPresentation& p, int max_dim) {
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    int m = p.generators[g].dim;
    for (int i = 0; i < static_cast<int>(p.faces[g].size()); ++i) {
      const auto& f = p.faces[g][i];
      if (f.gen < 0 || f.gen >= static_cast<int>(p.generators.size()))
        return Verdict::fail(cat("d_", i, " ", p.generators[g].name, " undefined"));
      if (f.dim != m - 1) return Verdict::fail(cat("d_", i, " ", p.generators[g].name, " has wrong dimension"));
      if (p.generators[f.gen].dim + static_cast<int>(f.degen.size()) != f.dim)
        return Verdict::fail(cat("d_", i, " ", p.generators[g].name, " is not in normal form"));
    }
  }
  int zeros = 0, ones = 0;
  for (const auto& g : p.generators) {
    if (g.dim == 0) ++zeros;
    if (g.dim == 1) ++ones;
  }
  if (p.flag != Reduction::none && zeros != 1) return Verdict::fail("flagged reduced but has " + std::to_string(zeros) + " vertices");
  if (p.flag == Reduction::one_reduced && ones != 0) return Verdict::fail("flagged 1-reduced but has nondegenerate 1-simplices");

  Verdict v;
  for (int n = 0; n <= max_dim; ++n)
    for (const auto& x : p.simplices(n)) {
      auto name = p.label(x);
      for (int j = 0; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
          if (p.face(p.face(x, j), i) != p.face(p.face(x, i), j - 1))
            return Verdict::fail(cat("d_", i, " d_", j, " != d_", j - 1, " d_", i, " on ", name));
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (p.degeneracy(p.degeneracy(x, j), i) != p.degeneracy(p.degeneracy(x, i), j + 1))
            return Verdict::fail(cat("s_", i, " s_", j, " != s_", j + 1, " s_", i, " on ", name));
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          auto lhs = p.face(p.degeneracy(x, j), i);
          Simplex rhs;
          if (i < j)
            rhs = p.degeneracy(p.face(x, i), j - 1);
          else if (i <= j + 1)
            rhs = x;
          else
            rhs = p.degeneracy(p.face(x, i - 1), j);
          if (lhs != rhs) return Verdict::fail(cat("d_", i, " s_", j, " identity fails on ", name));
        }
      ++v.checked;
    }
  return v;
}

// ---- fixtures ---------------------------------------------------------------

inline std::string vertex_set_name(const std::vector<int>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

// Faces of subsets of {0..n} of size >= min_size are kept; smaller ones collapse
// to degenerate basepoint simplices (min_size = 1 gives the standard simplex).
inline SimplicialPresentation simplex_quotient(int n, int min_size, const std::string& name, Reduction flag) {
  SimplicialPresentation p;
  p.name = name;
  p.flag = flag;
  if (min_size > 1) p.add_generator("*", 0);
  std::vector<std::vector<int>> subsets;
  for (int size = min_size; size <= n + 1; ++size) {
    std::vector<bool> mask(n + 1, false);
    std::fill(mask.begin(), mask.begin() + size, true);
    do {
      std::vector<int> vs;
      for (int v = 0; v <= n; ++v)
        if (mask[v]) vs.push_back(v);
      subsets.push_back(vs);
      p.add_generator(vertex_set_name(vs), size - 1);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  for (const auto& vs : subsets) {
    if (vs.size() < 2) continue;
    int g = p.find(vertex_set_name(vs));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      auto w = vs;
      w.erase(w.begin() + i);
      if (static_cast<int>(w.size()) >= min_size)
        p.faces[g][i] = p.gen(vertex_set_name(w));
      else
        p.faces[g][i] = p.degenerate_basepoint(static_cast<int>(w.size()) - 1);
    }
  }
  return p;
}

inline SimplicialPresentation standard_simplex(int n) {
  return simplex_quotient(n, 1, "delta" + std::to_string(n), Reduction::none);
}

// Δ^n/∂Δ^n with generators * and sigma.
inline SimplicialPresentation sphere(int n) {
  require(n >= 1, "sphere: n >= 1");
  SimplicialPresentation p;
  p.name = "sphere" + std::to_string(n);
  p.flag = n >= 2 ? Reduction::one_reduced : Reduction::reduced;
  p.add_generator("*", 0);
  int s = p.add_generator("sigma", n);
  for (int i = 0; i <= n; ++i) p.faces[s][i] = p.degenerate_basepoint(n - 1);
  return p;
}

// Δ^n with its k-skeleton collapsed to the basepoint.
inline SimplicialPresentation skeleton_quotient(int n, int k) {
  return simplex_quotient(n, k + 2, "delta" + std::to_string(n) + "/sk" + std::to_string(k),
                          k >= 1 ? Reduction::one_reduced : Reduction::reduced);
}

inline SimplicialPresentation fixture(const std::string& name) {
  auto num = [&](std::size_t from, std::size_t to) {
    std::string digits = name.substr(from, to == std::string::npos ? std::string::npos : to - from);
    require(!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit), "unknown fixture " + name);
    return std::stoi(digits);
  };
  if (name == "interval") {
    auto p = standard_simplex(1);
    p.name = "interval";
    return p;
  }
  if (name.rfind("sphere", 0) == 0) return sphere(num(6, std::string::npos));
  if (name.size() == 2 && name[0] == 'S') return sphere(num(1, std::string::npos));
  if (name.rfind("delta", 0) == 0) {
    auto slash = name.find("/sk");
    if (slash == std::string::npos) return standard_simplex(num(5, std::string::npos));
    return skeleton_quotient(num(5, slash), num(slash + 3, std::string::npos));
  }
  throw Error("unknown fixture " + name);
}

// Product presentation: generators are the nondegenerate pairs.
inline SimplicialPresentation product(const SimplicialPresentation& a, const SimplicialPresentation& b) {
  ProductSimplicial<SimplicialPresentation, SimplicialPresentation> prod(a, b);
  SimplicialPresentation p;
  p.name = a.name + "x" + b.name;
  std::map<std::pair<Simplex, Simplex>, int> ids;
  int top = a.max_generator_dim() + b.max_generator_dim();
  std::vector<std::pair<Simplex, Simplex>> gens;
  for (int n = 0; n <= top; ++n)
    for (const auto& x : a.simplices(n))
      for (const auto& y : b.simplices(n)) {
        std::set<int> common(x.degen.begin(), x.degen.end());
        bool nondeg = std::none_of(y.degen.begin(), y.degen.end(), [&](int j) { return common.count(j); });
        if (!nondeg) continue;
        ids[{x, y}] = p.add_generator(prod.label({x, y}), n);
        gens.push_back({x, y});
      }
  for (const auto& g : gens) {
    int id = ids.at(g);
    int n = g.first.dim;
    for (int i = 0; i <= n && n > 0; ++i) {
      auto f = prod.face(g, i);
      std::vector<int> J;
      for (int j : f.first.degen)
        if (std::find(f.second.degen.begin(), f.second.degen.end(), j) != f.second.degen.end()) J.push_back(j);
      auto x = f.first, y = f.second;
      for (int j : J) {  // decreasing
        x = a.face(x, j);
        y = b.face(y, j);
      }
      p.faces[id][i] = {ids.at({x, y}), J, n - 1};
    }
  }
  return p;
}

}  // namespace cobarlab
