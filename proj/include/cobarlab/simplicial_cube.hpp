#pragma once

#include "cobarlab/combinatorics.hpp"
#include "cobarlab/cube_category.hpp"
#include "cobarlab/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cobarlab {

// An m-simplex of the simplicial n-cube. Coordinate i lies in part k_i of the
// ordered partition (u_0, ..., u_{m+1}); row i of the matrix form is 0 in the
// columns < k_i and 1 from column k_i on.
class CubeSimplex {
 public:
  CubeSimplex() = default;
  CubeSimplex(int m, std::vector<int> bracket) : m_(m), k_(std::move(bracket)) {
    require(m >= 0, "negative simplex dimension");
    for (int k : k_) require(k >= 0 && k <= m + 1, "bracket entry out of range");
  }

  static CubeSimplex from_parts(const std::vector<std::vector<int>>& parts) {
    require(parts.size() >= 2, "partition form needs at least two parts");
    int n = 0;
    for (const auto& p : parts) n += static_cast<int>(p.size());
    std::vector<int> k(n, -1);
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (int i : parts[j]) {
        require(i >= 1 && i <= n && k[i - 1] < 0, "parts do not partition {1..n}");
        k[i - 1] = static_cast<int>(j);
      }
    return {static_cast<int>(parts.size()) - 2, k};
  }
  // Rows must be weakly increasing 0/1 sequences of a common length m+1.
  static CubeSimplex from_matrix(const std::vector<std::vector<int>>& rows, int m) {
    std::vector<int> k;
    for (const auto& r : rows) {
      require(static_cast<int>(r.size()) == m + 1, "matrix row has wrong length");
      int z = 0;
      for (int v = 0; v <= m; ++v) {
        require(r[v] == 0 || r[v] == 1, "matrix entries must be 0 or 1");
        if (v > 0) require(r[v] >= r[v - 1], "matrix row is not weakly increasing");
        if (r[v] == 0) ++z;
      }
      k.push_back(z);
    }
    return {m, k};
  }
  // Vertex columns, weakly increasing in the componentwise order.
  static CubeSimplex from_columns(int n, const std::vector<std::vector<int>>& cols) {
    require(!cols.empty(), "a simplex has at least one vertex");
    std::vector<std::vector<int>> rows(n);
    for (const auto& c : cols) {
      require(static_cast<int>(c.size()) == n, "vertex has wrong arity");
      for (int i = 0; i < n; ++i) rows[i].push_back(c[i]);
    }
    return from_matrix(rows, static_cast<int>(cols.size()) - 1);
  }

  int arity() const { return static_cast<int>(k_.size()); }
  int dim() const { return m_; }
  const std::vector<int>& bracket() const { return k_; }
  int part_of(int i) const { return k_.at(i - 1); }

  std::vector<std::vector<int>> parts() const {
    std::vector<std::vector<int>> u(m_ + 2);
    for (int i = 1; i <= arity(); ++i) u[k_[i - 1]].push_back(i);
    return u;
  }
  std::vector<std::vector<int>> matrix() const {
    std::vector<std::vector<int>> rows;
    for (int k : k_) {
      std::vector<int> r(m_ + 1);
      for (int v = 0; v <= m_; ++v) r[v] = v >= k ? 1 : 0;
      rows.push_back(r);
    }
    return rows;
  }
  std::vector<int> vertex(int v) const {
    std::vector<int> c;
    for (int k : k_) c.push_back(v >= k ? 1 : 0);
    return c;
  }

  CubeSimplex face(int j) const {
    require(m_ > 0 && j >= 0 && j <= m_, "cube simplex face index out of range");
    auto k = k_;
    for (auto& x : k)
      if (x > j) --x;
    return {m_ - 1, k};
  }
  CubeSimplex degeneracy(int j) const {
    require(j >= 0 && j <= m_, "cube simplex degeneracy index out of range");
    auto k = k_;
    for (auto& x : k)
      if (x > j) ++x;
    return {m_ + 1, k};
  }
  bool degenerate() const {
    std::vector<bool> used(m_ + 2, false);
    for (int k : k_) used[k] = true;
    for (int j = 1; j <= m_; ++j)
      if (!used[j]) return true;
    return false;
  }

  std::string str() const {
    std::string s = "(";
    auto u = parts();
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (j) s += ",";
      if (u[j].empty()) s += "∅";
      else if (u[j].size() == 1) s += std::to_string(u[j][0]);
      else {
        s += "{";
        for (std::size_t t = 0; t < u[j].size(); ++t) s += (t ? "," : "") + std::to_string(u[j][t]);
        s += "}";
      }
    }
    return s + ")";
  }
  std::string bracket_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < k_.size(); ++i) s += (i ? "," : "") + std::to_string(k_[i]);
    return s + "]_" + std::to_string(m_);
  }

  auto operator<=>(const CubeSimplex&) const = default;
  bool operator==(const CubeSimplex&) const = default;

 private:
  int m_ = 0;
  std::vector<int> k_;
};

// The simplicial n-cube as a simplicial set.
class SimplicialCube {
 public:
  using Simplex = CubeSimplex;
  explicit SimplicialCube(int n) : n_(n) {}
  int arity() const { return n_; }
  int dim(const Simplex& x) const { return x.dim(); }
  Simplex face(const Simplex& x, int i) const { return x.face(i); }
  Simplex degeneracy(const Simplex& x, int i) const { return x.degeneracy(i); }
  bool is_degenerate(const Simplex& x) const { return x.degenerate(); }
  std::string label(const Simplex& x) const { return x.str(); }

  std::vector<Simplex> simplices(int m) const {
    std::vector<Simplex> out;
    std::vector<int> k(n_, 0);
    while (true) {
      out.emplace_back(m, k);
      int i = n_ - 1;
      while (i >= 0 && k[i] == m + 1) k[i--] = 0;
      if (i < 0) break;
      ++k[i];
    }
    return out;
  }
  std::vector<Simplex> nondegenerate(int m) const {
    std::vector<Simplex> out;
    for (auto& x : simplices(m))
      if (!x.degenerate()) out.push_back(x);
    return out;
  }

 private:
  int n_;
};

// u_π = (∅, π(1), ..., π(n), ∅)
inline CubeSimplex u_pi(const Permutation& pi) {
  int n = pi.size();
  std::vector<int> k(n);
  for (int j = 1; j <= n; ++j) k[pi(j) - 1] = j;
  return {n, k};
}

// Face of u_π obtained by deleting the bars with the given labels (0..n).
// Bar b separates positions b and b+1 of π.
inline CubeSimplex face_by_bar_removal(const Permutation& pi, const std::vector<int>& removed) {
  int n = pi.size();
  std::vector<bool> gone(n + 1, false);
  for (int b : removed) {
    require(b >= 0 && b <= n, "bar label out of range");
    gone[b] = true;
  }
  int kept = 0;
  for (int b = 0; b <= n; ++b) kept += !gone[b];
  require(kept >= 1, "removing every bar leaves no simplex");
  std::vector<int> k(n);
  int part = 0;
  for (int p = 1; p <= n; ++p) {
    if (!gone[p - 1]) ++part;
    k[pi(p) - 1] = part;
  }
  return {kept - 1, k};
}

struct BlockDecomposition {
  CubeSimplex common_face;            // u_π ∩ u_π'
  std::vector<int> kept_bars;         // bars of u_π surviving in the common face
  std::vector<Permutation> blocks;    // τ_1, ..., τ_m with π' = π ∘ (τ_1 ⊔ ... ⊔ τ_m)
};

inline BlockDecomposition block_decomposition(const Permutation& pi, const Permutation& pi2) {
  int n = pi.size();
  require(pi2.size() == n, "block_decomposition: size mismatch");
  BlockDecomposition out;
  std::vector<int> removed;
  std::vector<bool> in_first(n + 1, false), in_second(n + 1, false);
  int diff = 0;  // size of the symmetric difference of the two prefix sets
  for (int p = 0; p <= n; ++p) {
    if (p > 0) {
      diff += in_second[pi(p)] ? -1 : 1;
      in_first[pi(p)] = true;
      diff += in_first[pi2(p)] ? -1 : 1;
      in_second[pi2(p)] = true;
    }
    if (diff == 0) out.kept_bars.push_back(p);
    else removed.push_back(p);
  }
  out.common_face = face_by_bar_removal(pi, removed);
  auto tau = pi.inverse().compose(pi2);
  for (std::size_t t = 0; t + 1 < out.kept_bars.size(); ++t) {
    int lo = out.kept_bars[t], hi = out.kept_bars[t + 1];
    std::vector<int> v;
    for (int p = lo + 1; p <= hi; ++p) v.push_back(tau(p) - lo);
    out.blocks.emplace_back(v);
  }
  return out;
}

// π = π_0, ..., π_l = π' with consecutive terms differing by an adjacent
// transposition inside one block of the common face.
inline std::vector<Permutation> hereditary_path(const Permutation& pi, const Permutation& pi2) {
  require(pi != pi2, "hereditary_path needs distinct permutations");
  std::vector<Permutation> path{pi};
  auto cur = pi.images();
  const auto& target = pi2.images();
  for (std::size_t p = 0; p < cur.size(); ++p) {
    std::size_t q = p;
    while (cur[q] != target[p]) ++q;
    for (; q > p; --q) {
      std::swap(cur[q - 1], cur[q]);
      path.emplace_back(cur);
    }
  }
  return path;
}

// The canonical π refining u (each part listed in increasing order) and the
// operators exhibiting u as a degeneration of a face of u_π.
struct Refinement {
  Permutation pi;
  std::vector<int> removed_bars;  // increasing; faces applied largest first
  std::vector<int> degeneracies;  // s_j applied in this order
};

inline Refinement refine(const CubeSimplex& u) {
  auto parts = u.parts();
  int n = u.arity(), m = u.dim();
  Refinement r;
  std::vector<int> order;
  for (const auto& p : parts) order.insert(order.end(), p.begin(), p.end());
  r.pi = Permutation(order);
  std::vector<bool> kept(n + 1, false);
  int c = static_cast<int>(parts[0].size());
  kept[c] = true;
  for (int j = 1; j <= m; ++j)
    if (!parts[j].empty()) {
      c += static_cast<int>(parts[j].size());
      kept[c] = true;
    }
  for (int b = 0; b <= n; ++b)
    if (!kept[b]) r.removed_bars.push_back(b);
  for (int j = 1; j <= m; ++j)
    if (parts[j].empty()) r.degeneracies.push_back(j - 1);
  return r;
}

// Same, for an arbitrary choice of order inside each part.
inline Refinement refine_with(const CubeSimplex& u, const Permutation& pi) {
  auto r = refine(u);
  auto parts = u.parts();
  std::size_t pos = 1;
  for (const auto& p : parts) {
    std::vector<int> got;
    for (std::size_t t = 0; t < p.size(); ++t) got.push_back(pi(static_cast<int>(pos + t)));
    std::sort(got.begin(), got.end());
    require(got == p, "permutation does not refine the partition");
    pos += p.size();
  }
  r.pi = pi;
  return r;
}

template <SimplicialSet S>
typename S::Simplex apply_refinement(const S& s, typename S::Simplex x, const Refinement& r) {
  for (auto it = r.removed_bars.rbegin(); it != r.removed_bars.rend(); ++it) x = s.face(x, *it);
  for (int j : r.degeneracies) x = s.degeneracy(x, j);
  return x;
}

// A simplicial map from the simplicial n-cube determined by its values on the u_π.
template <SimplicialSet S>
class CubeFamilyMap {
 public:
  CubeFamilyMap(const S& s, int n, std::map<Permutation, typename S::Simplex> family)
      : s_(&s), n_(n), family_(std::move(family)) {}
  int arity() const { return n_; }
  typename S::Simplex operator()(const CubeSimplex& u) const {
    require(u.arity() == n_, "cube family map: arity mismatch");
    auto r = refine(u);
    return apply_refinement(*s_, family_.at(r.pi), r);
  }
  typename S::Simplex evaluate_with(const CubeSimplex& u, const Permutation& pi) const {
    auto r = refine_with(u, pi);
    return apply_refinement(*s_, family_.at(r.pi), r);
  }
  const std::map<Permutation, typename S::Simplex>& family() const { return family_; }

 private:
  const S* s_;
  int n_;
  std::map<Permutation, typename S::Simplex> family_;
};

template <SimplicialSet S>
struct ExtensionResult {
  std::optional<CubeFamilyMap<S>> map;
  std::string witness;  // set when the facet condition fails
  explicit operator bool() const { return map.has_value(); }
};

// Extends π ↦ x_π to the whole simplicial cube iff d_j x_π = d_j x_{π∘(j,j+1)}, 0 < j < n.
template <SimplicialSet S>
ExtensionResult<S> extend_family(const S& s, int n, const std::map<Permutation, typename S::Simplex>& family) {
  ExtensionResult<S> out;
  for (const auto& pi : all_permutations(n)) {
    auto it = family.find(pi);
    if (it == family.end()) {
      out.witness = "family misses " + pi.str();
      return out;
    }
    if (s.dim(it->second) != n) {
      out.witness = "family member for " + pi.str() + " has wrong dimension";
      return out;
    }
  }
  for (const auto& pi : all_permutations(n))
    for (int j = 1; j < n; ++j) {
      auto other = pi.compose(Permutation::transposition(n, j));
      if (s.face(family.at(pi), j) != s.face(family.at(other), j)) {
        out.witness = cat("d_", j, " differs between ", pi.str(), " and ", other.str());
        return out;
      }
    }
  out.map.emplace(s, n, family);
  return out;
}

// λ_* : acts on vertex columns.
inline CubeSimplex lambda_star(const CubeMorphism& f, const CubeSimplex& u) {
  require(f.source() == u.arity(), "lambda_star: arity mismatch");
  std::vector<std::vector<int>> cols;
  for (int v = 0; v <= u.dim(); ++v) cols.push_back(f.evaluate(u.vertex(v)));
  return CubeSimplex::from_columns(f.target(), cols);
}

// Rows first..first+count-1 of the matrix form.
inline CubeSimplex project(const CubeSimplex& u, int first, int count) {
  std::vector<int> k(u.bracket().begin() + (first - 1), u.bracket().begin() + (first - 1 + count));
  return {u.dim(), k};
}

// u_π in the simplicial (k+l)-cube as the pair (s_{β-1} u_σ, s_{α-1} u_τ).
inline std::pair<CubeSimplex, CubeSimplex> decompose_product_simplex(const Permutation& pi, int k, int l) {
  require(pi.size() == k + l, "decompose_product_simplex: size mismatch");
  auto data = psi_inv(pi, k);
  SimplicialCube ck(k), cl(l);
  return {degenerate_along(ck, u_pi(data.sigma), data.shuffle.beta),
          degenerate_along(cl, u_pi(data.tau), data.shuffle.alpha)};
}

}  // namespace cobarlab
