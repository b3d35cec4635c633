#pragma once

#include "cobarlab/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cobarlab {

// Sparse integer combination over an ordered key type. Zero coefficients are
// never stored, so equality of combinations is map equality.
template <class K>
using LinComb = std::map<K, Integer>;

template <class K>
void add_term(LinComb<K>& c, const K& key, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = c.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) c.erase(it);
  }
}

template <class K>
void add_comb(LinComb<K>& c, const LinComb<K>& other, const Integer& scale = 1) {
  for (const auto& [k, v] : other) add_term(c, k, v * scale);
}

template <class K, class Show>
std::string render(const LinComb<K>& c, Show show) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, v] : c) {
    if (v < 0)
      s += first ? "-" : " - ";
    else if (!first)
      s += " + ";
    Integer a = v < 0 ? Integer(-v) : v;
    if (a != 1) s += a.str() + "*";
    s += show(k);
    first = false;
  }
  return s;
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == c, "ragged matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  IntMatrix operator*(const IntMatrix& b) const {
    require(c_ == b.r_, "matrix product: dimension mismatch");
    IntMatrix m(r_, b.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const Integer& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (b(k, j) != 0) m(i, j) += x * b(k, j);
      }
    return m;
  }
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < c_; ++k)
      if ((*this)(j, k) != 0) (*this)(i, k) += f * (*this)(j, k);
  }
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < r_; ++k)
      if ((*this)(k, j) != 0) (*this)(k, i) += f * (*this)(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < c_; ++k) (*this)(i, k) = -(*this)(i, k);
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Integer> a_;
};

inline Integer determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  require(m.rows() == m.cols(), "determinant of non-square matrix");
  std::size_t n = m.rows();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : sign * m(n - 1, n - 1);
}

struct SmithForm {
  std::vector<Integer> diag;  // nonzero invariant factors, d1 | d2 | ...
  std::size_t rank = 0;
  IntMatrix U, V, D;  // U * A * V = D (only filled when requested)
};

inline SmithForm smith_normal_form(const IntMatrix& A, bool with_transforms = false) {
  IntMatrix D = A;
  std::size_t m = D.rows(), n = D.cols();
  IntMatrix U, V;
  if (with_transforms) {
    U = IntMatrix::identity(m);
    V = IntMatrix::identity(n);
  }
  auto row_add = [&](std::size_t i, std::size_t j, const Integer& f) {
    D.add_row(i, j, f);
    if (with_transforms) U.add_row(i, j, f);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Integer& f) {
    D.add_col(i, j, f);
    if (with_transforms) V.add_col(i, j, f);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    D.swap_rows(i, j);
    if (with_transforms) U.swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    D.swap_cols(i, j);
    if (with_transforms) V.swap_cols(i, j);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero absolute value in the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
          found = true;
          best = abs(D(i, j));
          pi = i;
          pj = j;
        }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        row_add(i, t, -q);
        if (D(i, t) != 0) {
          row_swap(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        col_add(j, t, -q);
        if (D(t, j) != 0) {
          col_swap(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // divisibility of the trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      if (with_transforms) U.negate_row(t);
    }
  }
  SmithForm out;
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (D(i, i) != 0) out.diag.push_back(D(i, i));
  out.rank = out.diag.size();
  if (with_transforms) {
    out.U = std::move(U);
    out.V = std::move(V);
    out.D = std::move(D);
  }
  return out;
}

// Key of a basis element of C ⊗ C: (degree of left factor, left index, right index).
struct TensorKey {
  int p = 0;
  std::size_t left = 0, right = 0;
  auto operator<=>(const TensorKey&) const = default;
};
using SparseVec = LinComb<std::size_t>;
using TensorVec = LinComb<TensorKey>;

// Finite graded free abelian group with differential in degrees 0..top().
// boundary[d] : C_d -> C_{d-1} is a |C_{d-1}| x |C_d| matrix (boundary[0] is 0 x |C_0|).
// A truncated complex omits cells above top(), so homology is only exact below top().
struct ChainComplex {
  std::vector<std::vector<std::string>> labels;
  std::vector<IntMatrix> boundary;
  bool truncated = false;
  // Optional dgc structure.
  std::optional<std::vector<std::vector<TensorVec>>> diagonal;  // [deg][basis]
  std::optional<std::vector<Integer>> augmentation;             // on degree 0
  // Optional dga structure: product of basis elements (p,i)·(q,j) in degree p+q.
  std::function<SparseVec(int, std::size_t, int, std::size_t)> product;
  std::optional<std::size_t> unit;  // index in degree 0

  int top() const { return static_cast<int>(labels.size()) - 1; }
  std::size_t rank(int d) const {
    return d < 0 || d > top() ? 0 : labels[d].size();
  }
  SparseVec apply_boundary(int d, std::size_t i) const {
    SparseVec v;
    if (d <= 0) return v;
    const auto& B = boundary[d];
    for (std::size_t r = 0; r < B.rows(); ++r)
      if (B(r, i) != 0) v[r] = B(r, i);
    return v;
  }
};

inline std::string render_vec(const ChainComplex& c, int d, const SparseVec& v) {
  return render(v, [&](std::size_t i) { return c.labels[d][i]; });
}

inline Verdict check_d_squared(const ChainComplex& c) {
  for (int d = 2; d <= c.top(); ++d) {
    auto P = c.boundary[d - 1] * c.boundary[d];
    if (!P.is_zero()) {
      for (std::size_t j = 0; j < P.cols(); ++j)
        for (std::size_t i = 0; i < P.rows(); ++i)
          if (P(i, j) != 0) return Verdict::fail(cat("d^2 != 0 on ", c.labels[d][j], " (degree ", d, ")"));
    }
  }
  return Verdict::pass();
}

struct Homology {
  long betti = 0;
  std::vector<Integer> torsion;
  bool operator==(const Homology&) const = default;
  std::string str() const {
    std::string s;
    if (betti == 0 && torsion.empty()) return "0";
    if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
    return s;
  }
};

inline Homology homology(const ChainComplex& c, int degree) {
  int limit = c.truncated ? c.top() - 1 : c.top();
  require(degree >= 0 && degree <= limit, cat("homology: degree ", degree, " outside carried range"));
  std::size_t n = c.rank(degree);
  std::size_t r_out = degree >= 1 ? smith_normal_form(c.boundary[degree]).rank : 0;
  Homology h;
  std::size_t r_in = 0;
  if (degree + 1 <= c.top()) {
    auto s = smith_normal_form(c.boundary[degree + 1]);
    r_in = s.rank;
    for (const auto& x : s.diag)
      if (x > 1) h.torsion.push_back(x);
  }
  h.betti = static_cast<long>(n) - static_cast<long>(r_out) - static_cast<long>(r_in);
  return h;
}

struct ChainMap {
  std::vector<IntMatrix> components;  // [deg]: |target_d| x |source_d|
  SparseVec apply(int d, std::size_t i) const {
    SparseVec v;
    const auto& M = components[d];
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (M(r, i) != 0) v[r] = M(r, i);
    return v;
  }
};

inline void check_shapes(const ChainComplex& s, const ChainComplex& t, const ChainMap& f, int top) {
  require(static_cast<int>(f.components.size()) > top, "chain map: missing degrees");
  for (int d = 0; d <= top; ++d)
    require(f.components[d].rows() == t.rank(d) && f.components[d].cols() == s.rank(d),
            cat("chain map: dimension mismatch in degree ", d));
}

inline Verdict check_chain_map(const ChainComplex& s, const ChainComplex& t, const ChainMap& f) {
  int top = std::min(s.top(), t.top());
  check_shapes(s, t, f, top);
  Verdict v;
  for (int d = 1; d <= top; ++d) {
    auto lhs = t.boundary[d] * f.components[d];
    auto rhs = f.components[d - 1] * s.boundary[d];
    for (std::size_t j = 0; j < s.rank(d); ++j) {
      for (std::size_t i = 0; i < lhs.rows(); ++i)
        if (lhs(i, j) != rhs(i, j))
          return Verdict::fail(cat("d f != f d on ", s.labels[d][j], " (degree ", d, ")"));
      ++v.checked;
    }
  }
  return v;
}

// Degree-0 map, so (f ⊗ f)(a ⊗ b) = f(a) ⊗ f(b) with no Koszul sign.
inline Verdict check_coalgebra_map(const ChainComplex& s, const ChainComplex& t, const ChainMap& f) {
  require(s.diagonal && t.diagonal, "coalgebra check needs diagonals on both complexes");
  int top = std::min(s.top(), t.top());
  check_shapes(s, t, f, top);
  Verdict v;
  for (int n = 0; n <= top; ++n) {
    for (std::size_t b = 0; b < s.rank(n); ++b) {
      TensorVec lhs, rhs;
      for (const auto& [c, coef] : f.apply(n, b)) add_comb(lhs, (*t.diagonal)[n][c], coef);
      for (const auto& [key, coef] : (*s.diagonal)[n][b]) {
        auto fa = f.apply(key.p, key.left);
        auto fb = f.apply(n - key.p, key.right);
        for (const auto& [i, x] : fa)
          for (const auto& [j, y] : fb) add_term(rhs, TensorKey{key.p, i, j}, coef * x * y);
      }
      if (lhs != rhs) return Verdict::fail(cat("Δf != (f⊗f)Δ on ", s.labels[n][b], " (degree ", n, ")"));
      ++v.checked;
    }
  }
  if (s.augmentation && t.augmentation && top >= 0) {
    for (std::size_t b = 0; b < s.rank(0); ++b) {
      Integer e = 0;
      for (const auto& [c, coef] : f.apply(0, b)) e += coef * (*t.augmentation)[c];
      if (e != (*s.augmentation)[b]) return Verdict::fail(cat("εf != ε on ", s.labels[0][b]));
    }
  }
  return v;
}

inline Verdict check_algebra_map(const ChainComplex& s, const ChainComplex& t, const ChainMap& f) {
  require(s.product && t.product, "algebra check needs products on both complexes");
  int top = std::min(s.top(), t.top());
  check_shapes(s, t, f, top);
  Verdict v;
  if (s.unit && t.unit) {
    SparseVec u = f.apply(0, *s.unit);
    if (u != SparseVec{{*t.unit, 1}}) return Verdict::fail("f(1) != 1");
  }
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q)
      for (std::size_t i = 0; i < s.rank(p); ++i)
        for (std::size_t j = 0; j < s.rank(q); ++j) {
          SparseVec lhs, rhs;
          for (const auto& [c, coef] : s.product(p, i, q, j)) add_comb(lhs, f.apply(p + q, c), coef);
          auto fa = f.apply(p, i), fb = f.apply(q, j);
          for (const auto& [a, x] : fa)
            for (const auto& [b, y] : fb) add_comb(rhs, t.product(p, a, q, b), x * y);
          if (lhs != rhs)
            return Verdict::fail(cat("f(ab) != f(a)f(b) for a=", s.labels[p][i], ", b=", s.labels[q][j]));
          ++v.checked;
        }
  return v;
}

// Cone(f)_n = S_{n-1} ⊕ T_n, d(a,b) = (-da, f(a) + db). Both complexes must be
// untruncated up to the common top.
inline ChainComplex mapping_cone(const ChainComplex& s, const ChainComplex& t, const ChainMap& f) {
  int top = std::min(s.top(), t.top());
  check_shapes(s, t, f, top);
  ChainComplex c;
  c.labels.resize(top + 2);
  c.boundary.resize(top + 2);
  for (int n = 0; n <= top + 1; ++n) {
    for (std::size_t i = 0; i < s.rank(n - 1); ++i) c.labels[n].push_back("cone(" + s.labels[n - 1][i] + ")");
    if (n <= top)
      for (std::size_t i = 0; i < t.rank(n); ++i) c.labels[n].push_back(t.labels[n][i]);
  }
  for (int n = 0; n <= top + 1; ++n) {
    std::size_t sa = s.rank(n - 1), ta = n <= top ? t.rank(n) : 0;
    std::size_t sb = s.rank(n - 2), tb = n - 1 <= top ? t.rank(n - 1) : 0;
    IntMatrix m(n == 0 ? 0 : sb + tb, sa + ta);
    if (n >= 2)
      for (std::size_t i = 0; i < sb; ++i)
        for (std::size_t j = 0; j < sa; ++j) m(i, j) = -s.boundary[n - 1](i, j);
    if (n >= 1) {
      for (std::size_t i = 0; i < tb; ++i)
        for (std::size_t j = 0; j < sa; ++j) m(sb + i, j) = f.components[n - 1](i, j);
      for (std::size_t i = 0; i < tb; ++i)
        for (std::size_t j = 0; j < ta; ++j) m(sb + i, sa + j) = t.boundary[n](i, j);
    }
    c.boundary[n] = std::move(m);
  }
  c.truncated = true;  // the top degree lacks T_{top+1}
  return c;
}

// f induces an isomorphism on homology in degrees < top iff its cone is acyclic
// in degrees <= top.
inline Verdict check_quasi_iso(const ChainComplex& s, const ChainComplex& t, const ChainMap& f) {
  require(!s.truncated && !t.truncated, "quasi-iso check needs untruncated complexes");
  require(s.top() == t.top(), "quasi-iso check needs complexes of equal length");
  auto cone = mapping_cone(s, t, f);
  Verdict v;
  for (int n = 0; n < cone.top(); ++n) {
    auto h = homology(cone, n);
    if (h.betti != 0 || !h.torsion.empty())
      return Verdict::fail(cat("mapping cone has H_", n, " = ", h.str(), ", so H_", n - 1, " or H_", n,
                               " is not mapped isomorphically"));
    ++v.checked;
  }
  return v;
}

inline ChainMap identity_map(const ChainComplex& c) {
  ChainMap f;
  for (int d = 0; d <= c.top(); ++d) f.components.push_back(IntMatrix::identity(c.rank(d)));
  return f;
}

// Basis of (A ⊗ B)_n, ordered by left degree then left index then right index.
struct TensorBasis {
  std::vector<std::vector<TensorKey>> keys;  // [n]
  std::vector<std::map<TensorKey, std::size_t>> index;  // [n]: key -> position within degree n
};

inline TensorBasis tensor_basis(const ChainComplex& a, const ChainComplex& b, int top) {
  TensorBasis tb;
  tb.keys.resize(top + 1);
  tb.index.resize(top + 1);
  for (int n = 0; n <= top; ++n)
    for (int p = 0; p <= n; ++p)
      for (std::size_t i = 0; i < a.rank(p); ++i)
        for (std::size_t j = 0; j < b.rank(n - p); ++j) {
          TensorKey k{p, i, j};
          tb.index[n][k] = tb.keys[n].size();
          tb.keys[n].push_back(k);
        }
  return tb;
}

inline int koszul(int deg) { return deg % 2 == 0 ? 1 : -1; }

// d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db. The result carries the tensor diagonal when
// both factors carry diagonals.
inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  if (a.top() < 0 || b.top() < 0) return {};
  // Degrees above a truncated factor's top would be missing cells.
  int top = a.top() + b.top();
  if (a.truncated) top = std::min(top, a.top());
  if (b.truncated) top = std::min(top, b.top());
  auto tb = tensor_basis(a, b, top);
  ChainComplex c;
  c.truncated = a.truncated || b.truncated;
  c.labels.resize(top + 1);
  c.boundary.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    for (const auto& k : tb.keys[n])
      c.labels[n].push_back(a.labels[k.p][k.left] + "⊗" + b.labels[n - k.p][k.right]);
    c.boundary[n] = IntMatrix(n == 0 ? 0 : tb.keys[n - 1].size(), tb.keys[n].size());
    if (n == 0) continue;
    for (std::size_t col = 0; col < tb.keys[n].size(); ++col) {
      const auto& k = tb.keys[n][col];
      int q = n - k.p;
      for (const auto& [i, x] : a.apply_boundary(k.p, k.left))
        c.boundary[n](tb.index[n - 1].at({k.p - 1, i, k.right}), col) += x;
      for (const auto& [j, y] : b.apply_boundary(q, k.right))
        c.boundary[n](tb.index[n - 1].at({k.p, k.left, j}), col) += koszul(k.p) * y;
    }
  }
  if (a.diagonal && b.diagonal) {
    // Δ(a⊗b) = Σ ± (a'⊗b')⊗(a''⊗b''), sign (-1)^{|a''||b'|}
    std::vector<std::vector<TensorVec>> diag(top + 1);
    for (int n = 0; n <= top; ++n) {
      for (const auto& k : tb.keys[n]) {
        TensorVec out;
        int q = n - k.p;
        for (const auto& [ka, x] : (*a.diagonal)[k.p][k.left])
          for (const auto& [kb, y] : (*b.diagonal)[q][k.right]) {
            int a1 = ka.p, a2 = k.p - ka.p, b1 = kb.p;
            int left_deg = a1 + b1;
            std::size_t li = tb.index[left_deg].at({a1, ka.left, kb.left});
            std::size_t ri = tb.index[n - left_deg].at({a2, ka.right, kb.right});
            add_term(out, TensorKey{left_deg, li, ri}, x * y * koszul(a2 * b1));
          }
        diag[n].push_back(std::move(out));
      }
    }
    c.diagonal = std::move(diag);
  }
  if (a.augmentation && b.augmentation) {
    std::vector<Integer> eps;
    for (const auto& k : tb.keys[0]) eps.push_back((*a.augmentation)[k.left] * (*b.augmentation)[k.right]);
    c.augmentation = std::move(eps);
  }
  return c;
}

// Coassociativity (Δ⊗1)Δ = (1⊗Δ)Δ and counitality, checked on every basis element.
inline Verdict check_coassociative(const ChainComplex& c) {
  require(c.diagonal.has_value(), "no diagonal");
  using Triple = std::tuple<int, int, std::size_t, std::size_t, std::size_t>;
  const auto& D = *c.diagonal;
  Verdict v;
  for (int n = 0; n <= c.top(); ++n)
    for (std::size_t b = 0; b < c.rank(n); ++b) {
      LinComb<Triple> lhs, rhs;
      for (const auto& [k, x] : D[n][b]) {
        int q = n - k.p;
        for (const auto& [k2, y] : D[k.p][k.left])
          add_term(lhs, Triple{k2.p, k.p - k2.p, k2.left, k2.right, k.right}, x * y);
        for (const auto& [k2, y] : D[q][k.right])
          add_term(rhs, Triple{k.p, k2.p, k.left, k2.left, k2.right}, x * y);
      }
      if (lhs != rhs) return Verdict::fail(cat("diagonal not coassociative on ", c.labels[n][b]));
      if (c.augmentation) {
        SparseVec left, right, self{{b, 1}};
        for (const auto& [k, x] : D[n][b]) {
          if (k.p == 0) add_term(left, k.right, x * (*c.augmentation)[k.left]);
          if (k.p == n) add_term(right, k.left, x * (*c.augmentation)[k.right]);
        }
        if (left != self || right != self) return Verdict::fail(cat("diagonal not counital on ", c.labels[n][b]));
      }
      ++v.checked;
    }
  return v;
}

// Compare two chain maps degreewise; witness names the first differing source basis element.
inline Verdict check_maps_equal(const ChainComplex& s, const ChainMap& f, const ChainMap& g, int top) {
  for (int d = 0; d <= top; ++d)
    for (std::size_t j = 0; j < s.rank(d); ++j)
      if (f.apply(d, j) != g.apply(d, j)) return Verdict::fail(cat("maps differ on ", s.labels[d][j]));
  return Verdict::pass();
}

}  // namespace cobarlab
