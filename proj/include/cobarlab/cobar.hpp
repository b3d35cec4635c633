#pragma once

#include "cobarlab/chain_algebra.hpp"
#include "cobarlab/cube_category.hpp"
#include "cobarlab/cubical.hpp"
#include "cobarlab/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cobarlab {

// ⟦x⟧_I: a simplex x of dimension m >= 1 with formal degeneracy slots I ⊆ {2..n},
// where n = m - 1 + |I| is the cube dimension.
struct CobarLetter {
  Simplex x;
  std::vector<int> inner;  // increasing
  int dim() const { return x.dim - 1 + static_cast<int>(inner.size()); }
  auto operator<=>(const CobarLetter&) const = default;
  bool operator==(const CobarLetter&) const = default;
};

// A cube of the cubical cobar construction in normal form: λ^* ⟦g_1|...|g_r⟧
// where the g_j are nondegenerate generators of dimension >= 2 and
// λ : 2^dim -> 2^M (M = Σ (dim g_j - 1)) is a surjection of the cube category.
// The cube is degenerate iff λ ignores an input and folded iff some min-set has
// two or more inputs; two cubes are equal iff their data agree.
struct CobarCube {
  std::vector<int> gens;
  CubeMorphism lambda;
  int dim() const { return lambda.source(); }
  auto operator<=>(const CobarCube&) const = default;
  bool operator==(const CobarCube&) const = default;
};

using CobarWord = std::vector<int>;  // generator ids, a basis word of the cobar construction

class CubicalCobar {
 public:
  using Cube = CobarCube;

  explicit CubicalCobar(const SimplicialPresentation& x) : x_(&x) {
    require(x.flag == Reduction::one_reduced, "cubical cobar construction needs a 1-reduced simplicial set");
    for (int g = 0; g < static_cast<int>(x.generators.size()); ++g)
      if (x.generators[g].dim >= 2) letters_gens_.push_back(g);
  }

  const SimplicialPresentation& base() const { return *x_; }
  int weight(int g) const { return x_->generators.at(g).dim - 1; }
  int weight(const CobarWord& w) const {
    int s = 0;
    for (int g : w) s += weight(g);
    return s;
  }

  // ---- letters ------------------------------------------------------------

  // ⟦x⟧_I in normal form. An inner vertex v of x sits over vertex η(v) of its
  // generator; the coordinate is ignored when η(v) is an outer vertex and
  // belongs to the min-set of output η(v) otherwise.
  Cube letter(const CobarLetter& l) const {
    const auto& x = l.x;
    require(x.dim >= 1, "cobar letter needs a simplex of positive dimension");
    int n = l.dim();
    int prev = 1;
    for (int i : l.inner) {
      require(i > prev && i <= n, "inner set must be increasing inside {2..n}");
      prev = i;
    }
    std::vector<int> pos;  // final position of coordinate v of ⟦x⟧
    {
      std::set<int> I(l.inner.begin(), l.inner.end());
      for (int p = 1; p <= n; ++p)
        if (!I.count(p)) pos.push_back(p);
    }
    int m0 = x_->generators.at(x.gen).dim;
    if (m0 <= 1) return {{}, CubeMorphism(n, {})};
    auto eta = detail::surj_of(x);
    std::vector<CubeMorphism::Out> outs(m0 - 1);
    for (int v = 1; v < x.dim; ++v) {
      int j = eta[v];
      if (j == 0 || j == m0) continue;
      outs[j - 1].inputs.push_back(pos[v - 1]);
    }
    return {{x.gen}, CubeMorphism(n, outs)};
  }

  Cube from_letters(const std::vector<CobarLetter>& ls) const {
    Cube c = unit(0);
    for (const auto& l : ls) c = multiply(c, letter(l));
    return c;
  }

  // A representative word of letters: ignored coordinates between blocks go to
  // the following letter as s_0-type degeneracies, trailing ones to the last
  // letter as top degeneracies, ignored coordinates inside a block go to I.
  std::vector<CobarLetter> letters(const Cube& c) const {
    int N = c.dim();
    const auto& outs = c.lambda.outputs();
    if (c.gens.empty()) {
      if (N == 0) return {};
      auto x = x_->degenerate_basepoint(N + 1);
      return {{x, {}}};
    }
    // input range [first used, last used] of each block
    std::vector<std::pair<int, int>> span;
    int o = 0;
    for (int g : c.gens) {
      int w = weight(g);
      span.push_back({outs[o].inputs.front(), outs[o + w - 1].inputs.back()});
      o += w;
    }
    std::vector<CobarLetter> out;
    o = 0;
    int start = 1;
    for (std::size_t t = 0; t < c.gens.size(); ++t) {
      int g = c.gens[t], w = weight(g);
      int lo = span[t].first, hi = span[t].second;
      int end = t + 1 == c.gens.size() ? N : hi;
      int lead = lo - start, trail = end - hi;
      std::map<int, int> owner;  // input -> local output index
      for (int j = 0; j < w; ++j)
        for (int in : outs[o + j].inputs) owner[in] = j + 1;
      std::vector<int> inner;
      std::vector<int> eta{0};
      for (int v = 0; v < lead; ++v) eta.push_back(0);
      for (int in = lo; in <= hi; ++in) {
        auto it = owner.find(in);
        if (it == owner.end()) inner.push_back(in - start + 1);
        else eta.push_back(it->second);
      }
      for (int v = 0; v < trail; ++v) eta.push_back(w + 1);
      eta.push_back(w + 1);
      int m = static_cast<int>(eta.size()) - 1;
      out.push_back({{g, detail::collapsed(eta), m}, inner});
      o += w;
      start = end + 1;
    }
    return out;
  }

  std::string letter_str(const CobarLetter& l) const {
    std::string s = x_->label(l.x);
    if (!l.inner.empty()) {
      s += "_{";
      for (std::size_t i = 0; i < l.inner.size(); ++i) s += (i ? "," : "") + std::to_string(l.inner[i]);
      s += "}";
    }
    return s;
  }
  std::string label(const Cube& c) const {
    auto ls = letters(c);
    std::string s = "⟦";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? " | " : "") + letter_str(ls[i]);
    return s + "⟧";
  }
  std::string word_label(const CobarWord& w) const {
    std::string s = "⟦";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + x_->generators[w[i]].name;
    return s + "⟧";
  }

  // ---- cubical group --------------------------------------------------------

  Cube unit(int n) const { return {{}, CubeMorphism(n, {})}; }
  Cube multiply(const Cube& a, const Cube& b) const {
    Cube c{a.gens, a.lambda.times(b.lambda)};
    c.gens.insert(c.gens.end(), b.gens.begin(), b.gens.end());
    return c;
  }
  Cube basis_cube(const CobarWord& w) const { return {w, CubeMorphism::identity(weight(w))}; }

  int dim(const Cube& c) const { return c.dim(); }
  Cube degeneracy(const Cube& c, int i) const {
    return {c.gens, c.lambda.compose(CubeMorphism::sigma(c.dim() + 1, i))};
  }
  Cube connection(const Cube& c, int i) const {
    return {c.gens, c.lambda.compose(CubeMorphism::gamma(c.dim() + 1, i))};
  }
  Cube face(const Cube& c, int i, int e) const {
    require(i >= 1 && i <= c.dim(), "cobar face index out of range");
    auto f = c.lambda.compose(CubeMorphism::delta(c.dim(), i, e));
    int j = 0, eps = 0;
    for (int t = 1; t <= f.target(); ++t)
      if (f.outputs()[t - 1].eps >= 0) {
        j = t;
        eps = f.outputs()[t - 1].eps;
      }
    if (j == 0) return {c.gens, f};
    auto rest = f.drop_output(j);
    // locate the letter carrying output j
    int t = 0, before = 0;
    while (before + weight(c.gens[t]) < j) before += weight(c.gens[t++]);
    int local = j - before;
    Cube repl = generator_face(c.gens[t], local, eps);
    Cube left{{c.gens.begin(), c.gens.begin() + t}, CubeMorphism::identity(before)};
    int after = weight(c.gens) - before - weight(c.gens[t]);
    Cube right{{c.gens.begin() + t + 1, c.gens.end()}, CubeMorphism::identity(after)};
    Cube mid = multiply(multiply(left, repl), right);
    return {mid.gens, mid.lambda.compose(rest)};
  }

  // d^1_j ⟦g⟧ = ⟦d_j g⟧ and d^0_j ⟦g⟧ = ⟦g(0..j) | g(j..m)⟧.
  Cube generator_face(int g, int j, int eps) const {
    auto x = x_->gen(g);
    if (eps == 1) return letter({x_->face(x, j), {}});
    return multiply(letter({front_face(*x_, x, j), {}}), letter({back_face(*x_, x, j), {}}));
  }

  // All cubes of dimension n.
  std::vector<Cube> cubes(int n) const {
    std::vector<Cube> out;
    for (int M = 0; M <= n; ++M) {
      std::vector<CubeMorphism> epis;
      for (auto& f : all_cube_morphisms(n, M))
        if (f.is_epi()) epis.push_back(f);
      for (const auto& w : words(M))
        for (const auto& f : epis) out.push_back({w, f});
    }
    return out;
  }

  // Words of nondegenerate generators of total weight exactly M.
  std::vector<CobarWord> words(int M) const {
    std::vector<CobarWord> out;
    CobarWord cur;
    auto rec = [&](auto&& self, int left) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int g : letters_gens_)
        if (weight(g) <= left) {
          cur.push_back(g);
          self(self, left - weight(g));
          cur.pop_back();
        }
    };
    rec(rec, M);
    return out;
  }

  // ---- the letter formulas of the definition, for cross-checking -------------

  // s_1⟦x⟧_I = ⟦s_0 x⟧_{I+1}, s_i⟦x⟧_I = ⟦x⟧_{I'} (2 <= i <= n), s_{n+1}⟦x⟧_I = ⟦s_m x⟧_I.
  CobarLetter literal_degeneracy(const CobarLetter& l, int i) const {
    int n = l.dim();
    require(i >= 1 && i <= n + 1, "degeneracy index out of range");
    if (i == 1) {
      std::vector<int> I;
      for (int j : l.inner) I.push_back(j + 1);
      return {x_->degeneracy(l.x, 0), I};
    }
    if (i == n + 1) return {x_->degeneracy(l.x, l.x.dim), l.inner};
    std::vector<int> I;
    for (int j : l.inner)
      if (j < i) I.push_back(j);
    I.push_back(i);
    for (int j : l.inner)
      if (j >= i) I.push_back(j + 1);
    return {l.x, I};
  }
  // For I = ∅ and x of dimension n+1: d^1_i⟦x⟧ = ⟦d_i x⟧, γ_i⟦x⟧ = ⟦s_i x⟧ (1 <= i <= n).
  CobarLetter literal_d1(const CobarLetter& l, int i) const {
    require(l.inner.empty(), "literal face formula needs I = ∅");
    return {x_->face(l.x, i), {}};
  }
  CobarLetter literal_connection(const CobarLetter& l, int i) const {
    require(l.inner.empty(), "literal connection formula needs I = ∅");
    return {x_->degeneracy(l.x, i), {}};
  }
  std::vector<CobarLetter> literal_d0(const CobarLetter& l, int i) const {
    require(l.inner.empty(), "literal face formula needs I = ∅");
    return {{front_face(*x_, l.x, i), {}}, {back_face(*x_, l.x, i), {}}};
  }

 private:
  const SimplicialPresentation* x_;
  std::vector<int> letters_gens_;
};

// ---- reachability oracle ----------------------------------------------------

// Literal words of letters, connected by the generating identifications:
//   erase a letter of cube dimension 0;
//   (⟦s_top x⟧_I, z) <-> (⟦x⟧_I, s_1 z) for adjacent letters;
//   ⟦x⟧_I <-> ⟦d_v x⟧_{I ∪ {v}} when cube coordinate v collapses onto an outer vertex.
class CobarWordGraph {
 public:
  using Word = std::vector<CobarLetter>;
  CobarWordGraph(const CubicalCobar& c, int max_letters) : c_(c), max_letters_(max_letters) {}

  std::vector<Word> neighbours(const Word& w) const {
    std::vector<Word> out;
    const auto& X = c_.base();
    for (std::size_t t = 0; t < w.size(); ++t)
      if (w[t].dim() == 0) {
        Word v = w;
        v.erase(v.begin() + t);
        out.push_back(v);
      }
    if (static_cast<int>(w.size()) < max_letters_)
      for (std::size_t t = 0; t <= w.size(); ++t) {
        Word v = w;
        v.insert(v.begin() + t, CobarLetter{X.degenerate_basepoint(1), {}});
        out.push_back(v);
      }
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      const auto& a = w[t];
      int m = a.x.dim, n = a.dim();
      bool last_inner = !a.inner.empty() && a.inner.back() == n;
      if (m >= 2 && !last_inner && is_s_image(X, a.x, m - 1)) {
        Word v = w;
        v[t] = {X.face(a.x, m - 1), a.inner};
        v[t + 1] = c_.literal_degeneracy(w[t + 1], 1);
        out.push_back(v);
      }
      const auto& b = w[t + 1];
      if (b.x.dim >= 2 && is_s_image(X, b.x, 0) && (b.inner.empty() || b.inner.front() > 2)) {
        // s_1 z with z = ⟦d_0 x⟧_{I-1}
        Word v = w;
        std::vector<int> I;
        for (int j : b.inner) I.push_back(j - 1);
        v[t] = c_.literal_degeneracy(a, a.dim() + 1);
        v[t + 1] = {X.face(b.x, 0), I};
        out.push_back(v);
      }
    }
    for (std::size_t t = 0; t < w.size(); ++t) {
      const auto& l = w[t];
      int n = l.dim();
      std::set<int> I(l.inner.begin(), l.inner.end());
      std::vector<int> pos;
      for (int p = 1; p <= n; ++p)
        if (!I.count(p)) pos.push_back(p);
      int m0 = X.generators[l.x.gen].dim;
      auto eta = detail::surj_of(l.x);
      for (int v = 1; v < l.x.dim; ++v) {
        if (eta[v] != 0 && eta[v] != m0) continue;
        int p = pos[v - 1];
        if (p < 2) continue;
        std::vector<int> J(l.inner);
        J.push_back(p);
        std::sort(J.begin(), J.end());
        Word u = w;
        u[t] = {X.face(l.x, v), J};
        out.push_back(u);
      }
      // the reverse move: move a slot of I back into x as an outer collapse
      for (int p : l.inner) {
        // coordinate p becomes vertex v of x, where v-1 coordinates of ⟦x⟧ precede it
        int v = 1;
        for (int q : pos)
          if (q < p) ++v;
        std::vector<int> J;
        for (int j : l.inner)
          if (j != p) J.push_back(j);
        for (int s : {v - 1, v}) {
          if (s < 0 || s > l.x.dim) continue;
          auto y = X.degeneracy(l.x, s);
          auto ey = detail::surj_of(y);
          if (ey[v] != 0 && ey[v] != m0) continue;
          Word u = w;
          u[t] = {y, J};
          out.push_back(u);
        }
      }
    }
    return out;
  }

  // Connected component of w (bounded by max_letters).
  std::set<Word> component(const Word& w) const {
    std::set<Word> seen{w};
    std::deque<Word> todo{w};
    while (!todo.empty()) {
      auto cur = todo.front();
      todo.pop_front();
      for (auto& v : neighbours(cur))
        if (seen.insert(v).second) todo.push_back(v);
    }
    return seen;
  }

 private:
  const CubicalCobar& c_;
  int max_letters_;
};

// ---- the reduced cobar construction of C(X) ---------------------------------

struct OmegaComplex {
  ChainComplex complex;
  std::vector<std::vector<CobarWord>> basis;  // [degree]
  std::vector<std::map<CobarWord, std::size_t>> index;
};

// d⟦x⟧ = -⟦dx⟧ + Σ_{i=2}^{n-1} (-1)^i ⟦x(0..i) | x(i..n+1)⟧ for x of dimension n+1,
// extended as a derivation: d(ab) = da·b + (-1)^{|a|} a·db.
inline LinComb<CobarWord> omega_letter_boundary(const SimplicialPresentation& X, int g) {
  LinComb<CobarWord> out;
  auto x = X.gen(g);
  int n = x.dim - 1;
  for (int i = 0; i <= n + 1; ++i) {
    auto f = X.face(x, i);
    if (!f.degenerate()) add_term(out, CobarWord{f.gen}, Integer(i % 2 == 0 ? -1 : 1));
  }
  for (int i = 2; i <= n - 1; ++i) {
    auto a = front_face(X, x, i), b = back_face(X, x, i);
    if (!a.degenerate() && !b.degenerate()) add_term(out, CobarWord{a.gen, b.gen}, Integer(i % 2 == 0 ? 1 : -1));
  }
  return out;
}

inline LinComb<CobarWord> omega_boundary(const SimplicialPresentation& X, const CobarWord& w) {
  LinComb<CobarWord> out;
  int sign_deg = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    for (const auto& [lw, c] : omega_letter_boundary(X, w[t])) {
      CobarWord v(w.begin(), w.begin() + t);
      v.insert(v.end(), lw.begin(), lw.end());
      v.insert(v.end(), w.begin() + t + 1, w.end());
      add_term(out, v, c * (sign_deg % 2 == 0 ? 1 : -1));
    }
    sign_deg += X.generators[w[t]].dim - 1;
  }
  return out;
}

inline OmegaComplex omega_complex(const SimplicialPresentation& X, int max_deg) {
  require(X.flag == Reduction::one_reduced, "cobar construction needs a 1-reduced simplicial set");
  CubicalCobar cob(X);
  OmegaComplex out;
  out.basis.resize(max_deg + 1);
  out.index.resize(max_deg + 1);
  auto& c = out.complex;
  c.truncated = true;
  c.labels.resize(max_deg + 1);
  c.boundary.resize(max_deg + 1);
  for (int d = 0; d <= max_deg; ++d) {
    out.basis[d] = cob.words(d);
    for (std::size_t i = 0; i < out.basis[d].size(); ++i) {
      out.index[d][out.basis[d][i]] = i;
      c.labels[d].push_back(cob.word_label(out.basis[d][i]));
    }
  }
  for (int d = 0; d <= max_deg; ++d) {
    c.boundary[d] = IntMatrix(d == 0 ? 0 : out.basis[d - 1].size(), out.basis[d].size());
    if (d == 0) continue;
    for (std::size_t j = 0; j < out.basis[d].size(); ++j)
      for (const auto& [w, coef] : omega_boundary(X, out.basis[d][j])) c.boundary[d](out.index[d - 1].at(w), j) += coef;
  }
  const auto* self = &out;
  c.product = [self](int p, std::size_t i, int q, std::size_t j) {
    SparseVec v;
    if (p + q >= static_cast<int>(self->basis.size())) return v;
    CobarWord w = self->basis[p][i];
    w.insert(w.end(), self->basis[q][j].begin(), self->basis[q][j].end());
    add_term(v, self->index[p + q].at(w), Integer(1));
    return v;
  };
  c.unit = out.index[0].at(CobarWord{});
  c.augmentation = std::vector<Integer>{Integer(1)};
  return out;
}

// The "identity" comparison between normalized chains of the cubical cobar
// construction and the cobar construction of C(X).
struct CobarIsoReport {
  Verdict bijection, differential, product;
  ChainMap iso;  // C(Ω̂X) -> ΩC(X)
};

inline CobarIsoReport cobar_iso(const CubicalCobar& cob, CubicalChains<CobarCube>& cc, OmegaComplex& om) {
  CobarIsoReport r;
  int top = std::min(cc.complex.top(), om.complex.top());
  r.bijection = Verdict::pass();
  for (int d = 0; d <= top; ++d) {
    IntMatrix m(om.complex.rank(d), cc.complex.rank(d));
    for (std::size_t j = 0; j < cc.basis[d].size(); ++j) {
      const auto& cube = cc.basis[d][j];
      if (!cube.lambda.is_identity()) {
        r.bijection &= Verdict::fail("basis cube with nontrivial structure map: " + cob.label(cube));
        continue;
      }
      auto it = om.index[d].find(cube.gens);
      if (it == om.index[d].end()) {
        r.bijection &= Verdict::fail("basis cube without cobar word: " + cob.label(cube));
        continue;
      }
      m(it->second, j) = 1;
    }
    if (cc.basis[d].size() != om.basis[d].size())
      r.bijection &= Verdict::fail(cat("rank mismatch in degree ", d, ": ", cc.basis[d].size(), " cubes vs ",
                                       om.basis[d].size(), " words"));
    r.bijection.checked += cc.basis[d].size();
    r.iso.components.push_back(std::move(m));
  }
  if (!r.bijection) {
    r.differential = r.product = Verdict::fail("no bijection");
    return r;
  }
  r.differential = check_chain_map(cc.complex, om.complex, r.iso);
  r.product = check_algebra_map(cc.complex, om.complex, r.iso);
  return r;
}

// Transport the Serre diagonal of C(Ω̂X) to ΩC(X) along the basis bijection.
inline void transport_diagonal(const CubicalChains<CobarCube>& cc, OmegaComplex& om) {
  int top = std::min(cc.complex.top(), om.complex.top());
  std::vector<std::vector<std::size_t>> to_word(top + 1);
  for (int d = 0; d <= top; ++d)
    for (const auto& cube : cc.basis[d]) to_word[d].push_back(om.index[d].at(cube.gens));
  std::vector<std::vector<TensorVec>> diag(top + 1);
  for (int d = 0; d <= top; ++d) diag[d].resize(om.basis[d].size());
  for (int d = 0; d <= top; ++d)
    for (std::size_t j = 0; j < cc.basis[d].size(); ++j) {
      TensorVec v;
      for (const auto& [k, c] : (*cc.complex.diagonal)[d][j])
        add_term(v, TensorKey{k.p, to_word[k.p][k.left], to_word[d - k.p][k.right]}, c);
      diag[d][to_word[d][j]] = std::move(v);
    }
  om.complex.diagonal = std::move(diag);
  om.complex.labels.resize(top + 1);
  om.complex.boundary.resize(top + 1);
  om.basis.resize(top + 1);
  om.index.resize(top + 1);
}

}  // namespace cobarlab
