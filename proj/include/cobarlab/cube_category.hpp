#pragma once

#include "cobarlab/core.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cobarlab {

enum class CubeGen { delta, sigma, gamma };

// One generator of the cube category, as a map on vertices:
//   delta(i, eps): 2^{n-1} -> 2^n inserts eps at position i
//   sigma(i):      2^n -> 2^{n-1} deletes coordinate i
//   gamma(i):      2^n -> 2^{n-1} replaces t_i, t_{i+1} by min(t_i, t_{i+1})
struct CubeLetter {
  CubeGen kind = CubeGen::sigma;
  int index = 1;
  int eps = 0;
  std::string str() const {
    switch (kind) {
      case CubeGen::delta: return "δ" + std::to_string(eps) + "_" + std::to_string(index);
      case CubeGen::sigma: return "σ_" + std::to_string(index);
      default: return "γ_" + std::to_string(index);
    }
  }
  auto operator<=>(const CubeLetter&) const = default;
};

// A morphism 2^source -> 2^target. Each output coordinate is a constant or the
// min of a nonempty set of inputs; the input sets are pairwise ordered
// (max of one < min of the next). This data is the normal form: two morphisms
// are equal iff their data agree iff they agree on every vertex.
class CubeMorphism {
 public:
  struct Out {
    int eps = -1;             // 0 or 1 for a constant output, -1 otherwise
    std::vector<int> inputs;  // increasing, nonempty iff eps == -1
    auto operator<=>(const Out&) const = default;
  };

  CubeMorphism() = default;
  CubeMorphism(int source, std::vector<Out> outs) : src_(source), outs_(std::move(outs)) {
    int last = 0;
    for (const auto& o : outs_) {
      if (o.eps >= 0) {
        require(o.eps <= 1 && o.inputs.empty(), "bad constant output");
        continue;
      }
      require(!o.inputs.empty(), "empty min-set");
      for (int x : o.inputs) {
        require(x > last && x <= source, "cube morphism inputs not ordered");
        last = x;
      }
    }
  }

  static CubeMorphism identity(int n) {
    std::vector<Out> outs;
    for (int i = 1; i <= n; ++i) outs.push_back({-1, {i}});
    return {n, outs};
  }
  static CubeMorphism delta(int n, int i, int eps) {  // 2^{n-1} -> 2^n
    require(i >= 1 && i <= n && (eps == 0 || eps == 1), "delta index out of range");
    std::vector<Out> outs;
    for (int j = 1; j <= n; ++j) {
      if (j < i) outs.push_back({-1, {j}});
      else if (j == i) outs.push_back({eps, {}});
      else outs.push_back({-1, {j - 1}});
    }
    return {n - 1, outs};
  }
  static CubeMorphism sigma(int n, int i) {  // 2^n -> 2^{n-1}
    require(i >= 1 && i <= n, "sigma index out of range");
    std::vector<Out> outs;
    for (int j = 1; j <= n; ++j)
      if (j != i) outs.push_back({-1, {j}});
    return {n, outs};
  }
  static CubeMorphism gamma(int n, int i) {  // 2^n -> 2^{n-1}
    require(i >= 1 && i < n, "gamma index out of range");
    std::vector<Out> outs;
    for (int j = 1; j <= n; ++j) {
      if (j == i) outs.push_back({-1, {i, i + 1}});
      else if (j != i + 1) outs.push_back({-1, {j}});
    }
    return {n, outs};
  }
  static CubeMorphism letter(int source, const CubeLetter& g) {
    switch (g.kind) {
      case CubeGen::delta: return delta(source + 1, g.index, g.eps);
      case CubeGen::sigma: return sigma(source, g.index);
      default: return gamma(source, g.index);
    }
  }
  // Letters listed in the order they act on points.
  static CubeMorphism from_word(int source, const std::vector<CubeLetter>& word) {
    CubeMorphism f = identity(source);
    for (const auto& g : word) f = letter(f.target(), g).compose(f);
    return f;
  }

  int source() const { return src_; }
  int target() const { return static_cast<int>(outs_.size()); }
  const std::vector<Out>& outputs() const { return outs_; }

  std::vector<int> evaluate(const std::vector<int>& t) const {
    require(static_cast<int>(t.size()) == src_, "evaluate: arity mismatch");
    std::vector<int> r;
    for (const auto& o : outs_) {
      if (o.eps >= 0) {
        r.push_back(o.eps);
        continue;
      }
      int v = 1;
      for (int x : o.inputs) v = std::min(v, t[x - 1]);
      r.push_back(v);
    }
    return r;
  }

  // (this o g): apply g first.
  CubeMorphism compose(const CubeMorphism& g) const {
    require(g.target() == src_, "compose: arity mismatch");
    std::vector<Out> outs;
    for (const auto& o : outs_) {
      if (o.eps >= 0) {
        outs.push_back(o);
        continue;
      }
      bool zero = false;
      std::vector<int> ins;
      for (int x : o.inputs) {
        const auto& go = g.outs_[x - 1];
        if (go.eps == 0) zero = true;
        if (go.eps == -1) ins.insert(ins.end(), go.inputs.begin(), go.inputs.end());
      }
      if (zero) outs.push_back({0, {}});
      else if (ins.empty()) outs.push_back({1, {}});
      else outs.push_back({-1, ins});
    }
    return {g.src_, outs};
  }

  // this × g : 2^{a+b} -> 2^{c+d}
  CubeMorphism times(const CubeMorphism& g) const {
    auto outs = outs_;
    for (auto o : g.outs_) {
      for (auto& x : o.inputs) x += src_;
      outs.push_back(o);
    }
    return {src_ + g.src_, outs};
  }

  CubeMorphism drop_output(int j) const {
    auto outs = outs_;
    outs.erase(outs.begin() + (j - 1));
    return {src_, outs};
  }

  bool is_epi() const { return !has_constants(); }

  bool uses_input(int i) const {
    for (const auto& o : outs_)
      for (int x : o.inputs)
        if (x == i) return true;
    return false;
  }
  bool has_constants() const {
    for (const auto& o : outs_)
      if (o.eps >= 0) return true;
    return false;
  }
  bool is_identity() const { return *this == identity(src_); }

  // Normal-form word in application order: sigmas (deleting unused inputs,
  // right to left), then gammas (merging each min-set), then deltas (inserting
  // constants left to right).
  std::vector<CubeLetter> word() const {
    std::vector<CubeLetter> w;
    for (int i = src_; i >= 1; --i)
      if (!uses_input(i)) w.push_back({CubeGen::sigma, i, 0});
    int pos = 1;
    for (const auto& o : outs_) {
      if (o.eps >= 0) continue;
      for (std::size_t r = 1; r < o.inputs.size(); ++r) w.push_back({CubeGen::gamma, pos, 0});
      ++pos;
    }
    for (int j = 1; j <= target(); ++j)
      if (outs_[j - 1].eps >= 0) w.push_back({CubeGen::delta, j, outs_[j - 1].eps});
    return w;
  }

  std::string str() const {
    std::string s = "[" + std::to_string(src_) + "->" + std::to_string(target()) + ":";
    for (const auto& o : outs_) {
      if (o.eps >= 0) {
        s += " " + std::to_string(o.eps);
        continue;
      }
      s += " m(";
      for (std::size_t k = 0; k < o.inputs.size(); ++k) s += (k ? "," : "") + std::to_string(o.inputs[k]);
      s += ")";
    }
    return s + "]";
  }

  auto operator<=>(const CubeMorphism&) const = default;
  bool operator==(const CubeMorphism&) const = default;

 private:
  int src_ = 0;
  std::vector<Out> outs_;
};

// Every morphism 2^k -> 2^n.
inline std::vector<CubeMorphism> all_cube_morphisms(int k, int n) {
  std::vector<CubeMorphism> out;
  // owner[x] in {0 (unused), 1..r}, monotone and onto on used inputs
  for (int mask = 0; mask < (1 << n); ++mask) {  // mask bit j: output j+1 is a min
    int r = __builtin_popcount(mask);
    std::vector<int> owner(k + 1, 0);
    auto rec = [&](auto&& self, int x, int current) -> void {
      if (x > k) {
        if (current != r) return;
        std::vector<std::vector<int>> sets(r);
        for (int y = 1; y <= k; ++y)
          if (owner[y]) sets[owner[y] - 1].push_back(y);
        int consts = n - r;
        for (int cm = 0; cm < (1 << consts); ++cm) {
          std::vector<CubeMorphism::Out> outs;
          int si = 0, ci = 0;
          for (int j = 0; j < n; ++j) {
            if (mask >> j & 1) outs.push_back({-1, sets[si++]});
            else outs.push_back({(cm >> ci++) & 1, {}});
          }
          out.emplace_back(k, outs);
        }
        return;
      }
      owner[x] = 0;
      self(self, x + 1, current);
      if (current >= 1) {
        owner[x] = current;
        self(self, x + 1, current);
      }
      if (current < r) {
        owner[x] = current + 1;
        self(self, x + 1, current + 1);
      }
      owner[x] = 0;
    };
    rec(rec, 1, 0);
  }
  return out;
}

}  // namespace cobarlab
