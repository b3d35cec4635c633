#pragma once

#include "cobarlab/core.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace cobarlab {

// One-line notation, 1-based: images()[k-1] = pi(k).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      require(v >= 1 && v <= size() && !seen[v], "not a permutation: " + str());
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }
  static Permutation reversal(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
  }
  // The transposition (j, j+1) in S_n.
  static Permutation transposition(int n, int j) {
    require(j >= 1 && j < n, "transposition index out of range");
    auto v = identity(n).img_;
    std::swap(v[j - 1], v[j]);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_.at(k - 1); }
  const std::vector<int>& images() const { return img_; }

  // deg pi := number of inversions.
  int degree() const {
    int d = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (img_[a] > img_[b]) ++d;
    return d;
  }
  int sign() const { return degree() % 2 == 0 ? 1 : -1; }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (int k = 1; k <= size(); ++k) v[img_[k - 1] - 1] = k;
    return Permutation(std::move(v));
  }
  int preimage(int value) const {
    for (int k = 1; k <= size(); ++k)
      if (img_[k - 1] == value) return k;
    throw Error("value not in permutation");
  }

  // (this o rhs)(k) = this(rhs(k))
  Permutation compose(const Permutation& rhs) const {
    require(size() == rhs.size(), "compose: size mismatch");
    std::vector<int> v(img_.size());
    for (int k = 1; k <= size(); ++k) v[k - 1] = (*this)(rhs(k));
    return Permutation(std::move(v));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < img_.size(); ++k) s += (k ? "," : "") + std::to_string(img_[k]);
    return s + ")";
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

inline Permutation concat(const std::vector<Permutation>& perms) {
  std::vector<int> v;
  int offset = 0;
  for (const auto& p : perms) {
    for (int x : p.images()) v.push_back(x + offset);
    offset += p.size();
  }
  return Permutation(std::move(v));
}

// Lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto v = Permutation::identity(n).images();
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

struct Shuffle {
  int k = 0, l = 0;
  std::vector<int> alpha, beta;

  static Shuffle from_alpha(int n, std::vector<int> alpha) {
    Shuffle s;
    std::sort(alpha.begin(), alpha.end());
    std::vector<bool> in(n + 1, false);
    for (int a : alpha) {
      require(a >= 1 && a <= n && !in[a], "bad shuffle");
      in[a] = true;
    }
    for (int b = 1; b <= n; ++b)
      if (!in[b]) s.beta.push_back(b);
    s.alpha = std::move(alpha);
    s.k = static_cast<int>(s.alpha.size());
    s.l = static_cast<int>(s.beta.size());
    return s;
  }

  int size() const { return k + l; }
  // Parity of (1..n) -> (alpha, beta).
  int sign() const {
    int inv = 0;
    for (int a : alpha)
      for (int b : beta)
        if (a > b) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  }
  std::string str() const {
    auto set = [](const std::vector<int>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    return "(" + set(alpha) + "," + set(beta) + ")";
  }
  auto operator<=>(const Shuffle&) const = default;
  bool operator==(const Shuffle&) const = default;
};

inline std::vector<Shuffle> all_shuffles(int k, int l) {
  std::vector<Shuffle> out;
  int n = k + l;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> alpha;
    for (int i = 0; i < n; ++i)
      if (mask[i]) alpha.push_back(i + 1);
    out.push_back(Shuffle::from_alpha(n, alpha));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

struct PsiData {
  Shuffle shuffle;
  Permutation sigma, tau;
  bool operator==(const PsiData&) const = default;
};

// (sigma ⊔ tau) o pi_{alpha,beta}
inline Permutation psi(const Shuffle& sh, const Permutation& sigma, const Permutation& tau) {
  require(sigma.size() == sh.k && tau.size() == sh.l, "psi: size mismatch");
  std::vector<int> v(sh.size());
  for (int i = 1; i <= sh.k; ++i) v[sh.alpha[i - 1] - 1] = sigma(i);
  for (int j = 1; j <= sh.l; ++j) v[sh.beta[j - 1] - 1] = sh.k + tau(j);
  return Permutation(std::move(v));
}

inline PsiData psi_inv(const Permutation& pi, int k) {
  int n = pi.size();
  require(k >= 0 && k <= n, "psi_inv: k out of range");
  std::vector<int> alpha, s, t;
  for (int j = 1; j <= n; ++j) {
    if (pi(j) <= k) {
      alpha.push_back(j);
      s.push_back(pi(j));
    } else {
      t.push_back(pi(j) - k);
    }
  }
  return {Shuffle::from_alpha(n, alpha), Permutation(s), Permutation(t)};
}

inline Permutation remove_assignment(const Permutation& pi, int i) {
  require(i >= 1 && i <= pi.size(), "remove_assignment: position out of range");
  int removed = pi(i);
  std::vector<int> v;
  for (int j = 1; j <= pi.size(); ++j) {
    if (j == i) continue;
    v.push_back(pi(j) > removed ? pi(j) - 1 : pi(j));
  }
  return Permutation(std::move(v));
}

inline Permutation add_assignment(const Permutation& pi, int pos, int val) {
  int n = pi.size();
  require(pos >= 1 && pos <= n + 1 && val >= 1 && val <= n + 1,
          "add_assignment: out of range");
  std::vector<int> v;
  for (int j = 1; j <= n + 1; ++j) {
    if (j == pos) {
      v.push_back(val);
    } else {
      int x = pi(j < pos ? j : j - 1);
      v.push_back(x >= val ? x + 1 : x);
    }
  }
  return Permutation(std::move(v));
}

// (i_1, ..., i_n) with 0 <= i_k <= n - k.
class SzIndex {
 public:
  SzIndex() = default;
  explicit SzIndex(std::vector<int> e) : e_(std::move(e)) {
    int n = size();
    for (int k = 1; k <= n; ++k)
      require(e_[k - 1] >= 0 && e_[k - 1] <= n - k, "not an element of S_n: " + str());
  }
  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int k) const { return e_.at(k - 1); }  // 1-based
  const std::vector<int>& entries() const { return e_; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  SzIndex tail() const { return SzIndex(std::vector<int>(e_.begin() + 1, e_.end())); }
  SzIndex prepend(int head) const {
    std::vector<int> v{head};
    v.insert(v.end(), e_.begin(), e_.end());
    return SzIndex(std::move(v));
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < e_.size(); ++k) s += (k ? "," : "") + std::to_string(e_[k]);
    return s + ")";
  }
  auto operator<=>(const SzIndex&) const = default;
  bool operator==(const SzIndex&) const = default;

 private:
  std::vector<int> e_;
};

inline std::vector<SzIndex> all_sz_indices(int n) {
  std::vector<SzIndex> out;
  std::vector<int> e(n, 0);
  while (true) {
    out.emplace_back(e);
    int k = n - 1;
    while (k >= 0 && e[k] == n - 1 - k) e[k--] = 0;
    if (k < 0) break;
    ++e[k];
  }
  return out;
}

// The bijection p : S_n (index sequences) -> S_n (permutations).
inline Permutation sz_to_perm(const SzIndex& idx) {
  int n = idx.size();
  if (n == 0) return {};
  auto rest = sz_to_perm(idx.tail());
  int i1 = idx[1];
  std::vector<int> v{i1 + 1};
  for (int x : rest.images()) v.push_back(x > i1 ? x + 1 : x);
  return Permutation(std::move(v));
}

inline SzIndex perm_to_sz(const Permutation& pi) {
  std::vector<int> e;
  for (int k = 1; k <= pi.size(); ++k) {
    int c = 0;
    for (int j = 1; j <= k; ++j)
      if (pi(j) <= pi(k)) ++c;
    e.push_back(pi(k) - c);
  }
  return SzIndex(std::move(e));
}

struct XiResult {
  Shuffle shuffle;
  SzIndex j, k;
  bool operator==(const XiResult&) const = default;
};

inline XiResult xi(const SzIndex& idx) {
  int n = idx.size();
  require(n >= 1, "xi: empty index");
  if (n == 1) return {Shuffle{}, SzIndex{}, SzIndex{}};
  auto r = xi(idx.tail());
  int i1 = idx[1], kp = r.shuffle.k;
  auto shifted = [](const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(x + 1);
    return out;
  };
  std::vector<int> alpha = shifted(r.shuffle.alpha);
  if (i1 <= kp) {
    alpha.insert(alpha.begin(), 1);
    return {Shuffle::from_alpha(n - 1, alpha), r.j.prepend(i1), r.k};
  }
  return {Shuffle::from_alpha(n - 1, alpha), r.j, r.k.prepend(i1 - kp - 1)};
}

struct PhiResult {
  SzIndex j;
  int q = 0;
  bool operator==(const PhiResult&) const = default;
};

inline PhiResult phi(const SzIndex& idx, int p) {
  int n = idx.size();
  require(n >= 1, "phi: empty index");
  require(p >= 0 && p <= n, "phi: p out of range");
  if (n == 1) return {SzIndex{}, 0};
  int i1 = idx[1];
  if (p == i1 || p == i1 + 1) return {idx.tail(), 0};
  if (p < i1) {
    auto r = phi(idx.tail(), p);
    return {r.j.prepend(i1 - 1), r.q + 1};
  }
  auto r = phi(idx.tail(), p - 1);
  return {r.j.prepend(i1), r.q + 1};
}

// k = pi(n) - 1, l = n - pi(n), Psi^{-1}_{k,l} of pi with n removed.
inline PsiData sz_shuffle_split(const Permutation& pi) {
  int n = pi.size();
  require(n >= 1, "sz_shuffle_split: empty permutation");
  return psi_inv(remove_assignment(pi, n), pi(n) - 1);
}

struct PhiPermResult {
  Permutation pi;
  int q = 0;
  bool operator==(const PhiPermResult&) const = default;
};

inline PhiPermResult phi_perm(const Permutation& pi, int p) {
  int n = pi.size();
  require(n >= 1, "phi_perm: empty permutation");
  require(p >= 0 && p <= n, "phi_perm: p out of range");
  int pos;
  if (p == 0)
    pos = pi.preimage(1);
  else if (p == n)
    pos = pi.preimage(n);
  else
    pos = std::min(pi.preimage(p), pi.preimage(p + 1));
  return {remove_assignment(pi, pos), pos - 1};
}

}  // namespace cobarlab
