#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cobarlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Structural misuse (bad index, wrong sizes, malformed input). Never used for
// a mathematical identity that fails; those produce a Verdict.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Verdict {
  bool ok = true;
  std::string witness;
  std::size_t checked = 0;

  static Verdict pass(std::size_t checked = 0) { return {true, {}, checked}; }
  static Verdict fail(std::string w) { return {false, std::move(w), 0}; }

  explicit operator bool() const { return ok; }

  // Keeps the first failure.
  Verdict& operator&=(const Verdict& other) {
    checked += other.checked;
    if (ok && !other.ok) {
      ok = false;
      witness = other.witness;
    }
    return *this;
  }
};

template <class... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << std::forward<Args>(args));
  return os.str();
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

}  // namespace cobarlab
