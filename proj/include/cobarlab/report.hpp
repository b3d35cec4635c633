#pragma once

#include "cobarlab/core.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace cobarlab {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
  std::size_t checked = 0;
  double millis = 0;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  void add(std::string name, const Verdict& v, double millis = 0) {
    checks.push_back({std::move(name), v.ok, v.witness, v.checked, millis});
  }

  // Times fn; an Error escaping it is recorded as a failure with its message.
  void run(const std::string& name, const std::function<Verdict()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const Error& e) {
      v = Verdict::fail(std::string("error: ") + e.what());
    }
    add(name, v, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }

  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }

  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  }

  nlohmann::json json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json e{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"millis", c.millis}};
      if (!c.pass) e["witness"] = c.witness;
      j["checks"].push_back(e);
    }
    return j;
  }

  std::string human() const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    for (const auto& c : checks) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (c.checked) os << " (" << c.checked << " checked)";
      os << " " << std::fixed << std::setprecision(1) << c.millis << " ms\n";
      if (!c.pass) os << "         witness: " << c.witness << "\n";
    }
    std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    os << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
  }
};

}  // namespace cobarlab
