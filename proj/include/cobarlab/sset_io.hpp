#pragma once

#include "cobarlab/simplicial.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cobarlab {

// Malformed input, as opposed to a failed verdict.
struct ParseError : Error {
  using Error::Error;
};

// Line format:
//   sset <name> [reduced|1-reduced]
//   gen <name> dim=<n>
//   face <gen> <i> = [s_j ...] <gen|*>    (degeneracies decreasing; * is the basepoint)
// Blank lines and lines starting with '#' are ignored.
inline SimplicialPresentation parse_sset(std::istream& in) {
  SimplicialPresentation p;
  bool header = false;
  std::string line;
  int lineno = 0;
  std::vector<std::vector<bool>> seen;
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(cat("line ", lineno, ": ", what)); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "sset") {
      if (header) throw fail("duplicate sset header");
      if (tok.size() < 2 || tok.size() > 3) throw fail("expected: sset <name> [reduced|1-reduced]");
      p.name = tok[1];
      if (tok.size() == 3) {
        if (tok[2] == "reduced") p.flag = Reduction::reduced;
        else if (tok[2] == "1-reduced") p.flag = Reduction::one_reduced;
        else throw fail("unknown flag " + tok[2]);
      }
      header = true;
      continue;
    }
    if (!header) throw fail("missing sset header");
    if (tok[0] == "gen") {
      if (tok.size() != 3 || tok[2].rfind("dim=", 0) != 0) throw fail("expected: gen <name> dim=<n>");
      int d;
      try {
        std::size_t used = 0;
        d = std::stoi(tok[2].substr(4), &used);
        if (used != tok[2].size() - 4 || d < 0) throw 0;
      } catch (...) {
        throw fail("bad dimension " + tok[2]);
      }
      if (p.has(tok[1])) throw fail("duplicate generator " + tok[1]);
      p.add_generator(tok[1], d);
      seen.emplace_back(d == 0 ? 0 : d + 1, false);
      continue;
    }
    if (tok[0] == "face") {
      if (tok.size() < 5 || tok[3] != "=") throw fail("expected: face <gen> <i> = [s_j ...] <gen>");
      if (!p.has(tok[1])) throw fail("undeclared generator " + tok[1]);
      int g = p.find(tok[1]);
      int m = p.generators[g].dim;
      int i;
      try {
        i = std::stoi(tok[2]);
      } catch (...) {
        throw fail("bad face index " + tok[2]);
      }
      if (m == 0 || i < 0 || i > m) throw fail(cat("face index ", i, " out of range for ", tok[1]));
      if (seen[g][i]) throw fail(cat("duplicate face ", i, " of ", tok[1]));
      const std::string& target = tok.back();
      if (target == "*" && !p.has("*")) {
        p.add_generator("*", 0);  // implicit basepoint
        seen.emplace_back();
      }
      if (!p.has(target)) throw fail("undeclared generator " + target);
      std::vector<int> degen;
      for (std::size_t k = 4; k + 1 < tok.size(); ++k) {
        const auto& s = tok[k];
        if (s.size() < 2 || s[0] != 's') throw fail("expected degeneracy s<j>, got " + s);
        try {
          degen.push_back(std::stoi(s.substr(1)));
        } catch (...) {
          throw fail("bad degeneracy " + s);
        }
        if (degen.size() >= 2 && degen[degen.size() - 2] <= degen.back())
          throw fail("degeneracies must be strictly decreasing");
      }
      int t = p.find(target);
      Simplex f{t, degen, p.generators[t].dim + static_cast<int>(degen.size())};
      if (f.dim != m - 1) throw fail(cat("face ", i, " of ", tok[1], " has dimension ", f.dim, ", expected ", m - 1));
      if (!degen.empty() && degen.front() >= f.dim) throw fail("degeneracy index out of range");
      p.faces[g][i] = f;
      seen[g][i] = true;
      continue;
    }
    throw fail("unknown directive " + tok[0]);
  }
  if (!header) throw ParseError("empty input: missing sset header");
  for (std::size_t g = 0; g < seen.size(); ++g)
    for (std::size_t i = 0; i < seen[g].size(); ++i)
      if (!seen[g][i]) throw ParseError(cat("face ", i, " of ", p.generators[g].name, " not given"));
  return p;
}

inline SimplicialPresentation parse_sset(const std::string& text) {
  std::istringstream in(text);
  return parse_sset(in);
}

inline SimplicialPresentation load_sset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_sset(in);
}

inline std::string serialize_sset(const SimplicialPresentation& p) {
  std::ostringstream out;
  out << "sset " << p.name;
  if (p.flag == Reduction::reduced) out << " reduced";
  if (p.flag == Reduction::one_reduced) out << " 1-reduced";
  out << "\n";
  for (const auto& g : p.generators) out << "gen " << g.name << " dim=" << g.dim << "\n";
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    for (std::size_t i = 0; i < p.faces[g].size(); ++i) {
      const auto& f = p.faces[g][i];
      out << "face " << p.generators[g].name << " " << i << " =";
      for (int j : f.degen) out << " s" << j;
      out << " " << p.generators.at(f.gen).name << "\n";
    }
  return out.str();
}

}  // namespace cobarlab
