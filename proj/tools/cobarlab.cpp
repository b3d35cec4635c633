#include "cobarlab/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace cobarlab;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

// A path to an .sset file, or the name of a built-in fixture.
SimplicialPresentation load_input(const std::string& what) {
  if (std::filesystem::exists(what)) return load_sset(what);
  try {
    return fixture(what);
  } catch (const Error&) {
    throw ParseError("no such file or fixture: " + what);
  }
}

std::optional<int> env_max_dim() {
  const char* s = std::getenv("COBARLAB_MAX_DIM");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != std::string(s).size() || v < 0) throw 0;
    return v;
  } catch (...) {
    throw ParseError(std::string("COBARLAB_MAX_DIM is not a nonnegative integer: ") + s);
  }
}

int resolve(std::optional<int> flag, int fallback) {
  if (flag) return *flag;
  if (auto e = env_max_dim()) return *e;
  return fallback;
}

int emit(const Report& r, const std::string& json_out) {
  std::cout << r.human();
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw ParseError("cannot write " + json_out);
    out << r.json().dump(2) << "\n";
  }
  return r.ok() ? kPass : kFail;
}

int cmd_validate(const std::string& input, int max_dim) {
  auto X = load_input(input);
  auto v = validate(X, max_dim);
  if (v) {
    std::cout << "valid: " << X.name << " (" << v.checked << " simplices checked up to dim " << max_dim << ")\n";
    return kPass;
  }
  std::cout << "invalid: " << X.name << "\n  witness: " << v.witness << "\n";
  return kFail;
}

int cmd_homology(const std::string& input, int max_dim, const std::string& json_out) {
  auto X = load_input(input);
  Report r{"homology " + X.name, {}};
  auto c = chains(X, max_dim + 1);
  r.run("d^2 = 0", [&] { return check_d_squared(c.complex); });
  int top = c.complex.truncated ? c.complex.top() - 1 : c.complex.top();
  for (int d = 0; d <= std::min(max_dim, top); ++d) {
    auto h = homology(c.complex, d);
    Verdict v = Verdict::pass(1);
    v.witness = h.str();
    r.add(cat("H_", d, " = ", h.str()), v);
  }
  return emit(r, json_out);
}

int cmd_triangulate(const std::string& name, int max_dim, const std::string& json_out) {
  Report r{"triangulate " + name, {}};
  auto run_on = [&](const auto& y) {
    using Y = std::decay_t<decltype(y)>;
    Triangulation<Y> t(y, max_dim);
    for (int m = 0; m <= max_dim; ++m) {
      Verdict v = Verdict::pass(t.nondegenerate(m).size());
      r.add(cat("nondegenerate ", m, "-simplices: ", v.checked), v);
    }
    auto cy = cubical_chains(y, max_dim, false);
    auto ct = triangulated_chains(t);
    auto f = t_map(t, cy, ct);
    r.run("t is a chain map", [&] { return check_chain_map(cy.complex, ct.complex, f); });
    r.run("t is a coalgebra map", [&] { return check_coalgebra_map(cy.complex, ct.complex, f); });
    r.run("t induces an isomorphism on homology", [&] { return check_quasi_iso(cy.complex, ct.complex, f); });
  };
  if (name.rfind("cube", 0) == 0 && name.find('x') == std::string::npos) {
    int n;
    try {
      n = std::stoi(name.substr(4));
    } catch (...) {
      throw ParseError("unknown cubical fixture " + name);
    }
    StandardCube y(n);
    max_dim = std::min(max_dim, n);
    run_on(y);
  } else if (name == "cube1xcube1") {
    StandardCube a(1), b(1);
    ProductCubical<StandardCube, StandardCube> p(a, b);
    max_dim = std::min(max_dim, 2);
    run_on(p);
  } else {
    // the cubical cobar construction of a 1-reduced simplicial set, as its max_dim-skeleton
    auto X = load_input(name);
    if (X.flag != Reduction::one_reduced) throw ParseError(name + " is not flagged 1-reduced");
    CubicalCobar cob(X);
    run_on(cob);
  }
  return emit(r, json_out);
}

int cmd_cobar(const std::string& input, int max_deg, const std::string& json_out) {
  auto X = load_input(input);
  if (X.flag != Reduction::one_reduced) throw ParseError(input + " is not flagged 1-reduced");
  CubicalCobar cob(X);
  Report r{"cobar " + X.name, {}};
  auto cc = cubical_chains(cob, max_deg, true);
  attach_cubical_product(cob, cc);
  auto om = omega_complex(X, max_deg);
  auto iso = cobar_iso(cob, cc, om);
  r.add("basis bijection", iso.bijection);
  r.add("differentials agree", iso.differential);
  r.add("products agree", iso.product);
  r.run("transported diagonal coassociative", [&] {
    transport_diagonal(cc, om);
    return check_coassociative(om.complex);
  });
  for (int d = 0; d < max_deg; ++d) {
    auto h = homology(om.complex, d);
    r.add(cat("H_", d, " = ", h.str()), Verdict::pass(1));
  }
  return emit(r, json_out);
}

int cmd_szczarba(const std::string& input, const std::string& simplex, std::optional<int> n) {
  auto X = load_input(input);
  if (X.flag == Reduction::none) throw ParseError(input + " is not flagged reduced");
  LoopGroup g(X);
  auto p = small_sz_provider();
  std::vector<Simplex> xs;
  if (!simplex.empty()) {
    if (!X.has(simplex)) throw ParseError("no generator named " + simplex);
    xs.push_back(X.gen(simplex));
  } else {
    for (const auto& x : X.nondegenerate(n.value_or(2))) xs.push_back(x);
  }
  int status = kPass;
  for (const auto& x : xs) {
    auto name = X.label(x);
    if (x.dim == 0) {
      std::cout << "t_Sz(" << name << ") = 0\n";
      continue;
    }
    try {
      for (const auto& i : all_sz_indices(x.dim - 1))
        std::cout << "Sz_" << i.str() << " " << name << " = " << g.label(sz_index(p, g, i, x)) << "\n";
      std::cout << "t_Sz(" << name << ") = " << render_group_chain(g, t_sz(p, g, x)) << "\n";
    } catch (const Error& e) {
      std::cout << name << ": " << e.what() << "\n";
      status = kFail;
    }
  }
  return status;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<int> max_dim, const std::string& json_out) {
  SuiteOptions o;
  o.seed = seed;
  o.max_dim = max_dim ? max_dim : env_max_dim();
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    auto known = suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) throw ParseError("unknown suite " + suite);
    names = {suite};
  }
  Report all{suite, {}};
  for (const auto& s : names) {
    auto r = run_suite(s, o);
    if (names.size() == 1) {
      all = r;
      break;
    }
    for (auto c : r.checks) {
      c.name = s + ": " + c.name;
      all.checks.push_back(c);
    }
  }
  all.sort();
  return emit(all, json_out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cobarlab: simplicial, cubical and cobar constructions with exact verification"};
  app.require_subcommand(1);

  std::string input, fixture_name, simplex, suite, json_out;
  std::optional<int> max_dim, n;
  std::uint64_t seed = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check the simplicial identities of an .sset file");
  validate_cmd->add_option("input", input, "path to an .sset file or a built-in fixture name")->required();
  validate_cmd->add_option("--max-dim", max_dim, "highest dimension checked (default 5)");

  auto* homology_cmd = app.add_subcommand("homology", "integral homology of the normalized chains");
  homology_cmd->add_option("input", input, "path to an .sset file or a built-in fixture name")->required();
  homology_cmd->add_option("--max-dim", max_dim, "highest degree reported (default 4)");
  homology_cmd->add_option("--json-out", json_out, "write the report as JSON");

  auto* tri_cmd = app.add_subcommand("triangulate", "triangulate a cubical set and check the map t");
  tri_cmd->add_option("--fixture", fixture_name, "cubeN, cube1xcube1, or a 1-reduced simplicial set (its cubical cobar construction)")
      ->required();
  tri_cmd->add_option("--max-dim", max_dim, "cube dimension cap (default 3)");
  tri_cmd->add_option("--json-out", json_out, "write the report as JSON");

  auto* cobar_cmd = app.add_subcommand("cobar", "compare cubical and algebraic cobar constructions");
  cobar_cmd->add_option("input", input, "path to a 1-reduced .sset file or a built-in fixture name")->required();
  cobar_cmd->add_option("--max-deg", max_dim, "highest degree (default 3)");
  cobar_cmd->add_option("--json-out", json_out, "write the report as JSON");

  auto* sz_cmd = app.add_subcommand("szczarba", "print Szczarba operators and the twisting cochain");
  sz_cmd->add_option("input", input, "path to a reduced .sset file or a built-in fixture name")->required();
  sz_cmd->add_option("--simplex", simplex, "generator name");
  sz_cmd->add_option("--n", n, "all generators of this dimension (default 2)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--seed", seed, "seed for sampled checks");
  verify_cmd->add_option("--max-dim", max_dim, "cap on every dimension bound");
  verify_cmd->add_option("--json-out", json_out, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(input, resolve(max_dim, 5));
    if (*homology_cmd) return cmd_homology(input, resolve(max_dim, 4), json_out);
    if (*tri_cmd) return cmd_triangulate(fixture_name, resolve(max_dim, 3), json_out);
    if (*cobar_cmd) return cmd_cobar(input, resolve(max_dim, 3), json_out);
    if (*sz_cmd) return cmd_szczarba(input, simplex, n);
    if (*verify_cmd) return cmd_verify(suite, seed, max_dim, json_out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
