#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bjop/errors.hpp"
#include "bjop/grid.hpp"
#include "bjop/harness.hpp"
#include "bjop/parse.hpp"
#include "bjop/quantize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool color_enabled() {
  const char* mode = std::getenv("BJOP_COLOR");
  if (mode != nullptr && std::string(mode) == "never") return false;
  return isatty(fileno(stdout)) != 0;
}

int run_verify(const std::string& suite, const bjop::HarnessConfig& cfg,
               const std::string& json_path) {
  std::vector<bjop::CheckReport> reports;
  const bjop::Grid g = cfg.grid();
  if (suite == "gvh") {
    reports.push_back(bjop::check_gvh());
  } else if (suite == "monomials") {
    reports.push_back(bjop::check_monomials(cfg.rmax, cfg.smax));
  } else if (suite == "dirac_grid") {
    reports.push_back(bjop::check_dirac_grid({cfg.rule}, cfg.dirac_ks, g));
  } else if (suite == "theorem2") {
    reports.push_back(bjop::check_theorem2_reconstruction(cfg.theorem2_ks, g));
  } else if (suite == "unitary_family") {
    reports.push_back(bjop::check_unitary_family(g));
  } else if (suite == "adjoint") {
    reports.push_back(bjop::check_adjoint_grid(g));
  } else if (suite == "all") {
    reports = bjop::run_all(cfg);
  } else {
    std::cerr << "error: unknown suite '" << suite
              << "' (expected gvh, monomials, dirac_grid, theorem2, unitary_family, "
                 "adjoint or all)\n";
    return kExitUsage;
  }

  std::cout << bjop::reports_to_text(reports, color_enabled());
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kExitUsage;
    }
    out << bjop::reports_to_json(reports);
  }
  return bjop::aggregate_passed(reports) ? kExitOk : kExitCheckFailed;
}

int run_grid_export(const std::string& kind, int n, double l, const std::string& out_path,
                    const std::string& format) {
  const bjop::Grid g(n, l);
  bjop::GridFunction u(g);
  if (kind == "gaussian") {
    u = bjop::GridFunction::gaussian(g);
  } else if (kind == "hermite1") {
    u = bjop::GridFunction::hermite1(g);
  } else if (kind.rfind("planewave:", 0) == 0) {
    const int k = std::stoi(kind.substr(10));
    u = bjop::GridFunction::planewave(g, k);
  } else {
    std::cerr << "error: unknown vector kind '" << kind
              << "' (expected gaussian, hermite1 or planewave:<k>)\n";
    return kExitUsage;
  }
  if (format == "json")
    bjop::write_json(u, out_path);
  else
    bjop::write_csv(u, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bjop - Born-Jordan / Weyl / Shubin quantization calculus"};
  app.require_subcommand(1);

  std::string expr_a, expr_b, rule_str = "bj", suite, json_path, kind, out_path;
  std::string format = "csv";
  int dim = 1;
  bjop::HarnessConfig cfg;

  auto* quantize = app.add_subcommand("quantize", "quantize a symbol under a rule");
  quantize->add_option("expr", expr_a, "symbol expression, e.g. \"x^2*xi^2\"")->required();
  quantize->add_option("--rule", rule_str, "bj | weyl | tau=<p/q>");
  quantize->add_option("--dim", dim, "number of coordinates")->check(CLI::PositiveNumber);

  auto* poisson = app.add_subcommand("poisson", "Poisson bracket of two symbols");
  poisson->add_option("a", expr_a)->required();
  poisson->add_option("b", expr_b)->required();
  poisson->add_option("--dim", dim)->check(CLI::PositiveNumber);

  auto* commutator =
      app.add_subcommand("commutator", "commutator of the quantizations of two symbols");
  commutator->add_option("a", expr_a)->required();
  commutator->add_option("b", expr_b)->required();
  commutator->add_option("--rule", rule_str, "bj | weyl | tau=<p/q>");
  commutator->add_option("--dim", dim)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "gvh | monomials | dirac_grid | theorem2 | unitary_family | adjoint | all")
      ->required();
  verify->add_option("--rmax", cfg.rmax);
  verify->add_option("--smax", cfg.smax);
  verify->add_option("--N", cfg.grid_n);
  verify->add_option("--L", cfg.grid_l);
  verify->add_option("--rule", rule_str, "rule for dirac_grid");
  verify->add_option("--json", json_path, "also write the JSON report here");

  auto* grid = app.add_subcommand("grid", "grid utilities");
  auto* grid_export = grid->add_subcommand("export", "write a named test vector");
  grid_export->add_option("kind", kind, "gaussian | hermite1 | planewave:<k>")->required();
  int grid_n = 256;
  double grid_l = 16 * bjop::Grid::pi();
  grid_export->add_option("--N", grid_n);
  grid_export->add_option("--L", grid_l);
  grid_export->add_option("--out", out_path, "output path")->required();
  grid_export->add_option("--format", format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (quantize->parsed()) {
      const bjop::SymbolPoly a = bjop::parse_symbol_poly(expr_a, dim);
      std::cout << bjop::quantize(a, bjop::parse_rule(rule_str)).to_string() << "\n";
      return kExitOk;
    }
    if (poisson->parsed()) {
      const bjop::SymbolPoly a = bjop::parse_symbol_poly(expr_a, dim);
      const bjop::SymbolPoly b = bjop::parse_symbol_poly(expr_b, dim);
      std::cout << bjop::poisson_bracket(a, b).to_string() << "\n";
      return kExitOk;
    }
    if (commutator->parsed()) {
      const bjop::QuantizationRule rule = bjop::parse_rule(rule_str);
      const bjop::OpPoly A = bjop::quantize(bjop::parse_symbol_poly(expr_a, dim), rule);
      const bjop::OpPoly B = bjop::quantize(bjop::parse_symbol_poly(expr_b, dim), rule);
      std::cout << bjop::op_commutator(A, B).to_string() << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      cfg.rule = bjop::parse_rule(rule_str);
      return run_verify(suite, cfg, json_path);
    }
    if (grid_export->parsed()) return run_grid_export(kind, grid_n, grid_l, out_path, format);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const bjop::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bjop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
