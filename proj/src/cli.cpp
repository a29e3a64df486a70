#include "hypchrom/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypchrom/errors.hpp"
#include "hypchrom/hoffman.hpp"
#include "hypchrom/report.hpp"
#include "hypchrom/selfcheck.hpp"
#include "hypchrom/spindle.hpp"

namespace hypchrom {

namespace {

struct Tuning {
  double s_max = SearchConfig{}.s_max;
  double grid_step = SearchConfig{}.grid_step;
  double tol = SearchConfig{}.refine_tol;
  int nodes = QuadratureConfig{}.base_nodes;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--smax", s_max, "Truncation of the frequency search")->capture_default_str();
    cmd.add_option("--grid-step", grid_step, "Spacing of the frequency grid")
        ->capture_default_str();
    cmd.add_option("--tol", tol, "Refinement and quadrature tolerance")->capture_default_str();
    cmd.add_option("--nodes", nodes, "Gauss-Legendre order per panel")->capture_default_str();
  }

  SearchConfig search() const {
    SearchConfig cfg;
    cfg.s_max = s_max;
    cfg.grid_step = grid_step;
    cfg.refine_tol = tol;
    cfg.validate();
    return cfg;
  }

  QuadratureConfig quadrature() const {
    QuadratureConfig quad;
    quad.base_nodes = nodes;
    quad.rel_tol = tol;
    quad.validate();
    return quad;
  }
};

void check_distance_flag(const char* name, double d) {
  if (!(d > 0.0 && d <= kMaxDistance)) {
    throw DomainError(std::string(name) + " must lie in (0, 700], got " + format_number(d));
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << contents;
  if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hoffman spectral bounds for the distance graphs of the hyperbolic plane"};
  app.name("hypchrom");
  app.require_subcommand(1);

  Tuning tuning;
  double d = 0.0;
  double d_from = 0.0;
  double d_to = 0.0;
  double step = 0.0;
  unsigned threads = 0;
  std::string csv_path;
  std::string svg_path;
  std::string json_path;
  std::uint64_t seed = 0x5eed;

  auto* bound_cmd = app.add_subcommand("bound", "Hoffman bound at one distance");
  bound_cmd->add_option("--d", d, "Edge distance d in (0, 700]")->required();
  tuning.add_to(*bound_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Hoffman bound over a grid of distances");
  sweep_cmd->add_option("--from", d_from, "First distance")->required();
  sweep_cmd->add_option("--to", d_to, "Last distance")->required();
  sweep_cmd->add_option("--step", step, "Grid spacing")->required();
  sweep_cmd->add_option("--out", csv_path, "CSV output path")->required();
  sweep_cmd->add_option("--svg", svg_path, "Optional SVG chart path");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  tuning.add_to(*sweep_cmd);

  app.add_subcommand("limit", "Asymptotic constants rho, nu and 1 - 1/nu");

  auto* spindle_cmd = app.add_subcommand("spindle", "Certified hyperbolic Moser spindle");
  spindle_cmd->add_option("--d", d, "Edge length d")->required();
  spindle_cmd->add_option("--json", json_path, "Optional JSON output path");

  auto* check_cmd = app.add_subcommand("check", "Run the numerical self-checks");
  check_cmd->add_option("--seed", seed, "Seed for the randomised groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  // Validate everything before computing.
  SearchConfig cfg;
  QuadratureConfig quad;
  try {
    if (bound_cmd->parsed() || sweep_cmd->parsed()) {
      cfg = tuning.search();
      quad = tuning.quadrature();
    }
    if (bound_cmd->parsed()) check_distance_flag("--d", d);
    if (spindle_cmd->parsed()) check_distance_flag("--d", d);
    if (sweep_cmd->parsed()) {
      check_distance_flag("--from", d_from);
      check_distance_flag("--to", d_to);
      if (!(step > 0.0)) throw DomainError("--step must be positive");
      if (!(d_from <= d_to)) throw DomainError("--from must not exceed --to");
    }
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitInvalidArguments;
  }

  try {
    if (bound_cmd->parsed()) {
      out << format_bound_line(hoffman_bound(d, cfg, quad)) << '\n';
    } else if (sweep_cmd->parsed()) {
      const auto results = sweep(d_from, d_to, step, cfg, quad, threads);
      std::ostringstream csv;
      write_sweep_csv(csv, results);
      write_file(csv_path, csv.str());
      if (!svg_path.empty()) {
        std::ostringstream svg;
        write_sweep_svg(svg, results, limit_constants().limit);
        write_file(svg_path, svg.str());
      }
      out << "wrote " << results.size() << " rows to " << csv_path << '\n';
    } else if (app.got_subcommand("limit")) {
      const LimitConstants c = limit_constants();
      out << "rho=" << format_number(c.rho) << '\n'
          << "nu=" << format_number(c.nu) << '\n'
          << "limit=" << format_number(c.limit) << '\n';
    } else if (spindle_cmd->parsed()) {
      const SpindleEmbedding s = build_spindle(d);
      out << "max_deviation=" << format_number(s.max_deviation) << '\n'
          << "chromatic_number=" << chromatic_number(spindle_graph()) << '\n';
      if (!json_path.empty()) write_file(json_path, spindle_to_json(s).dump(2) + "\n");
    } else if (check_cmd->parsed()) {
      bool all = true;
      for (const CheckGroup& g : run_self_checks(seed)) {
        out << (g.passed ? "PASS " : "FAIL ") << g.name << ": " << g.detail << '\n';
        all = all && g.passed;
      }
      return all ? kExitOk : kExitNumericFailure;
    }
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  } catch (const QuadratureError& e) {
    err << "numeric failure at d = " << format_number(d) << ": " << e.what() << '\n';
    return kExitNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace hypchrom
