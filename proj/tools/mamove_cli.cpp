// mamove: command line front end for the movable-antenna scheduler.

#include "mamove/errors.hpp"
#include "mamove/harness/config.hpp"
#include "mamove/harness/csv.hpp"
#include "mamove/harness/schemes.hpp"
#include "mamove/harness/sweep.hpp"
#include "mamove/harness/validate.hpp"
#include "mamove/stationarity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace mamove;
using namespace mamove::harness;

struct Common {
  std::string config_path;
  std::string out_path;
  std::optional<double> grid_step;
  std::optional<int> samples;
  std::optional<int> workers;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "Scenario config file (defaults to the reference setup)");
  cmd->add_option("--out", c.out_path, "CSV output path (stdout when omitted)");
  cmd->add_option("--grid-step", c.grid_step, "Duration grid spacing in seconds")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", c.samples, "Fitting samples S")->check(CLI::Range(4, 1000));
  cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1, 256));
}

RunConfig resolve(const Common& c) {
  RunConfig cfg = c.config_path.empty() ? default_config() : load_config(c.config_path);
  if (c.grid_step) cfg.grid_step = *c.grid_step;
  if (c.samples) cfg.samples = *c.samples;
  if (c.workers) cfg.search.workers = *c.workers;
  return cfg;
}

void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  write(out);
  if (!out) throw InvalidArgument("write to '" + path + "' failed");
}

std::vector<SchemeId> resolve_schemes(const std::vector<std::string>& names) {
  if (names.empty()) return all_schemes();
  std::vector<SchemeId> ids;
  for (const auto& n : names) {
    const auto id = parse_scheme(n);
    if (!id) throw InvalidArgument("unknown scheme '" + n + "' (OTGM, OTFM, UpperBound, FMDOAD, Static)");
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Movable-antenna placement and movement-duration scheduler"};
  app.require_subcommand(1);

  Common opt_c, sweep_c, thr_c, val_c;
  std::string scheme_name = "OTGM";
  std::vector<std::string> sweep_schemes;
  std::string sweep_arg;
  std::string case_name = "P31";
  std::string special_out;

  auto* optimize = app.add_subcommand("optimize", "Run one scheme on one scenario");
  add_common(optimize, opt_c);
  optimize->add_option("--scheme", scheme_name, "OTGM | OTFM | UpperBound | FMDOAD | Static");

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over a grid for several schemes");
  add_common(sweep, sweep_c);
  sweep->add_option("--sweep", sweep_arg, "param=v1,v2,... with param in vmax, region, antennas, interval")
      ->required();
  sweep->add_option("--scheme", sweep_schemes, "Schemes to run (repeatable; all when omitted)");

  auto* thresholds = app.add_subcommand("thresholds", "Stay/move thresholds at the initial deployment");
  add_common(thresholds, thr_c);

  auto* special = app.add_subcommand("special-case", "Closed-form threshold check on the two-antenna line cases");
  special->add_option("--case", case_name, "P31 | P32");
  special->add_option("--out", special_out, "CSV output path (stdout when omitted)");

  auto* validate = app.add_subcommand("validate", "Run the invariant suite on a scenario");
  add_common(validate, val_c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*optimize) {
      const RunConfig cfg = resolve(opt_c);
      const auto scheme = resolve_schemes({scheme_name}).front();
      const Scenario s = cfg.scenario();
      const TradeoffReport r = run_scheme(s, scheme, cfg);
      SweepRow row{0.0, scheme, r.best_t_mov, r.best_rate, r.best_throughput, r.converged, {}};
      emit(opt_c.out_path, [&](std::ostream& os) { write_sweep_csv(os, {row}); });
      std::cerr << to_string(scheme) << ": t_mov " << format_double(r.best_t_mov) << " s, rate "
                << format_double(r.best_rate) << " bps/Hz, throughput " << format_double(r.best_throughput)
                << " b/Hz (" << r.optimizer_calls << " optimizer runs)\n";
      for (std::size_t n = 0; n < r.best_deployment.size(); ++n) {
        const auto p = r.best_deployment[n];
        std::cerr << "  a_" << n + 1 << " = (" << format_double(p.x()) << ", " << format_double(p.y()) << ")\n";
      }
    } else if (*sweep) {
      const RunConfig cfg = resolve(sweep_c);
      SweepSpec spec = parse_sweep_arg(sweep_arg);
      spec.schemes = resolve_schemes(sweep_schemes);
      const auto rows = run_sweep(cfg, spec);
      emit(sweep_c.out_path, [&](std::ostream& os) { write_sweep_csv(os, rows); });
    } else if (*thresholds) {
      const RunConfig cfg = resolve(thr_c);
      const ThresholdReport r = speed_threshold(cfg.scenario());
      emit(thr_c.out_path, [&](std::ostream& os) { write_threshold_csv(os, r); });
    } else if (*special) {
      SpecialCase c;
      if (case_name == "P31") c = SpecialCase::P31;
      else if (case_name == "P32") c = SpecialCase::P32;
      else throw InvalidArgument("case must be P31 or P32");
      std::vector<double> speeds;
      for (int i = 1; i <= 100; ++i) speeds.push_back(i / 100.0);
      const auto points = verify_threshold(c, speeds);
      emit(special_out, [&](std::ostream& os) { write_special_case_csv(os, c, points); });
    } else if (*validate) {
      const RunConfig cfg = resolve(val_c);
      const auto checks = validate_scenario(cfg.scenario(), cfg);
      bool ok = true;
      for (const auto& ch : checks) {
        std::cout << (ch.passed ? "ok   " : "FAIL ") << ch.name << "  " << ch.detail << '\n';
        ok = ok && ch.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "mamove: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mamove: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
