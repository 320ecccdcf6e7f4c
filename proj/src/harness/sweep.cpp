#include "mamove/harness/sweep.hpp"

#include "mamove/errors.hpp"
#include "mamove/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mamove::harness {

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::Vmax: return "vmax";
    case SweepParam::RegionL: return "region";
    case SweepParam::NumAntennas: return "antennas";
    case SweepParam::Duration: return "interval";
  }
  return "unknown";
}

std::optional<SweepParam> parse_sweep_param(std::string_view text) {
  for (SweepParam p : {SweepParam::Vmax, SweepParam::RegionL, SweepParam::NumAntennas, SweepParam::Duration})
    if (to_string(p) == text) return p;
  return std::nullopt;
}

SweepSpec parse_sweep_arg(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw InvalidArgument("sweep must look like param=v1,v2,...");
  const auto param = parse_sweep_param(text.substr(0, eq));
  if (!param)
    throw InvalidArgument("unknown sweep parameter '" + std::string(text.substr(0, eq)) +
                          "' (vmax, region, antennas, interval)");
  SweepSpec spec;
  spec.param = *param;
  spec.values = parse_list(text.substr(eq + 1));
  if (spec.values.empty()) throw InvalidArgument("sweep grid is empty");
  spec.schemes = all_schemes();
  return spec;
}

namespace {

void centre_span(std::vector<double>& xs, double side) {
  if (xs.empty()) return;
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  const double shift = side / 2.0 - (*lo + *hi) / 2.0;
  for (double& x : xs) x += shift;
}

}  // namespace

RunConfig config_for(const RunConfig& base, SweepParam param, double value) {
  RunConfig c = base;
  switch (param) {
    case SweepParam::Vmax: c.max_speed = value; break;
    case SweepParam::Duration: c.interval = value; break;
    case SweepParam::RegionL:
      c.region = value;
      centre_span(c.initial_x, value);
      break;
    case SweepParam::NumAntennas: {
      const double rounded = std::round(value);
      if (rounded < 1.0 || std::abs(rounded - value) > 1e-9)
        throw InvalidArgument("antenna count must be a positive integer");
      const auto n = static_cast<std::size_t>(rounded);
      c.initial_x.assign(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) c.initial_x[i] = 0.5 * static_cast<double>(i);
      centre_span(c.initial_x, c.region);
      c.initial_y.assign(n, 0.0);
      break;
    }
  }
  return c;
}

std::vector<SweepRow> run_sweep(const RunConfig& base, const SweepSpec& spec) {
  const std::size_t schemes = spec.schemes.size();
  std::vector<SweepRow> rows(spec.values.size() * schemes);
  // Cells parallelize; the search inside each cell stays single threaded.
  RunConfig inner = base;
  inner.search.workers = 1;
  parallel_for(rows.size(), base.search.workers, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.param = spec.values[i / schemes];
    row.scheme = spec.schemes[i % schemes];
    try {
      const RunConfig cfg = config_for(inner, spec.param, row.param);
      const TradeoffReport r = run_scheme(cfg.scenario(), row.scheme, cfg);
      row.t_mov = r.best_t_mov;
      row.rate = r.best_rate;
      row.throughput = r.best_throughput;
      row.converged = r.converged;
    } catch (const std::exception& e) {
      row.error = e.what();
      if (row.error.empty()) row.error = "error";
    }
  });
  return rows;
}

}  // namespace mamove::harness
