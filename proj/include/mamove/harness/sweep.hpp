#pragma once

#include "mamove/harness/config.hpp"
#include "mamove/harness/schemes.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mamove::harness {

enum class SweepParam { Vmax, RegionL, NumAntennas, Duration };

std::string_view to_string(SweepParam p);
std::optional<SweepParam> parse_sweep_param(std::string_view text);

struct SweepSpec {
  SweepParam param = SweepParam::Vmax;
  std::vector<double> values;
  std::vector<SchemeId> schemes;
};

/// Parses `param=v1,v2,...`.
SweepSpec parse_sweep_arg(std::string_view text);

/// One CSV row. `error` is empty on success.
struct SweepRow {
  double param = 0.0;
  SchemeId scheme = SchemeId::OTGM;
  double t_mov = 0.0;
  double rate = 0.0;
  double throughput = 0.0;
  bool converged = false;
  std::string error;
};

/// Base config with one parameter replaced.
///   Vmax         max_speed
///   RegionL      region side; the initial x span is re-centred at L/2
///   NumAntennas  N antennas on y = 0, spaced 0.5 apart, x span centred at L/2
///   Duration     interval T
RunConfig config_for(const RunConfig& base, SweepParam param, double value);

/// Runs every (value, scheme) cell, grid-major then scheme-minor. Cells run
/// on `base.search.workers` threads; a failing cell becomes an error row.
std::vector<SweepRow> run_sweep(const RunConfig& base, const SweepSpec& spec);

}  // namespace mamove::harness
