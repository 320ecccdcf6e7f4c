#pragma once

#include "mamove/harness/sweep.hpp"
#include "mamove/stationarity.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mamove::harness {

inline constexpr std::string_view kSweepHeader = "param,scheme,t_mov,rate_bps_hz,throughput_b_hz,converged,error";
inline constexpr std::string_view kThresholdHeader = "r0_bps_hz,grad_norm_sum,v_th,t_th,decision,zero_gradient";
inline constexpr std::string_view kSpecialCaseHeader = "case,v_max,t_star,v_th";

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// Thresholds of a stationary start are written as empty fields with
/// zero_gradient = 1.
void write_threshold_csv(std::ostream& out, const ThresholdReport& report);

void write_special_case_csv(std::ostream& out, SpecialCase c, const std::vector<ThresholdPoint>& points);

}  // namespace mamove::harness
