#include "mamove/harness/csv.hpp"

#include "mamove/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace mamove::harness {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

std::string sanitize(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  std::replace(text.begin(), text.end(), '\r', ' ');
  return text;
}

double parse_field(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("bad numeric field '" + s + "'");
  return v;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.param) << ',' << to_string(r.scheme) << ',';
    if (r.error.empty()) {
      out << format_double(r.t_mov) << ',' << format_double(r.rate) << ',' << format_double(r.throughput) << ','
          << (r.converged ? 1 : 0) << ",\n";
    } else {
      out << ",,,0," << sanitize(r.error) << '\n';
    }
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) throw InvalidArgument("missing or unexpected sweep header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 7) throw InvalidArgument("sweep row needs 7 fields: " + line);
    SweepRow r;
    r.param = parse_field(f[0]);
    const auto scheme = parse_scheme(f[1]);
    if (!scheme) throw InvalidArgument("unknown scheme '" + f[1] + "'");
    r.scheme = *scheme;
    r.error = f[6];
    if (r.error.empty()) {
      r.t_mov = parse_field(f[2]);
      r.rate = parse_field(f[3]);
      r.throughput = parse_field(f[4]);
    }
    r.converged = f[5] == "1";
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_threshold_csv(std::ostream& out, const ThresholdReport& report) {
  out << kThresholdHeader << '\n';
  out << format_double(report.initial_rate) << ',' << format_double(report.gradient_norm_sum) << ',';
  if (report.zero_gradient) {
    out << ",,";
  } else {
    out << format_double(report.v_th) << ',' << format_double(report.t_th) << ',';
  }
  out << to_string(report.decision) << ',' << (report.zero_gradient ? 1 : 0) << '\n';
}

void write_special_case_csv(std::ostream& out, SpecialCase c, const std::vector<ThresholdPoint>& points) {
  out << kSpecialCaseHeader << '\n';
  const std::string v_th = format_double(special_case_speed_threshold(c));
  for (const auto& p : points)
    out << to_string(c) << ',' << format_double(p.max_speed) << ',' << format_double(p.t_star) << ',' << v_th << '\n';
}

}  // namespace mamove::harness
