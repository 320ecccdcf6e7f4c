#include "mamove/harness/config.hpp"

#include "mamove/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <string>

namespace mamove::harness {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("not a number: '" + std::string(s) + "'");
  return v;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

double parse_real(std::string_view text) {
  std::string_view s = trim(text);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) return parse_number(s);

  double value = std::numbers::pi;
  std::string_view head = trim(s.substr(0, pi_at));
  std::string_view tail = trim(s.substr(pi_at + 2));
  if (!head.empty()) {
    if (head == "-") {
      value = -value;
    } else {
      if (head.back() != '*') throw InvalidArgument("bad angle expression '" + std::string(s) + "'");
      head.remove_suffix(1);
      value *= parse_number(head);
    }
  }
  if (!tail.empty()) {
    if (tail.front() != '/') throw InvalidArgument("bad angle expression '" + std::string(s) + "'");
    value /= parse_number(tail.substr(1));
  }
  return value;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ScenarioSpec RunConfig::scenario_spec() const {
  ScenarioSpec spec;
  spec.topology = topology;
  spec.wavelength = wavelength;
  spec.elevation = elevation;
  if (topology == Topology::Square2D) spec.azimuth = azimuth;
  const std::size_t k = elevation.size();
  if (!fading.empty()) {
    spec.fading = fading;
  } else {
    if (distance.size() != 1 && distance.size() != k)
      throw InvalidArgument("distance must be a scalar or one value per user");
    for (std::size_t u = 0; u < k; ++u)
      spec.fading.push_back(fading_from_distance(beta0, alpha0, distance.size() == 1 ? distance[0] : distance[u]));
  }
  spec.noise_power = dbm_to_watts(noise_dbm);
  spec.total_power = dbm_to_watts(power_dbm);
  spec.interval = interval;
  spec.region_side = region;
  spec.min_spacing = min_spacing;
  spec.max_speed = max_speed;
  if (initial_y.empty()) {
    spec.initial = Deployment::from_x(initial_x);
  } else {
    spec.initial = Deployment::from_xy(initial_x, initial_y);
  }
  return spec;
}

double RunConfig::effective_grid_step() const { return grid_step > 0.0 ? grid_step : interval / 400.0; }

RunConfig default_config() {
  constexpr double pi = std::numbers::pi;
  RunConfig c;
  c.topology = Topology::Square2D;
  c.elevation = {pi / 2, pi / 4, pi / 6, pi / 8};
  c.azimuth = {pi / 3, pi / 5, pi / 7, pi / 8};
  c.beta0 = 1e-4;
  c.alpha0 = 2.0;
  c.distance = {100.0};
  c.power_dbm = 15.0;
  c.noise_dbm = -80.0;
  c.interval = 8.0;
  c.region = 10.0;
  c.min_spacing = 0.5;
  c.max_speed = 2.0;
  c.initial_x = {4.5, 5.0, 5.5, 6.0, 6.5};
  c.initial_y = {0.0, 0.0, 0.0, 0.0, 0.0};
  return c;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  PenaltyConfig& p = c.search.penalty;
  if (key == "topology") {
    if (value == "2d" || value == "square") c.topology = Topology::Square2D;
    else if (value == "1d" || value == "segment") c.topology = Topology::Segment1D;
    else throw InvalidArgument("topology must be 1d or 2d");
  } else if (key == "wavelength") c.wavelength = parse_real(value);
  else if (key == "elevation") c.elevation = parse_list(value);
  else if (key == "azimuth") c.azimuth = parse_list(value);
  else if (key == "fading") c.fading = parse_list(value);
  else if (key == "beta0") c.beta0 = parse_real(value);
  else if (key == "alpha0") c.alpha0 = parse_real(value);
  else if (key == "distance") c.distance = parse_list(value);
  else if (key == "power_dbm") c.power_dbm = parse_real(value);
  else if (key == "noise_dbm") c.noise_dbm = parse_real(value);
  else if (key == "interval") c.interval = parse_real(value);
  else if (key == "region") c.region = parse_real(value);
  else if (key == "min_spacing") c.min_spacing = parse_real(value);
  else if (key == "max_speed") c.max_speed = parse_real(value);
  else if (key == "initial_x") c.initial_x = parse_list(value);
  else if (key == "initial_y") c.initial_y = parse_list(value);
  else if (key == "grid_step") c.grid_step = parse_real(value);
  else if (key == "samples") c.samples = parse_int(value);
  else if (key == "workers") c.search.workers = parse_int(value);
  else if (key == "rho_init") p.rho_init = parse_real(value);
  else if (key == "rho_growth") p.rho_growth = parse_real(value);
  else if (key == "pgd_step") p.pgd_step = parse_real(value);
  else if (key == "step_growth") p.step_growth = parse_real(value);
  else if (key == "max_step") p.max_step = parse_real(value);
  else if (key == "max_move") p.max_move = parse_real(value);
  else if (key == "pgd_max_iters") p.pgd_max_iters = parse_int(value);
  else if (key == "ao_max_iters") p.ao_max_iters = parse_int(value);
  else if (key == "feasibility_tol") p.feasibility_tol = parse_real(value);
  else if (key == "grad_tol") p.grad_tol = parse_real(value);
  else if (key == "projection_tol") p.projection_tol = parse_real(value);
  else if (key == "restarts") p.restarts = parse_int(value);
  else if (key == "seed") p.seed = static_cast<std::uint64_t>(parse_int(value));
  else throw InvalidArgument("unknown config key '" + std::string(key) + "'");
}

RunConfig parse_config(std::istream& in) {
  RunConfig c = default_config();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(c, s.substr(0, eq), s.substr(eq + 1));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  c.search.penalty.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace mamove::harness
