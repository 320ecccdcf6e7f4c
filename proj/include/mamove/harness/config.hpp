#pragma once

#include "mamove/scenario.hpp"
#include "mamove/scheduler.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mamove::harness {

/// Everything a CLI run needs: the scenario inputs plus solver settings.
///
/// Config files are flat `key = value` text. `#` starts a comment. Lists are
/// comma separated. Angles are radians and accept `pi` forms such as
/// `pi/2` or `3*pi/8`. Lengths are in wavelengths, powers in dBm.
///
///   topology       2d | 1d
///   wavelength     carrier wavelength (lengths are multiples of it)
///   elevation      theta_k list
///   azimuth        phi_k list (ignored for 1d)
///   fading         beta_k list; overrides beta0/alpha0/distance
///   beta0 alpha0   path-loss model beta_k = beta0 * distance^-alpha0
///   distance       user distance in metres, scalar or per-user list
///   power_dbm      total transmit power
///   noise_dbm      noise power
///   interval       T in seconds
///   region         side L of the square (or segment)
///   min_spacing    d_min
///   max_speed      V_max in wavelengths per second
///   initial_x      initial antenna x coordinates
///   initial_y      initial antenna y coordinates (zeros when omitted)
///   grid_step      duration grid spacing in seconds (0 = T/400)
///   samples        fitting samples S
///   workers        threads for independent optimizer runs
///   rho_init rho_growth pgd_step step_growth max_step max_move pgd_max_iters
///   ao_max_iters feasibility_tol grad_tol projection_tol restarts seed
struct RunConfig {
  Topology topology = Topology::Square2D;
  double wavelength = 1.0;
  std::vector<double> elevation;
  std::vector<double> azimuth;
  std::vector<double> fading;  // empty: derive from the path-loss model
  double beta0 = 1e-4;
  double alpha0 = 2.0;
  std::vector<double> distance{100.0};
  double power_dbm = 15.0;
  double noise_dbm = -80.0;
  double interval = 8.0;
  double region = 10.0;
  double min_spacing = 0.5;
  double max_speed = 2.0;
  std::vector<double> initial_x;
  std::vector<double> initial_y;

  double grid_step = 0.0;
  int samples = 5;
  SearchConfig search;

  ScenarioSpec scenario_spec() const;
  Scenario scenario() const { return Scenario(scenario_spec()); }
  /// grid_step, or T/400 when unset.
  double effective_grid_step() const;
};

/// The reference multiuser setup: N = 5, K = 4, T = 8 s, L = 10, 15 dBm,
/// -80 dBm noise, d_min = 0.5, antennas on y = 0 from 4.5 to 6.5.
RunConfig default_config();

/// Applies one `key = value` assignment. Throws InvalidArgument for unknown
/// keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses a config stream on top of default_config().
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Parses a number or a `[k*]pi[/m]` expression.
double parse_real(std::string_view text);
std::vector<double> parse_list(std::string_view text);

}  // namespace mamove::harness
