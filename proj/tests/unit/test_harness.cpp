#include "mamove/channel.hpp"
#include "mamove/errors.hpp"
#include "mamove/harness/config.hpp"
#include "mamove/harness/csv.hpp"
#include "mamove/harness/schemes.hpp"
#include "mamove/harness/sweep.hpp"
#include "mamove/harness/validate.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

using namespace mamove;
using namespace mamove::harness;

namespace {

// Small, fast scenario for scheme and sweep tests.
RunConfig quick_config() {
  RunConfig c = default_config();
  c.grid_step = c.interval / 20.0;
  c.search.penalty.restarts = 2;
  return c;
}

}  // namespace

TEST_CASE("angle expressions") {
  CHECK(parse_real("pi/2") == doctest::Approx(std::numbers::pi / 2));
  CHECK(parse_real(" 3*pi/8 ") == doctest::Approx(3 * std::numbers::pi / 8));
  CHECK(parse_real("-pi/4") == doctest::Approx(-std::numbers::pi / 4));
  CHECK(parse_real("pi") == doctest::Approx(std::numbers::pi));
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real("-1e-3") == -1e-3);
  CHECK_THROWS_AS(parse_real("pie"), InvalidArgument);
  CHECK_THROWS_AS(parse_real("2pi"), InvalidArgument);
  CHECK_THROWS_AS(parse_real(""), InvalidArgument);
  CHECK(parse_list("1, pi/2,3") == std::vector<double>{1.0, std::numbers::pi / 2, 3.0});
}

TEST_CASE("default config is the reference setup") {
  const RunConfig c = default_config();
  const Scenario s = c.scenario();
  CHECK(s.num_antennas() == 5);
  CHECK(s.num_users() == 4);
  CHECK(s.interval() == 8.0);
  CHECK(s.total_power() == doctest::Approx(std::pow(10.0, -1.5)));
  CHECK(s.noise_power() == doctest::Approx(1e-11));
  CHECK(s.fading(0) == doctest::Approx(1e-8));
  CHECK(s.initial()[0].x() == 4.5);
  CHECK(s.initial()[4].x() == 6.5);
  CHECK(c.effective_grid_step() == doctest::Approx(0.02));
}

TEST_CASE("config file parsing") {
  std::istringstream in(
      "# comment line\n"
      "topology = 1d\n"
      "elevation = pi/2, 0.3\n"
      "fading = 1, 1\n"
      "power_dbm = 30   # 1 W\n"
      "noise_dbm = 30\n"
      "initial_x = 2, 4\n"
      "initial_y =\n"
      "max_speed = 0.75\n"
      "restarts = 3\n"
      "\n");
  const RunConfig c = parse_config(in);
  CHECK(c.topology == Topology::Segment1D);
  CHECK(c.search.penalty.restarts == 3);
  const Scenario s = c.scenario();
  CHECK(s.num_users() == 2);
  CHECK(s.total_power() == doctest::Approx(1.0));
  CHECK(s.max_speed() == 0.75);
}

TEST_CASE("config errors") {
  std::istringstream unknown("bogus = 1\n");
  CHECK_THROWS_AS(parse_config(unknown), InvalidArgument);
  std::istringstream no_equals("interval 8\n");
  CHECK_THROWS_AS(parse_config(no_equals), InvalidArgument);
  std::istringstream bad_value("interval = eight\n");
  CHECK_THROWS_AS(parse_config(bad_value), InvalidArgument);
  std::istringstream bad_penalty("rho_growth = 0.5\n");
  CHECK_THROWS_AS(parse_config(bad_penalty), InvalidArgument);
  CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), InvalidArgument);
}

TEST_CASE("scheme names") {
  for (SchemeId id : all_schemes()) CHECK(parse_scheme(to_string(id)) == id);
  CHECK_FALSE(parse_scheme("otgm").has_value());
}

TEST_CASE("static and fixed-duration schemes") {
  const RunConfig c = quick_config();
  const Scenario s = c.scenario();
  const TradeoffReport st = run_scheme(s, SchemeId::Static, c);
  CHECK(st.best_t_mov == 0.0);
  CHECK(st.best_throughput == doctest::Approx(s.interval() * achievable_rate(s, s.initial())));
  const TradeoffReport fmd = run_scheme(s, SchemeId::FMDOAD, c);
  CHECK(fmd.best_t_mov == doctest::Approx(0.2 * s.interval()));
  CHECK(fmd.best_throughput == doctest::Approx(0.8 * s.interval() * fmd.best_rate));
}

TEST_CASE("scheme dominance on the reference scenario") {
  const RunConfig c = quick_config();
  const Scenario s = c.scenario();
  const double ub = run_scheme(s, SchemeId::UpperBound, c).best_throughput;
  const double otgm = run_scheme(s, SchemeId::OTGM, c).best_throughput;
  const double otfm = run_scheme(s, SchemeId::OTFM, c).best_throughput;
  const double fmd = run_scheme(s, SchemeId::FMDOAD, c).best_throughput;
  const double st = run_scheme(s, SchemeId::Static, c).best_throughput;
  CHECK(ub >= otgm - 1e-6);
  CHECK(ub >= otfm - 1e-6);
  CHECK(otgm >= st - 1e-9);
  // 0.2 T = 1.6 s lies on the 0.4 s grid.
  CHECK(otgm >= fmd - 1e-9);
  CHECK(otgm > st);
}

TEST_CASE("sweep argument parsing") {
  const SweepSpec spec = parse_sweep_arg("vmax=2,6,18");
  CHECK(spec.param == SweepParam::Vmax);
  CHECK(spec.values == std::vector<double>{2.0, 6.0, 18.0});
  CHECK(spec.schemes.size() == 5);
  CHECK_THROWS_AS(parse_sweep_arg("speed=1"), InvalidArgument);
  CHECK_THROWS_AS(parse_sweep_arg("vmax"), InvalidArgument);
  CHECK_THROWS_AS(parse_sweep_arg("vmax="), InvalidArgument);
}

TEST_CASE("per-value configs") {
  const RunConfig base = default_config();
  const RunConfig region = config_for(base, SweepParam::RegionL, 4.0);
  CHECK(region.region == 4.0);
  CHECK(region.initial_x.front() == doctest::Approx(1.0));
  CHECK(region.initial_x.back() == doctest::Approx(3.0));
  CHECK_NOTHROW(region.scenario());

  RunConfig small = base;
  small.region = 4.0;
  for (int n : {4, 5, 6}) {
    const RunConfig c = config_for(small, SweepParam::NumAntennas, n);
    REQUIRE(c.initial_x.size() == static_cast<std::size_t>(n));
    CHECK(c.initial_x[1] - c.initial_x[0] == doctest::Approx(0.5));
    CHECK(0.5 * (c.initial_x.front() + c.initial_x.back()) == doctest::Approx(2.0));
    CHECK_NOTHROW(c.scenario());
  }
  CHECK_THROWS_AS(config_for(base, SweepParam::NumAntennas, 2.5), InvalidArgument);
  CHECK(config_for(base, SweepParam::Duration, 4.0).interval == 4.0);
  CHECK(config_for(base, SweepParam::Vmax, 9.0).max_speed == 9.0);
}

TEST_CASE("sweep rows are grid-major and failures become error rows") {
  RunConfig c = quick_config();
  SweepSpec spec;
  spec.param = SweepParam::NumAntennas;
  spec.values = {3.0, 5.0};  // 3 antennas cannot serve 4 users
  spec.schemes = {SchemeId::Static, SchemeId::FMDOAD};
  const auto rows = run_sweep(c, spec);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].param == 3.0);
  CHECK(rows[0].scheme == SchemeId::Static);
  CHECK(rows[1].scheme == SchemeId::FMDOAD);
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[2].param == 5.0);
  CHECK(rows[2].error.empty());
  CHECK(rows[3].throughput > 0.0);
}

TEST_CASE("empty scheme list gives a header-only dataset") {
  SweepSpec spec = parse_sweep_arg("vmax=1,2");
  spec.schemes.clear();
  std::ostringstream os;
  write_sweep_csv(os, run_sweep(quick_config(), spec));
  CHECK(os.str() == std::string(kSweepHeader) + "\n");
}

TEST_CASE("sweep CSV round trip") {
  std::vector<SweepRow> rows{
      {2.0, SchemeId::OTGM, 0.32, 5.330744406279107, 40.51365748772121, true, {}},
      {1.0 / 3.0, SchemeId::Static, 0.0, 1e-300, 0.1 + 0.2, false, {}},
      {6.0, SchemeId::OTFM, 0.0, 0.0, 0.0, false, "SingularChannel: bad, worse\nworst"},
  };
  std::ostringstream os;
  write_sweep_csv(os, rows);
  const std::string text = os.str();
  CHECK(text.rfind("param,scheme,t_mov,rate_bps_hz,throughput_b_hz,converged,error\n", 0) == 0);
  std::istringstream in(text);
  const auto back = read_sweep_csv(in);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].param == rows[i].param);
    CHECK(back[i].scheme == rows[i].scheme);
    CHECK(back[i].t_mov == rows[i].t_mov);
    CHECK(back[i].rate == rows[i].rate);
    CHECK(back[i].throughput == rows[i].throughput);
    CHECK(back[i].converged == rows[i].converged);
  }
  CHECK(back[2].error == "SingularChannel: bad; worse worst");
  std::istringstream wrong("a,b\n");
  CHECK_THROWS_AS(read_sweep_csv(wrong), InvalidArgument);
}

TEST_CASE("shortest round-trip number format") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("threshold CSV") {
  ThresholdReport r = thresholds_from(2.0, 0.5, 8.0, 1.0);
  std::ostringstream os;
  write_threshold_csv(os, r);
  CHECK(os.str() == std::string(kThresholdHeader) + "\n2,0.5,0.5,4,move,0\n");
  std::ostringstream zs;
  write_threshold_csv(zs, thresholds_from(2.0, 0.0, 8.0, 1.0));
  CHECK(zs.str() == std::string(kThresholdHeader) + "\n2,0,,,stay,1\n");
}

TEST_CASE("threshold ordering across the four reference patterns") {
  // Clustered, partly spread, wider and well dispersed starts.
  const std::vector<std::vector<double>> xs{
      {4.5, 5.0, 5.5, 6.0, 6.5}, {3.0, 4.0, 5.0, 6.0, 7.0}, {1.0, 3.0, 5.0, 7.0, 9.0}, {0.5, 2.5, 5.0, 7.5, 9.5}};
  const std::vector<std::vector<double>> ys{
      {0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {1, 6, 2, 8, 3}, {0.5, 9.0, 4.5, 1.0, 8.5}};
  std::vector<double> v_th;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RunConfig c = default_config();
    c.initial_x = xs[i];
    c.initial_y = ys[i];
    v_th.push_back(speed_threshold(c.scenario()).v_th);
  }
  CHECK(v_th[0] == *std::min_element(v_th.begin(), v_th.end()));
}

TEST_CASE("single-antenna single-user scenario is stationary") {
  RunConfig c = default_config();
  c.elevation = {0.3};
  c.azimuth = {0.2};
  c.initial_x = {5.0};
  c.initial_y = {5.0};
  const ThresholdReport r = speed_threshold(c.scenario());
  CHECK(r.zero_gradient);
  CHECK(r.decision == MoveDecision::Stay);
}

TEST_CASE("special case CSV") {
  const std::vector<double> speeds{0.1, 0.5};
  std::ostringstream os;
  write_special_case_csv(os, SpecialCase::P31, verify_threshold(SpecialCase::P31, speeds));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == kSpecialCaseHeader);
  std::getline(in, line);
  CHECK(line.rfind("P31,0.1,0,", 0) == 0);
}

TEST_CASE("validation suite passes on the reference scenario") {
  const RunConfig c = quick_config();
  for (const CheckResult& r : validate_scenario(c.scenario(), c)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("sweeps are deterministic across worker counts") {
  RunConfig c = quick_config();
  const SweepSpec spec = parse_sweep_arg("vmax=1,4");
  std::ostringstream one;
  write_sweep_csv(one, run_sweep(c, spec));
  c.search.workers = 3;
  std::ostringstream three;
  write_sweep_csv(three, run_sweep(c, spec));
  CHECK(one.str() == three.str());
}
