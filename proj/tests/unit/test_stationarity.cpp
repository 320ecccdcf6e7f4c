#include "fixtures.hpp"

#include "mamove/channel.hpp"
#include "mamove/errors.hpp"
#include "mamove/gradients.hpp"
#include "mamove/harness/config.hpp"
#include "mamove/stationarity.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace mamove;

TEST_CASE("threshold formulas") {
  const ThresholdReport r = thresholds_from(2.0, 0.5, 8.0, 1.0);
  CHECK(r.v_th == doctest::Approx(0.5));
  CHECK(r.t_th == doctest::Approx(4.0));
  CHECK(r.decision == MoveDecision::Move);
  CHECK(thresholds_from(2.0, 0.5, 8.0, 0.5).decision == MoveDecision::Stay);
  CHECK(thresholds_from(2.0, 0.5, 8.0, 0.0).t_th == std::numeric_limits<double>::infinity());
  const ThresholdReport z = thresholds_from(2.0, 0.0, 8.0, 1.0);
  CHECK(z.zero_gradient);
  CHECK(z.decision == MoveDecision::Stay);
  CHECK(z.v_th == std::numeric_limits<double>::infinity());
}

TEST_CASE("speed and time thresholds are consistent") {
  const Scenario s = harness::default_config().scenario();
  const ThresholdReport r = speed_threshold(s);
  CHECK(r.initial_rate == doctest::Approx(achievable_rate(s, s.initial())));
  CHECK(r.gradient_norm_sum == doctest::Approx(grad_rate(s, s.initial()).norm_sum()));
  CHECK(time_threshold(s) == doctest::Approx(r.v_th * s.interval() / s.max_speed()));
}

TEST_CASE("special case thresholds") {
  // Case i: R0 = log2(1.5), |dR/dDelta| = pi / (12 ln 2), two antennas, T = 5.
  const double vi = std::log2(1.5) / (5.0 * 2.0 * std::numbers::pi / (12.0 * std::numbers::ln2));
  CHECK(special_case_speed_threshold(SpecialCase::P31) == doctest::Approx(vi).epsilon(1e-12));
  CHECK(vi == doctest::Approx(0.1548).epsilon(1e-3));
  CHECK(special_case_speed_threshold(SpecialCase::P32) == doctest::Approx(0.02581).epsilon(1e-2));
}

TEST_CASE("closed-form and full-model thresholds agree") {
  for (SpecialCase c : {SpecialCase::P31, SpecialCase::P32}) {
    const ThresholdReport r = speed_threshold(special_case_scenario(c));
    CHECK(r.v_th == doctest::Approx(special_case_speed_threshold(c)).epsilon(1e-9));
  }
}

TEST_CASE("stationary start") {
  std::mt19937_64 rng(61);
  const Scenario s = mamove::test::random_scenario(rng, 3, 1, Topology::Square2D);
  const ThresholdReport r = speed_threshold(s);
  CHECK(r.zero_gradient);
  CHECK(r.decision == MoveDecision::Stay);
  CHECK_THROWS_AS(time_threshold(s), ZeroGradient);
}

TEST_CASE("time threshold needs a positive speed") {
  const Scenario s = special_case_scenario(SpecialCase::P31, 0.0);
  CHECK_THROWS_AS(time_threshold(s), InvalidArgument);
}

TEST_CASE("special case rate and throughput") {
  CHECK(special_case_rate(4.0, 6.0, std::numbers::pi / 4, 1.0) == doctest::Approx(std::log2(1.5)));
  CHECK(special_case_rate(0.0, 4.0, std::numbers::pi / 4, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(special_case_rate(0.0, 1.0, 0.0, 1.0), InvalidArgument);
  const SpecialCaseParams p = special_case_params(SpecialCase::P31);
  CHECK(p.t_mov_max == doctest::Approx(2.0));
  CHECK(special_case_params(SpecialCase::P32).t_mov_max == doctest::Approx(3.5));
  CHECK(special_case_objective(SpecialCase::P31, 2.0) == doctest::Approx(3.0));
  CHECK_THROWS_AS(special_case_objective(SpecialCase::P31, 2.5), InvalidArgument);
  // Past the optimum spacing the rate stays at 1.
  CHECK(special_case_throughput(SpecialCase::P31, 0.5, 3.0) == doctest::Approx(2.0));
}

TEST_CASE("grid maximizers switch from staying to moving at the threshold") {
  for (SpecialCase c : {SpecialCase::P31, SpecialCase::P32}) {
    const double v_th = special_case_speed_threshold(c);
    const std::vector<double> speeds{0.5 * v_th, v_th, v_th + 0.01, 0.5, 1.0};
    const auto pts = verify_threshold(c, speeds);
    REQUIRE(pts.size() == speeds.size());
    CHECK(pts[0].t_star == 0.0);
    CHECK(pts[1].t_star == 0.0);
    CHECK(pts[2].t_star > 0.0);
    // Faster antennas reach the optimum spacing sooner.
    CHECK(pts[4].t_star <= pts[3].t_star);
  }
}

TEST_CASE("grid maximizer matches a dense independent scan") {
  for (SpecialCase c : {SpecialCase::P31, SpecialCase::P32}) {
    for (double v : {0.2, 0.5}) {
      const SpecialCaseParams p = special_case_params(c);
      double best = -1.0;
      double best_t = 0.0;
      for (int i = 0; i < 50000; ++i) {
        const double t = i * 1e-4;
        const double gap = std::min(p.initial_spacing + 2 * v * t, 4.0);
        const double s = std::sin(std::numbers::pi / 8 * gap);
        const double val = (5.0 - t) * std::log2(1.0 + s * s);
        if (val > best) {
          best = val;
          best_t = t;
        }
      }
      const std::vector<double> speeds{v};
      CHECK(verify_threshold(c, speeds)[0].t_star == doctest::Approx(best_t).epsilon(1e-9));
    }
  }
}

TEST_CASE("special case scenario") {
  const Scenario s = special_case_scenario(SpecialCase::P32, 0.3);
  CHECK(s.max_speed() == 0.3);
  CHECK(s.initial()[1].x() - s.initial()[0].x() == doctest::Approx(0.5));
  CHECK(2.0 * std::numbers::pi * (s.direction(1).x() - s.direction(0).x()) == doctest::Approx(std::numbers::pi / 4));
}
