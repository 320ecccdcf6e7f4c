#include "mamove/errors.hpp"
#include "mamove/placement.hpp"

#include <doctest.h>

#include <random>

using namespace mamove;

TEST_CASE("already separated anchors are returned as is") {
  const Deployment d = Deployment::from_x(std::vector<double>{1.0, 2.0, 3.0});
  const AnchorResult r = separate_anchors(d, 0.5, 10.0, Topology::Segment1D);
  CHECK(r.satisfied);
  CHECK(r.sweeps == 1);
  CHECK(r.anchors == d);
}

TEST_CASE("a close pair is pushed apart symmetrically") {
  const Deployment d = Deployment::from_x(std::vector<double>{4.9, 5.1});
  const AnchorResult r = separate_anchors(d, 0.5, 10.0, Topology::Segment1D);
  CHECK(r.satisfied);
  CHECK(r.anchors[0].x() == doctest::Approx(4.75));
  CHECK(r.anchors[1].x() == doctest::Approx(5.25));
}

TEST_CASE("coincident points split along +x") {
  const Deployment d = Deployment::from_xy(std::vector<double>{3.0, 3.0}, std::vector<double>{4.0, 4.0});
  const AnchorResult r = separate_anchors(d, 1.0, 10.0, Topology::Square2D);
  CHECK(r.anchors[0].x() == doctest::Approx(2.5));
  CHECK(r.anchors[1].x() == doctest::Approx(3.5));
  CHECK(r.anchors[0].y() == doctest::Approx(4.0));
}

TEST_CASE("a wall absorbs part of the push and the partner takes the rest") {
  const Deployment d = Deployment::from_x(std::vector<double>{0.0, 0.1});
  const AnchorResult r = separate_anchors(d, 0.5, 10.0, Topology::Segment1D);
  CHECK(r.satisfied);
  CHECK(r.anchors[0].x() == doctest::Approx(0.0));
  CHECK(r.anchors[1].x() == doctest::Approx(0.5));
}

TEST_CASE("too many antennas for the region") {
  const Deployment d = Deployment::from_x(std::vector<double>{0.0, 0.1, 0.2, 0.3});
  CHECK_THROWS_AS(separate_anchors(d, 0.5, 1.0, Topology::Segment1D), InfeasibleSpacing);
}

TEST_CASE("random clusters end up feasible inside the region") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(4.0, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Topology topo = trial % 2 ? Topology::Square2D : Topology::Segment1D;
    const int n = 2 + trial % 6;
    std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      xs[static_cast<std::size_t>(i)] = u(rng);
      if (topo == Topology::Square2D) ys[static_cast<std::size_t>(i)] = u(rng);
    }
    const Deployment d = Deployment::from_xy(xs, ys);
    const AnchorResult r = separate_anchors(d, 0.5, 10.0, topo);
    REQUIRE(r.satisfied);
    CHECK(r.anchors.min_pairwise_distance() >= 0.5 - 1e-9);
    for (std::size_t i = 0; i < r.anchors.size(); ++i) {
      CHECK(r.anchors[i].x() >= 0.0);
      CHECK(r.anchors[i].x() <= 10.0);
      if (topo == Topology::Segment1D) CHECK(r.anchors[i].y() == 0.0);
    }
  }
}

TEST_CASE("displacement stays comparable to the best of random feasible repairs") {
  // Random repairs: jitter the cluster, separate, keep the cheapest. The
  // sweep result should not be far off the cheapest found.
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(4.5, 5.5);
  std::normal_distribution<double> jitter(0.0, 0.2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> xs(4), ys(4);
    for (int i = 0; i < 4; ++i) {
      xs[static_cast<std::size_t>(i)] = u(rng);
      ys[static_cast<std::size_t>(i)] = u(rng);
    }
    const Deployment d = Deployment::from_xy(xs, ys);
    const double ours = (separate_anchors(d, 0.5, 10.0, Topology::Square2D).anchors.matrix() - d.matrix()).squaredNorm();
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 300; ++k) {
      Deployment start = d;
      for (int i = 0; i < 4; ++i) start.set(static_cast<std::size_t>(i), d[static_cast<std::size_t>(i)] + Eigen::Vector2d(jitter(rng), jitter(rng)));
      const Deployment z = separate_anchors(start, 0.5, 10.0, Topology::Square2D).anchors;
      best = std::min(best, (z.matrix() - d.matrix()).squaredNorm());
    }
    CHECK(ours <= 4.0 * best + 1e-12);
  }
}
