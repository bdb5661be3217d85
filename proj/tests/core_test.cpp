#include <cmath>
#include <random>
#include <thread>

#include "collinear/core.hpp"
#include "doctest.h"

using namespace collinear;

TEST_CASE("p1_feasible: constraint examples") {
  const PointSequence pts({0, 1, 3});
  CHECK(p1_feasible(pts, std::vector<double>{1, 0, 2}));
  CHECK_FALSE(p1_feasible(pts, std::vector<double>{1, 0.5, 2}));
  CHECK_FALSE(p1_feasible(PointSequence({0, 1, 2, 2.5}), std::vector<double>{1, 0, 1, 0}));
  CHECK_FALSE(p1_feasible(pts, std::vector<double>{-0.1, 0, 0}));
  CHECK_THROWS_AS(p1_feasible(pts, std::vector<double>{1, 0}), UsageError);
}

TEST_CASE("p1_feasible is monotone under shrinking radii") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<double> xs(n);
    double x = 0;
    for (auto& v : xs) v = (x += 0.1 + u(rng));
    const PointSequence pts(xs);
    // A feasible start: split each gap's budget among its two ends.
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double cap = 1e9;
      if (i > 0) cap = std::min(cap, pts.gap(i - 1) / 2);
      if (i + 1 < n) cap = std::min(cap, pts.gap(i) / 2);
      r[i] = cap * u(rng);
    }
    REQUIRE(p1_feasible(pts, r));
    const std::size_t k = rng() % n;
    r[k] *= u(rng);
    CHECK(p1_feasible(pts, r));
  }
}

TEST_CASE("p2_feasible: coverage examples") {
  const RoleTaggedPoints two({{0, Role::Server}, {1, Role::Client}});
  CHECK(p2_feasible(two, std::vector<double>{1}));
  CHECK_FALSE(p2_feasible(two, std::vector<double>{0.5}));
  const RoleTaggedPoints four(
      {{0, Role::Server}, {1, Role::Client}, {5, Role::Client}, {6, Role::Server}});
  CHECK(p2_feasible(four, std::vector<double>{1, 1}));
  CHECK_FALSE(p2_feasible(four, std::vector<double>{1, 0.9}));
  CHECK_THROWS_AS(p2_feasible(four, std::vector<double>{1}), UsageError);
}

TEST_CASE("p3_feasible: coverage and containment") {
  const PointSequence two({0, 1});
  CHECK(p3_feasible(two, std::vector<Disk>{{0.25, 0.25}, {0.75, 0.25}}));
  CHECK_FALSE(p3_feasible(two, std::vector<Disk>{{0.25, 0.25}, {0.8, 0.2}}));
  CHECK(p3_feasible(PointSequence({0, 0.1, 1}),
                    std::vector<Disk>{{0.05, 0.05}, {0.325, 0.225}, {0.775, 0.225}}));
  // Covers the interval, but disk 0 misses its point.
  CHECK_FALSE(p3_feasible(two, std::vector<Disk>{{0.75, 0.25}, {0.25, 0.25}}));
  CHECK(p3_feasible(PointSequence({4}), std::vector<Disk>{{4, 0}}));
  CHECK_THROWS_AS(p3_feasible(two, std::vector<Disk>{{0.5, 0.5}}), UsageError);
}

TEST_CASE("cost functions") {
  CHECK(alpha_cost(std::vector<double>{1, 0, 2}) == 5.0);
  CHECK(alpha_cost(std::vector<double>{}) == 0.0);
  CHECK(alpha_cost(std::vector<double>{0.5, 0.5}) == 0.5);
  CHECK(sum_cost(std::vector<double>{0.5, 0.5}) == 1.0);
  CHECK(alpha_cost(std::vector<Disk>{{0, 0.5}, {1, 0.5}}) == 0.5);
}

TEST_CASE("tolerance policy") {
  const Tolerance tol;
  CHECK(tol.equal(1.0, 1.0 + 5e-10));
  CHECK_FALSE(tol.equal(1.0, 1.0 + 1e-8));
  CHECK(tol.equal(1e6, 1e6 * (1 + 5e-10)));  // relative part scales
  CHECK(tol.less_equal(1.0 + 5e-10, 1.0));
  CHECK_FALSE(tol.less_equal(1.01, 1.0));
  CHECK(tol.equal(kInfinity, kInfinity));
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(PointSequence({}), ValidationError);
  CHECK_THROWS_AS(PointSequence({0, 1, 1}), ValidationError);
  CHECK_THROWS_AS(PointSequence({0, 2, 1}), ValidationError);
  CHECK_THROWS_AS(PointSequence({0, NAN}), ValidationError);
  CHECK_THROWS_AS(PointSequence({0, INFINITY}), ValidationError);

  CHECK_NOTHROW(RoleTaggedPoints({{0, Role::Client}, {0, Role::Server}}));
  CHECK_THROWS_AS(RoleTaggedPoints({{0, Role::Server}, {0, Role::Client}}), ValidationError);
  CHECK_THROWS_AS(RoleTaggedPoints({{0, Role::Client}, {0, Role::Client}}), ValidationError);
  CHECK_THROWS_AS(RoleTaggedPoints({{1, Role::Client}, {0, Role::Server}}), ValidationError);

  const RoleTaggedPoints pts({{0, Role::Server}, {1, Role::Client}, {2, Role::Server}});
  CHECK(pts.server_count() == 2);
  CHECK(pts.client_count() == 1);
  CHECK(pts.server_indices() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("predicates are deterministic across threads") {
  const PointSequence pts({0, 1, 2, 2.5, 4, 7});
  const std::vector<double> r{1, 0, 0.5, 0, 1.5, 1.5};
  const bool expected = p1_feasible(pts, r);
  std::vector<int> seen(4, -1);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        bool all = true;
        for (int k = 0; k < 1000; ++k) all = all && p1_feasible(pts, r) == expected;
        seen[t] = all ? 1 : 0;
      });
    }
  }
  for (int s : seen) CHECK(s == 1);
}
