#pragma once

// Brute-force reference solvers for differential testing at small n. They
// share no candidate-generation code with the main solvers.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "collinear/core.hpp"

namespace collinear::oracle {

struct Report {
  double cost = kInfinity;
  /// P1: one radius per point. P2: one radius per server. P3: one radius
  /// per point (see `disks`).
  std::vector<double> witness;
  DiskSetSolution disks;  // P3 only
  std::uint64_t explored = 0;
};

inline constexpr std::size_t kVertexOracleMaxPoints = 8;
inline constexpr std::size_t kSplitOracleMaxPoints = 12;
inline constexpr std::uint64_t kExhaustiveMaxCombinations = 1'000'000;

/// Maximum of sum r^2 over the polytope {r >= 0, r_i + r_{i+1} <= gap_i},
/// by enumerating every choice of n tight constraints. 2 <= n <= 8.
Report p1_vertex(const PointSequence& points, const Tolerance& tol = kDefaultTolerance);

/// Best sum r^2 over `trials` random feasible assignments (a lower bound on
/// the optimum).
double p1_random_feasible(const PointSequence& points, std::size_t trials, std::uint64_t seed);

/// Prefix recursion over every disk D(s, c') that covers the prefix's
/// rightmost client. Throws InfeasibleError like the main solver.
Report p2_dense(const RoleTaggedPoints& points, const Tolerance& tol = kDefaultTolerance);

/// Every combination of per-server radii from {0} U {|x_s - x_c|}.
Report p2_exhaustive(const RoleTaggedPoints& points, const Tolerance& tol = kDefaultTolerance);

/// Every subset of interior split points and every side assignment of each
/// split point, each segment covered by its unit cover. n <= 12.
Report p3_split(const PointSequence& points, const Tolerance& tol = kDefaultTolerance);

}  // namespace collinear::oracle
