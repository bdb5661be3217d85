#pragma once

// Minimum-area point-interval coverage: n disks covering [p_0, p_{n-1}] where
// disk i contains point i.
//
// An optimal cover splits at input points into segments, and each segment is
// covered by equal touching disks ("unit covers"). Two dynamic programs are
// provided: a quadratic one over prefixes that answers every unit-cover
// validity query in O(1) from incrementally maintained statistics, and a
// cubic interval DP that recomputes validity from scratch. Indices are 0-based.

#include <cstddef>
#include <span>
#include <vector>

#include "collinear/core.hpp"

namespace collinear::p3 {

struct UnitCoverResult {
  bool valid = false;
  double cost = kInfinity;
};

/// Unit cover of [x_left, x_right] by assigned.size() equal disks, disk m
/// containing assigned[m]. `assigned` must be sorted.
UnitCoverResult unit_cover_eval(double x_left, double x_right, std::span<const double> assigned,
                                const Tolerance& tol = kDefaultTolerance);

/// Running extrema over the points absorbed into a segment starting at
/// x_left: max_ratio = max (q_m - x_left) / m over m >= 1, min_ratio = min
/// (q_m - x_left) / (m - 1) over m >= 2 (1-based m).
struct UnitCoverState {
  double max_ratio = 0.0;
  double min_ratio = kInfinity;
  std::size_t count = 0;

  /// O(1); q must not precede previously appended points.
  void append(double x_left, double q);
  /// Validity of the unit cover of [x_left, x_right] with `count` disks.
  bool valid(double x_left, double x_right, const Tolerance& tol = kDefaultTolerance) const;
  double cost(double x_left, double x_right) const;
};

UnitCoverState unit_state_append(UnitCoverState state, double x_left, double q);

/// Per-point disks of a solution; disks[i] contains point i.
struct Solution {
  double cost = 0.0;
  DiskSetSolution disks;
};

/// Prefix DP over T(j, j'); O(n^2) time and O(n) extra space.
Solution solve_quadratic(const PointSequence& points, const Tolerance& tol = kDefaultTolerance);

/// Interval DP over T(i, j, i', j'); O(n^3) time. Reference solver.
double solve_cubic(const PointSequence& points, const Tolerance& tol = kDefaultTolerance);

/// Cost of U(i, j, i', j'): the unit cover of [x_i, x_j] assigned points
/// p_i (iff include_left), p_{i+1..j-1}, p_j (iff include_right).
UnitCoverResult segment_unit_cover(const PointSequence& points, std::size_t i, std::size_t j,
                                   bool include_left, bool include_right,
                                   const Tolerance& tol = kDefaultTolerance);

}  // namespace collinear::p3
