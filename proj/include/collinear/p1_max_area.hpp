#pragma once

// Maximum-area disjoint disks centered at sorted collinear points.
//
// The solver builds a linear-size candidate set (full disks plus forward and
// backward touching chains driven by the signature sequence) and selects an
// optimal subset as a maximum-weight independent set of the induced
// intervals. All indices are 0-based.

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "collinear/core.hpp"

namespace collinear::p1 {

enum class Sign : char { Minus = '-', Plus = '+' };

/// Signature of each point: '-' for the first point, '+' for the last, and
/// for interior points '+' iff the left gap is not larger than the right gap.
/// Requires n >= 3.
std::vector<Sign> compute_signatures(const PointSequence& points);

std::vector<Sign> parse_signs(std::string_view text);
std::string to_string(std::span<const Sign> signs);

/// One (i, j) per pair of consecutive '-' positions, i < j.
using DeltaPair = std::pair<std::size_t, std::size_t>;
std::vector<DeltaPair> decompose_delta(std::span<const Sign> signs);

enum class Provenance { Full, Forward, Backward };

struct CandidateDisk {
  std::size_t center = 0;
  double radius = 0.0;
  Provenance provenance = Provenance::Full;
};

/// One full disk per point, radius = smallest adjacent gap. Zero disks are
/// implicit. Requires n >= 2.
std::vector<CandidateDisk> build_full_disks(const PointSequence& points);

enum class Direction { Forward, Backward };

/// Mirror image: negated coordinates in reverse order. Point k of the mirror
/// is point n-1-k of the original.
PointSequence mirrored(const PointSequence& points);

/// Touching chains grown leftwards from the full disk at the right end of
/// every delta pair. For Direction::Backward, `delta` must come from the
/// mirrored sequence; the returned centers are in original indexing.
std::vector<CandidateDisk> build_directional_candidates(const PointSequence& points,
                                                        std::span<const DeltaPair> delta,
                                                        Direction direction,
                                                        const Tolerance& tol = kDefaultTolerance);

/// Full, forward and backward candidates together, deduplicated. Requires n >= 3.
std::vector<CandidateDisk> build_candidate_set(const PointSequence& points,
                                               const Tolerance& tol = kDefaultTolerance);

struct WeightedInterval {
  double left = 0.0;
  double right = 0.0;
  double weight = 0.0;
  std::size_t center = 0;
};

/// Intervals [x - r, x + r] weighted r^2, sorted by right endpoint then left
/// endpoint. Zero-radius candidates are dropped.
std::vector<WeightedInterval> candidates_to_sorted_intervals(
    const PointSequence& points, std::span<const CandidateDisk> candidates,
    const Tolerance& tol = kDefaultTolerance);

struct MwisResult {
  double total_weight = 0.0;
  std::vector<std::size_t> selected;  // positions into the input, ascending
};

/// Maximum-weight set of intervals with pairwise disjoint interiors; touching
/// endpoints do not conflict. Input must be sorted by right endpoint.
MwisResult mwis_touching_allowed(std::span<const WeightedInterval> intervals,
                                 const Tolerance& tol = kDefaultTolerance);

struct Solution {
  double alpha = 0.0;
  RadiusAssignment radii;
};

/// Throws ValidationError for n == 1 (the objective is unbounded).
Solution solve(const PointSequence& points, const Tolerance& tol = kDefaultTolerance);

}  // namespace collinear::p1
