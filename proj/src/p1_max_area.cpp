#include "collinear/p1_max_area.hpp"

#include <algorithm>
#include <string>

namespace collinear::p1 {

std::vector<Sign> compute_signatures(const PointSequence& points) {
  const std::size_t n = points.size();
  if (n < 3) throw UsageError("signatures need at least three points");
  std::vector<Sign> signs(n);
  signs.front() = Sign::Minus;
  signs.back() = Sign::Plus;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    signs[i] = points.gap(i - 1) <= points.gap(i) ? Sign::Plus : Sign::Minus;
  }
  return signs;
}

std::vector<Sign> parse_signs(std::string_view text) {
  std::vector<Sign> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      out.push_back(Sign::Plus);
    } else if (c == '-') {
      out.push_back(Sign::Minus);
    } else {
      throw UsageError(std::string("invalid sign character '") + c + "'");
    }
  }
  return out;
}

std::string to_string(std::span<const Sign> signs) {
  std::string s;
  s.reserve(signs.size());
  for (Sign sg : signs) s.push_back(static_cast<char>(sg));
  return s;
}

std::vector<DeltaPair> decompose_delta(std::span<const Sign> signs) {
  std::vector<DeltaPair> out;
  bool have_prev = false;
  std::size_t prev = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != Sign::Minus) continue;
    if (have_prev) out.emplace_back(prev, k);
    prev = k;
    have_prev = true;
  }
  return out;
}

std::vector<CandidateDisk> build_full_disks(const PointSequence& points) {
  const std::size_t n = points.size();
  if (n < 2) throw UsageError("full disks need at least two points");
  std::vector<CandidateDisk> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double r;
    if (i == 0) {
      r = points.gap(0);
    } else if (i + 1 == n) {
      r = points.gap(n - 2);
    } else {
      r = std::min(points.gap(i - 1), points.gap(i));
    }
    out[i] = {i, r, Provenance::Full};
  }
  return out;
}

PointSequence mirrored(const PointSequence& points) {
  std::vector<double> ys(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) ys[k] = -points[points.size() - 1 - k];
  return PointSequence(std::move(ys));
}

namespace {

// Chain for one delta pair (i, j) in the frame where `gap(k)` is the gap to
// the right of point k.
template <typename GapFn, typename EmitFn>
void grow_chain(std::size_t i, std::size_t j, GapFn gap, const Tolerance& tol, EmitFn emit) {
  double next = gap(j);  // anchor: full disk at p_j, already a candidate
  for (std::size_t k = j; k-- > i;) {
    const double r = gap(k) - next;
    if (!tol.less_equal(0.0, r)) break;
    if (!tol.less_equal(r, next)) break;
    if (k > 0 && !tol.less_equal(r, gap(k - 1))) break;
    emit(k, std::max(r, 0.0));
    next = r;
  }
}

template <typename GapFn, typename EmitFn>
void grow_chains(std::span<const DeltaPair> delta, GapFn gap, const Tolerance& tol,
                 EmitFn emit) {
  for (auto [i, j] : delta) grow_chain(i, j, gap, tol, emit);
}

// Streams the chains of every delta pair of an n-point sequence without
// materializing signatures; same sign rule as compute_signatures.
template <typename GapFn, typename EmitFn>
void grow_all_chains(std::size_t n, GapFn gap, const Tolerance& tol, EmitFn emit) {
  std::size_t prev = 0;  // p_0 is always '-'
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (gap(k - 1) <= gap(k)) continue;  // '+'
    grow_chain(prev, k, gap, tol, emit);
    prev = k;
  }
}

}  // namespace

std::vector<CandidateDisk> build_directional_candidates(const PointSequence& points,
                                                        std::span<const DeltaPair> delta,
                                                        Direction direction,
                                                        const Tolerance& tol) {
  const std::size_t n = points.size();
  std::vector<CandidateDisk> out;
  if (direction == Direction::Forward) {
    grow_chains(
        delta, [&](std::size_t k) { return points.gap(k); }, tol,
        [&](std::size_t k, double r) { out.push_back({k, r, Provenance::Forward}); });
  } else {
    // Gap to the right of mirrored point k is the gap to the left of
    // original point n-1-k.
    grow_chains(
        delta, [&](std::size_t k) { return points.gap(n - 2 - k); }, tol,
        [&](std::size_t k, double r) {
          out.push_back({n - 1 - k, r, Provenance::Backward});
        });
  }
  return out;
}

std::vector<CandidateDisk> build_candidate_set(const PointSequence& points,
                                               const Tolerance& tol) {
  const std::size_t n = points.size();
  if (n < 3) throw UsageError("candidate set needs at least three points");

  // At most one full, one forward and one backward disk per center.
  constexpr double kNone = -1.0;
  std::vector<double> fwd(n, kNone), bwd(n, kNone);
  grow_all_chains(
      n, [&](std::size_t k) { return points.gap(k); }, tol,
      [&](std::size_t k, double r) { fwd[k] = r; });
  grow_all_chains(
      n, [&](std::size_t k) { return points.gap(n - 2 - k); }, tol,
      [&](std::size_t k, double r) { bwd[n - 1 - k] = r; });

  std::vector<CandidateDisk> out;
  out.reserve(2 * n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t first = out.size();
    auto push_unique = [&](double r, Provenance p) {
      for (std::size_t t = first; t < out.size(); ++t) {
        if (tol.equal(out[t].radius, r)) return;
      }
      out.push_back({c, r, p});
    };
    double full;
    if (c == 0) full = points.gap(0);
    else if (c + 1 == n) full = points.gap(n - 2);
    else full = std::min(points.gap(c - 1), points.gap(c));
    push_unique(full, Provenance::Full);
    if (fwd[c] != kNone) push_unique(fwd[c], Provenance::Forward);
    if (bwd[c] != kNone) push_unique(bwd[c], Provenance::Backward);
  }
  return out;
}

std::vector<WeightedInterval> candidates_to_sorted_intervals(
    const PointSequence& points, std::span<const CandidateDisk> candidates,
    const Tolerance& tol) {
  // Bucket by center (skipped when already grouped), ordering each bucket
  // by insertion. When every radius is capped by the adjacent gaps the
  // bucket order is already sorted by right endpoint; otherwise fall back to
  // a comparison sort.
  const std::size_t n = points.size();
  auto by_right = [](const WeightedInterval& a, const WeightedInterval& b) {
    return a.right < b.right || (a.right == b.right && a.left < b.left);
  };
  std::vector<WeightedInterval> out;
  out.reserve(candidates.size());
  std::size_t run = 0;  // first slot of the current center's bucket
  auto append = [&](const CandidateDisk& c) {
    if (out.size() > run && out[run].center != c.center) run = out.size();
    const double x = points[c.center];
    const WeightedInterval w{x - c.radius, x + c.radius, c.radius * c.radius, c.center};
    if (tol.equal(w.right - w.left, 0.0)) return;
    out.push_back(w);
    for (std::size_t k = out.size() - 1; k > run && by_right(out[k], out[k - 1]); --k) {
      std::swap(out[k], out[k - 1]);
    }
  };

  bool grouped = true;
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    if (candidates[t].center >= n) throw UsageError("candidate center out of range");
    if (t > 0 && candidates[t].center < candidates[t - 1].center) grouped = false;
  }
  if (grouped) {
    for (const auto& c : candidates) append(c);
  } else {
    std::vector<std::size_t> start(n + 1, 0);
    for (const auto& c : candidates) ++start[c.center + 1];
    for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
    std::vector<const CandidateDisk*> order(candidates.size());
    for (const auto& c : candidates) order[start[c.center]++] = &c;
    for (const auto* c : order) append(*c);
  }
  if (!std::is_sorted(out.begin(), out.end(), by_right)) {
    std::sort(out.begin(), out.end(), by_right);
  }
  return out;
}

MwisResult mwis_touching_allowed(std::span<const WeightedInterval> intervals,
                                 const Tolerance& tol) {
  const std::size_t m = intervals.size();
  // best[t]: optimum over the first t intervals.
  std::vector<double> best(m + 1, 0.0);
  std::vector<std::size_t> pred(m, 0);
  std::vector<bool> take(m, false);
  for (std::size_t t = 0; t < m; ++t) {
    const auto& iv = intervals[t];
    auto ends_before = [&](std::size_t s) { return tol.less_equal(intervals[s].right, iv.left); };
    // Number of intervals ending at or before iv.left (touching allowed).
    // Gallop backwards from t to bracket it, then binary search; the
    // predecessor is usually a few slots back.
    std::size_t hi = t, lo = 0;
    for (std::size_t step = 1; hi > 0; step *= 2) {
      const std::size_t probe = hi > step ? hi - step : 0;
      if (ends_before(probe)) {
        lo = probe + 1;
        break;
      }
      hi = probe;
    }
    auto it = std::upper_bound(
        intervals.begin() + lo, intervals.begin() + hi, iv.left,
        [&](double left, const WeightedInterval& other) {
          return !tol.less_equal(other.right, left);
        });
    pred[t] = static_cast<std::size_t>(it - intervals.begin());
    const double with = best[pred[t]] + iv.weight;
    if (with > best[t]) {
      best[t + 1] = with;
      take[t] = true;
    } else {
      best[t + 1] = best[t];
    }
  }

  MwisResult result;
  result.total_weight = best[m];
  for (std::size_t t = m; t > 0;) {
    if (take[t - 1]) {
      result.selected.push_back(t - 1);
      t = pred[t - 1];
    } else {
      --t;
    }
  }
  std::reverse(result.selected.begin(), result.selected.end());
  return result;
}

Solution solve(const PointSequence& points, const Tolerance& tol) {
  const std::size_t n = points.size();
  if (n == 1) {
    throw ValidationError("unbounded objective: a single point has no radius constraint");
  }
  Solution sol;
  sol.radii.assign(n, 0.0);
  if (n == 2) {
    sol.radii[0] = points.gap(0);
    sol.alpha = alpha_cost(sol.radii);
    return sol;
  }
  const auto candidates = build_candidate_set(points, tol);
  const auto intervals = candidates_to_sorted_intervals(points, candidates, tol);
  const auto chosen = mwis_touching_allowed(intervals, tol);
  for (std::size_t t : chosen.selected) {
    const auto& iv = intervals[t];
    sol.radii[iv.center] = std::max(sol.radii[iv.center], 0.5 * (iv.right - iv.left));
  }
  sol.alpha = alpha_cost(sol.radii);
  return sol;
}

}  // namespace collinear::p1
