#include "collinear/p3_interval_cover.hpp"

#include <algorithm>
#include <array>

namespace collinear::p3 {

namespace {

double diameter_slack(const Tolerance& tol, double d) { return tol.eps_abs + tol.eps_rel * d; }

double unit_cost(std::size_t count, double length) {
  const double r = 0.5 * length / static_cast<double>(count);
  return static_cast<double>(count) * r * r;
}

}  // namespace

UnitCoverResult unit_cover_eval(double x_left, double x_right, std::span<const double> assigned,
                                const Tolerance& tol) {
  if (!std::is_sorted(assigned.begin(), assigned.end())) {
    throw UsageError("assigned points must be sorted");
  }
  const std::size_t count = assigned.size();
  if (count == 0) {
    if (tol.equal(x_left, x_right)) return {true, 0.0};
    return {};
  }
  const double d = (x_right - x_left) / static_cast<double>(count);
  const double slack = diameter_slack(tol, d);
  for (std::size_t m = 1; m <= count; ++m) {
    const double offset = assigned[m - 1] - x_left;
    const double md = static_cast<double>(m);
    if (offset > md * (d + slack)) return {};
    if ((md - 1.0) * (d - slack) > offset) return {};
  }
  return {true, unit_cost(count, x_right - x_left)};
}

void UnitCoverState::append(double x_left, double q) {
  ++count;
  const double offset = q - x_left;
  max_ratio = std::max(max_ratio, offset / static_cast<double>(count));
  if (count >= 2) min_ratio = std::min(min_ratio, offset / static_cast<double>(count - 1));
}

bool UnitCoverState::valid(double x_left, double x_right, const Tolerance& tol) const {
  if (count == 0) return tol.equal(x_left, x_right);
  const double d = (x_right - x_left) / static_cast<double>(count);
  const double slack = diameter_slack(tol, d);
  return max_ratio <= d + slack && d - slack <= min_ratio;
}

double UnitCoverState::cost(double x_left, double x_right) const {
  if (count == 0) return 0.0;
  return unit_cost(count, x_right - x_left);
}

UnitCoverState unit_state_append(UnitCoverState state, double x_left, double q) {
  state.append(x_left, q);
  return state;
}

UnitCoverResult segment_unit_cover(const PointSequence& points, std::size_t i, std::size_t j,
                                   bool include_left, bool include_right, const Tolerance& tol) {
  if (!(i < j && j < points.size())) throw UsageError("segment indices out of range");
  const auto xs = points.coords();
  const std::size_t first = include_left ? i : i + 1;
  const std::size_t last = include_right ? j + 1 : j;  // exclusive
  if (first >= last) return unit_cover_eval(xs[i], xs[j], {}, tol);
  return unit_cover_eval(xs[i], xs[j], xs.subspan(first, last - first), tol);
}

Solution solve_quadratic(const PointSequence& points, const Tolerance& tol) {
  const std::size_t n = points.size();
  if (n == 1) return {0.0, {Disk{points[0], 0.0}}};

  struct Choice {
    std::size_t i = 0;      // 0: whole prefix is one unit cover
    bool left_in = true;    // whether p_i belongs to the last segment
  };
  std::vector<std::array<double, 2>> best(n, {kInfinity, kInfinity});
  std::vector<std::array<Choice, 2>> choice(n);
  best[0] = {0.0, 0.0};

  // states[i][1] holds p_i, states[i][0] does not; both absorb p_{i+1..}.
  std::vector<std::array<UnitCoverState, 2>> states(n);

  for (std::size_t j = 1; j < n; ++j) {
    const double xj = points[j];
    states[j - 1][1].append(points[j - 1], points[j - 1]);

    std::array<double, 2> value = {kInfinity, kInfinity};
    std::array<Choice, 2> pick{};
    auto consider = [&](int right_in, std::size_t i, bool left_in, double prefix_cost,
                        const UnitCoverState& st) {
      if (prefix_cost == kInfinity || !st.valid(points[i], xj, tol)) return;
      const double v = prefix_cost + st.cost(points[i], xj);
      if (v < value[right_in]) {
        value[right_in] = v;
        pick[right_in] = {i, left_in};
      }
    };

    for (std::size_t i = 0; i < j; ++i) {
      auto& st = states[i];
      const double xi = points[i];
      // Points absorbed so far end at p_{j-1}: these answer j' = 0.
      if (i == 0) {
        consider(0, 0, true, 0.0, st[1]);
      } else {
        consider(0, i, false, best[i][1], st[0]);
        consider(0, i, true, best[i][0], st[1]);
      }
      st[0].append(xi, xj);
      st[1].append(xi, xj);
      if (i == 0) {
        consider(1, 0, true, 0.0, st[1]);
      } else {
        consider(1, i, false, best[i][1], st[0]);
        consider(1, i, true, best[i][0], st[1]);
      }
    }
    best[j] = value;
    choice[j] = pick;
  }

  Solution sol;
  sol.cost = best[n - 1][1];
  sol.disks.assign(n, Disk{});
  std::size_t j = n - 1;
  int right_in = 1;
  while (true) {
    const Choice ch = choice[j][right_in];
    const std::size_t i = ch.i;
    const std::size_t first = ch.left_in ? i : i + 1;
    const std::size_t last = right_in ? j : j - 1;  // inclusive
    const std::size_t count = last - first + 1;
    const double d = (points[j] - points[i]) / static_cast<double>(count);
    for (std::size_t m = 0; m < count; ++m) {
      sol.disks[first + m] = {points[i] + (static_cast<double>(m) + 0.5) * d, 0.5 * d};
    }
    if (i == 0) break;
    right_in = ch.left_in ? 0 : 1;
    j = i;
  }
  return sol;
}

double solve_cubic(const PointSequence& points, const Tolerance& tol) {
  const std::size_t n = points.size();
  if (n == 1) return 0.0;

  // Two copies of the table so the split loop reads both operands with unit
  // stride: by_left[i][k] = T(i, k, ., .), by_right[j][k] = T(k, j, ., .).
  // Four variants per entry, indexed 2 * left_in + right_in.
  std::vector<double> by_left(n * n * 4, kInfinity);
  std::vector<double> by_right(n * n * 4, kInfinity);
  auto at = [n](std::vector<double>& t, std::size_t row, std::size_t col) {
    return t.data() + (row * n + col) * 4;
  };

  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t i = 0; i + len < n; ++i) {
      const std::size_t j = i + len;
      std::array<double, 4> value;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const std::size_t count = (len - 1) + a + b;
          double v = kInfinity;
          if (count == 1) {
            const double r = 0.5 * (points[j] - points[i]);
            v = r * r;
          } else if (count > 1) {
            const auto unit = segment_unit_cover(points, i, j, a, b, tol);
            if (unit.valid) {
              v = unit.cost;
            } else {
              const double* left = at(by_left, i, 0);
              const double* right = at(by_right, j, 0);
              for (std::size_t k = i + 1; k < j; ++k) {
                const double* lk = left + k * 4;
                const double* rk = right + k * 4;
                // p_k goes to the left part or to the right part.
                const double to_left = lk[2 * a + 1] + rk[0 + b];
                const double to_right = lk[2 * a + 0] + rk[2 + b];
                v = std::min(v, std::min(to_left, to_right));
              }
            }
          }
          value[2 * a + b] = v;
        }
      }
      std::copy(value.begin(), value.end(), at(by_left, i, j));
      std::copy(value.begin(), value.end(), at(by_right, j, i));
    }
  }
  return at(by_left, 0, n - 1)[3];
}

}  // namespace collinear::p3
