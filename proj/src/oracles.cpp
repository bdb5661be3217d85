#include "collinear/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "collinear/p3_interval_cover.hpp"

namespace collinear::oracle {

namespace {

// Solves a * x = b in place with partial pivoting; false if singular.
bool gauss_solve(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * b[c];
    b[r] = s / a[r][r];
  }
  return true;
}

}  // namespace

Report p1_vertex(const PointSequence& points, const Tolerance& tol) {
  const std::size_t n = points.size();
  if (n < 2 || n > kVertexOracleMaxPoints) {
    throw UsageError("vertex oracle supports 2 <= n <= 8");
  }
  // Constraints 0..n-1: r_t >= 0. Constraints n..2n-2: r_i + r_{i+1} <= gap_i.
  const std::size_t m = 2 * n - 1;
  Report rep;
  rep.cost = -kInfinity;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
    ++rep.explored;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t t = 0; t < m; ++t) {
      if (!(mask & (1u << t))) continue;
      std::vector<double> row(n, 0.0);
      if (t < n) {
        row[t] = 1.0;
        b.push_back(0.0);
      } else {
        const std::size_t i = t - n;
        row[i] = row[i + 1] = 1.0;
        b.push_back(points.gap(i));
      }
      a.push_back(std::move(row));
    }
    if (!gauss_solve(a, b)) continue;
    if (!p1_feasible(points, b, tol)) continue;
    for (double& r : b) r = std::max(r, 0.0);
    const double value = alpha_cost(b);
    if (value > rep.cost) {
      rep.cost = value;
      rep.witness = b;
    }
  }
  return rep;
}

double p1_random_feasible(const PointSequence& points, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = points.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> cap(n);
  for (std::size_t i = 0; i < n; ++i) {
    double c = kInfinity;
    if (i > 0) c = std::min(c, points.gap(i - 1));
    if (i + 1 < n) c = std::min(c, points.gap(i));
    cap[i] = std::isinf(c) ? 1.0 : c;
  }
  double best = 0.0;
  std::vector<double> r(n);
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < n; ++i) r[i] = unit(rng) * cap[i];
    if (n >= 2 && !p1_feasible(points, r, Tolerance{0.0, 0.0})) continue;
    best = std::max(best, alpha_cost(r));
  }
  return best;
}

Report p2_dense(const RoleTaggedPoints& points, const Tolerance& tol) {
  const std::size_t n = points.size();
  const auto xs_of = [&](std::size_t i) { return points[i].x; };

  struct Step {
    std::size_t server = 0;
    double radius = 0.0;
    std::size_t rest = 0;  // prefix length left of the disk
    bool used = false;
  };
  std::vector<double> best(n + 1, 0.0);
  std::vector<Step> step(n + 1);
  std::uint64_t explored = 0;

  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t rightmost = SIZE_MAX;
    bool any_server = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (points[i].role == Role::Client) rightmost = i;
      else any_server = true;
    }
    if (rightmost == SIZE_MAX) {
      best[k] = 0.0;
      continue;
    }
    if (!any_server) {
      best[k] = kInfinity;
      continue;
    }
    best[k] = kInfinity;
    for (std::size_t s = 0; s < k; ++s) {
      if (points[s].role != Role::Server) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (points[c].role != Role::Client) continue;
        const double r = std::abs(xs_of(s) - xs_of(c));
        if (!tol.less_equal(std::abs(xs_of(s) - xs_of(rightmost)), r)) continue;
        ++explored;
        std::size_t leftmost = 0;
        while (!tol.less_equal(std::abs(xs_of(leftmost) - xs_of(s)), r)) ++leftmost;
        const double v = best[leftmost] + r;
        if (v < best[k]) {
          best[k] = v;
          step[k] = {s, r, leftmost, true};
        }
      }
    }
  }
  if (std::isinf(best[n])) throw InfeasibleError("infeasible: clients with no servers");

  Report rep;
  rep.cost = best[n];
  rep.explored = explored;
  const auto servers = points.server_indices();
  rep.witness.assign(servers.size(), 0.0);
  for (std::size_t k = n; k > 0 && step[k].used;) {
    const auto pos = std::lower_bound(servers.begin(), servers.end(), step[k].server);
    auto& r = rep.witness[static_cast<std::size_t>(pos - servers.begin())];
    r = std::max(r, step[k].radius);
    k = step[k].rest;
  }
  return rep;
}

Report p2_exhaustive(const RoleTaggedPoints& points, const Tolerance& tol) {
  const auto servers = points.server_indices();
  std::vector<std::vector<double>> alphabet(servers.size());
  std::uint64_t combos = 1;
  for (std::size_t t = 0; t < servers.size(); ++t) {
    alphabet[t].push_back(0.0);
    for (const auto& p : points.entries()) {
      if (p.role == Role::Client) alphabet[t].push_back(std::abs(p.x - points[servers[t]].x));
    }
    combos *= alphabet[t].size();
    if (combos > kExhaustiveMaxCombinations) {
      throw UsageError("exhaustive oracle search space too large");
    }
  }

  Report rep;
  std::vector<std::size_t> digit(servers.size(), 0);
  std::vector<double> radii(servers.size(), 0.0);
  for (std::uint64_t it = 0; it < combos; ++it) {
    for (std::size_t t = 0; t < servers.size(); ++t) radii[t] = alphabet[t][digit[t]];
    ++rep.explored;
    const double cost = sum_cost(radii);
    if (cost < rep.cost && p2_feasible(points, radii, tol)) {
      rep.cost = cost;
      rep.witness = radii;
    }
    for (std::size_t t = 0; t < servers.size(); ++t) {
      if (++digit[t] < alphabet[t].size()) break;
      digit[t] = 0;
    }
  }
  if (std::isinf(rep.cost)) throw InfeasibleError("infeasible: clients with no servers");
  return rep;
}

Report p3_split(const PointSequence& points, const Tolerance& tol) {
  const std::size_t n = points.size();
  if (n > kSplitOracleMaxPoints) throw UsageError("split oracle supports n <= 12");
  Report rep;
  if (n == 1) {
    rep.cost = 0.0;
    rep.witness = {0.0};
    rep.disks = {Disk{points[0], 0.0}};
    rep.explored = 1;
    return rep;
  }

  const std::size_t interior = n - 2;
  std::uint64_t combos = 1;
  for (std::size_t t = 0; t < interior; ++t) combos *= 3;

  // Digit per interior point: 0 no split, 1 split with the point on the
  // left segment, 2 split with the point on the right segment.
  std::vector<int> digit(interior, 0);
  for (std::uint64_t it = 0; it < combos; ++it) {
    ++rep.explored;
    double total = 0.0;
    DiskSetSolution disks(n);
    std::size_t seg_start = 0;
    bool start_in = true;
    for (std::size_t k = 1; k < n && total < kInfinity; ++k) {
      const bool is_split = k == n - 1 || digit[k - 1] != 0;
      if (!is_split) continue;
      const bool end_in = k == n - 1 || digit[k - 1] == 1;
      std::vector<double> assigned;
      std::vector<std::size_t> owners;
      for (std::size_t t = seg_start; t <= k; ++t) {
        if (t == seg_start && !start_in) continue;
        if (t == k && !end_in) continue;
        assigned.push_back(points[t]);
        owners.push_back(t);
      }
      const auto unit = p3::unit_cover_eval(points[seg_start], points[k], assigned, tol);
      if (!unit.valid) {
        total = kInfinity;
        break;
      }
      total += unit.cost;
      const double d = (points[k] - points[seg_start]) / static_cast<double>(owners.size());
      for (std::size_t m = 0; m < owners.size(); ++m) {
        disks[owners[m]] = {points[seg_start] + (static_cast<double>(m) + 0.5) * d, 0.5 * d};
      }
      seg_start = k;
      start_in = !end_in;
    }
    if (total < rep.cost) {
      rep.cost = total;
      rep.disks = disks;
    }
    for (std::size_t t = 0; t < interior; ++t) {
      if (++digit[t] < 3) break;
      digit[t] = 0;
    }
  }
  rep.witness.clear();
  for (const auto& d : rep.disks) rep.witness.push_back(d.radius);
  return rep;
}

}  // namespace collinear::oracle
