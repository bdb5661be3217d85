#include "collinear/p2_min_radii.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace collinear::p2 {

namespace {

struct RoleIndex {
  std::vector<std::size_t> servers;
  std::vector<std::size_t> clients;
  std::vector<double> xs;         // all coordinates
  std::vector<double> server_xs;  // coordinates of `servers`
  // Count of servers/clients among the first k points.
  std::vector<std::size_t> servers_before;
  std::vector<std::size_t> clients_before;

  explicit RoleIndex(const RoleTaggedPoints& points) {
    const std::size_t n = points.size();
    servers_before.assign(n + 1, 0);
    clients_before.assign(n + 1, 0);
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool server = points[i].role == Role::Server;
      (server ? servers : clients).push_back(i);
      if (server) server_xs.push_back(points[i].x);
      xs.push_back(points[i].x);
      servers_before[i + 1] = servers_before[i] + (server ? 1 : 0);
      clients_before[i + 1] = clients_before[i] + (server ? 0 : 1);
    }
  }
};

// Emits the candidates for prefix k; both sweeps run right to left with
// pointers that only move left, so the whole call is O(k).
template <typename Emit>
void for_each_candidate(const RoleIndex& index, std::size_t k, const Tolerance& tol, Emit emit) {
  const std::size_t ns = index.servers_before[k];
  const std::size_t nc = index.clients_before[k];
  const std::size_t c = index.clients[nc - 1];
  const auto& xs_all = index.xs;
  const double xc = xs_all[c];

  // Phase 1: D(s, c) for every server. The left reach min(xc, 2xs - xc) is
  // monotone in xs.
  std::size_t psi = k;
  for (std::size_t t = ns; t-- > 0;) {
    const double xs = index.server_xs[t];
    const double r = std::abs(xs - xc);
    const double reach = xs - r;
    while (psi > 0 && tol.less_equal(reach, xs_all[psi - 1])) --psi;
    emit(CoverCandidate{index.servers[t], c, r, psi, 1});
  }

  // Phase 2: D(s', c') with s' the leftmost server at or right of the
  // midpoint of c' and c. The disk's left boundary is c' itself.
  std::size_t q = ns;
  for (std::size_t u = nc - 1; u-- > 0;) {
    const std::size_t cp = index.clients[u];
    const double mid = 0.5 * (xs_all[cp] + xc);
    while (q > 0 && tol.less_equal(mid, index.server_xs[q - 1])) --q;
    if (q == ns) continue;
    emit(CoverCandidate{index.servers[q], cp, index.server_xs[q] - xs_all[cp], cp, 2});
  }
}

}  // namespace

std::vector<CoverCandidate> build_candidates(const RoleTaggedPoints& points, std::size_t k,
                                             const Tolerance& tol) {
  if (k == 0 || k > points.size()) throw UsageError("prefix length out of range");
  const RoleIndex index(points);
  if (index.clients_before[k] == 0 || index.servers_before[k] < 2) {
    throw UsageError("candidate generation needs a client and two servers in the prefix");
  }
  std::vector<CoverCandidate> out;
  for_each_candidate(index, k, tol, [&](const CoverCandidate& c) { out.push_back(c); });
  return out;
}

Solution solve(const RoleTaggedPoints& points, const Tolerance& tol) {
  const std::size_t n = points.size();
  const RoleIndex index(points);

  Solution sol;
  auto& table = sol.table;
  table.cost.assign(n + 1, 0.0);
  table.choice.assign(n + 1, CoverCandidate{0, 0, 0.0, 0, -1});

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t ns = index.servers_before[k];
    const std::size_t nc = index.clients_before[k];
    if (nc == 0) {
      table.cost[k] = 0.0;
      continue;
    }
    if (ns == 0) {
      table.cost[k] = kInfinity;
      continue;
    }
    if (ns == 1) {
      // The smallest disk at the lone server reaching every client.
      const std::size_t s = index.servers[0];
      std::size_t far = index.clients[0];
      for (std::size_t u = 0; u < nc; ++u) {
        const std::size_t cl = index.clients[u];
        if (std::abs(points[cl].x - points[s].x) > std::abs(points[far].x - points[s].x)) far = cl;
      }
      const double r = std::abs(points[far].x - points[s].x);
      table.cost[k] = r;
      table.choice[k] = {s, far, r, 0, 0};
      continue;
    }
    double best = kInfinity;
    for_each_candidate(index, k, tol, [&](const CoverCandidate& cand) {
      const double v = table.cost[cand.psi] + cand.radius;
      if (v < best) {
        best = v;
        table.choice[k] = cand;
      }
    });
    table.cost[k] = best;
  }

  sol.cost = table.cost[n];
  if (std::isinf(sol.cost)) throw InfeasibleError("infeasible: clients with no servers");

  std::vector<std::size_t> ordinal(n, 0);
  for (std::size_t t = 0; t < index.servers.size(); ++t) ordinal[index.servers[t]] = t;
  sol.server_radii.assign(index.servers.size(), 0.0);

  for (std::size_t k = n; k > 0;) {
    const auto& ch = table.choice[k];
    if (ch.phase < 0) break;  // no clients left
    const double xs = points[ch.server].x;
    for (std::size_t i = ch.psi; i < k; ++i) {
      if (points[i].role == Role::Client &&
          !tol.less_equal(std::abs(points[i].x - xs), ch.radius)) {
        throw std::logic_error("reconstruction: client outside its covering disk");
      }
    }
    auto& r = sol.server_radii[ordinal[ch.server]];
    r = std::max(r, ch.radius);
    sol.cover.push_back(ch);
    k = ch.psi;
  }
  if (!tol.equal(sum_cost(sol.server_radii), sol.cost)) {
    throw std::logic_error("reconstruction: radii do not sum to the table cost");
  }
  return sol;
}

}  // namespace collinear::p2
