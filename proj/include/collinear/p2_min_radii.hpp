#pragma once

// Minimum sum of radii for server-centered disks covering every client.
//
// Prefix dynamic program: T[k] is the optimal cost for the first k points.
// The disk covering the rightmost client of a prefix is chosen from a pruned
// candidate set of at most k-1 disks, and the rest of the prefix reduces to
// the points left of that disk.

#include <cstddef>
#include <vector>

#include "collinear/core.hpp"

namespace collinear::p2 {

/// Disk centered at `server` with the client `boundary` on its boundary.
/// `psi` is the index of the leftmost point of the prefix inside the disk.
struct CoverCandidate {
  std::size_t server = 0;
  std::size_t boundary = 0;
  double radius = 0.0;
  std::size_t psi = 0;
  int phase = 1;
};

/// Candidates for the prefix of the first `k` points (k >= 1). The prefix
/// must hold at least one client and two servers.
std::vector<CoverCandidate> build_candidates(const RoleTaggedPoints& points, std::size_t k,
                                             const Tolerance& tol = kDefaultTolerance);

struct PrefixTable {
  std::vector<double> cost;  // size n+1, cost[0] = 0
  std::vector<CoverCandidate> choice;
};

struct Solution {
  double cost = 0.0;
  /// One radius per server, ordered like RoleTaggedPoints::server_indices().
  std::vector<double> server_radii;
  /// Disks used by the reconstruction, right to left.
  std::vector<CoverCandidate> cover;
  PrefixTable table;
};

/// Throws InfeasibleError when some client cannot be covered (no servers).
Solution solve(const RoleTaggedPoints& points, const Tolerance& tol = kDefaultTolerance);

}  // namespace collinear::p2
