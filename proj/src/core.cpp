#include "collinear/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace collinear {

PointSequence::PointSequence(std::vector<double> xs) : xs_(std::move(xs)) {
  if (xs_.empty()) throw ValidationError("point sequence is empty");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i])) {
      throw ValidationError("coordinate " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(xs_[i - 1] < xs_[i])) {
      throw ValidationError("coordinates must be strictly increasing (index " +
                            std::to_string(i) + ")");
    }
  }
}

RoleTaggedPoints::RoleTaggedPoints(std::vector<TaggedPoint> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!std::isfinite(e.x)) {
      throw ValidationError("coordinate " + std::to_string(i) + " is not finite");
    }
    if (e.role == Role::Server) ++server_count_;
    if (i == 0) continue;
    const auto& prev = entries_[i - 1];
    if (prev.x > e.x) {
      throw ValidationError("coordinates must be sorted (index " + std::to_string(i) + ")");
    }
    if (prev.x == e.x && !(prev.role == Role::Client && e.role == Role::Server)) {
      throw ValidationError(
          "equal coordinates are only allowed for a client followed by a server (index " +
          std::to_string(i) + ")");
    }
  }
}

std::vector<std::size_t> RoleTaggedPoints::server_indices() const {
  std::vector<std::size_t> out;
  out.reserve(server_count_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].role == Role::Server) out.push_back(i);
  }
  return out;
}

bool p1_feasible(const PointSequence& points, std::span<const double> radii,
                 const Tolerance& tol) {
  if (radii.size() != points.size()) {
    throw UsageError("radius count does not match point count");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!tol.less_equal(0.0, radii[i])) return false;
    if (i + 1 < radii.size() && !tol.less_equal(radii[i] + radii[i + 1], points.gap(i))) {
      return false;
    }
  }
  return true;
}

bool p2_feasible(const RoleTaggedPoints& points, std::span<const double> server_radii,
                 const Tolerance& tol) {
  const auto servers = points.server_indices();
  if (server_radii.size() != servers.size()) {
    throw UsageError("radius count does not match server count");
  }
  for (double r : server_radii) {
    if (!tol.less_equal(0.0, r)) return false;
  }
  for (const auto& p : points.entries()) {
    if (p.role != Role::Client) continue;
    bool covered = false;
    for (std::size_t s = 0; s < servers.size() && !covered; ++s) {
      covered = tol.less_equal(std::abs(p.x - points[servers[s]].x), server_radii[s]);
    }
    if (!covered) return false;
  }
  return true;
}

bool p3_feasible(const PointSequence& points, std::span<const Disk> disks,
                 const Tolerance& tol) {
  if (disks.size() != points.size()) {
    throw UsageError("disk count does not match point count");
  }
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (!tol.less_equal(0.0, disks[i].radius)) return false;
    if (!tol.less_equal(std::abs(disks[i].center - points[i]), disks[i].radius)) return false;
  }

  std::vector<Disk> sorted(disks.begin(), disks.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Disk& a, const Disk& b) { return a.left() < b.left(); });
  double reach = points.front();
  for (const auto& d : sorted) {
    if (d.right() <= reach) continue;
    if (!tol.less_equal(d.left(), reach)) return false;  // hole before this disk
    reach = d.right();
    if (reach >= points.back()) break;
  }
  return tol.less_equal(points.back(), reach);
}

double alpha_cost(std::span<const double> radii) {
  return std::transform_reduce(radii.begin(), radii.end(), 0.0, std::plus<>{},
                               [](double r) { return r * r; });
}

double sum_cost(std::span<const double> radii) {
  return std::accumulate(radii.begin(), radii.end(), 0.0);
}

double alpha_cost(std::span<const Disk> disks) {
  return std::transform_reduce(disks.begin(), disks.end(), 0.0, std::plus<>{},
                               [](const Disk& d) { return d.radius * d.radius; });
}

}  // namespace collinear
