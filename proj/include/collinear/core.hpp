#pragma once

// Shared domain model for the collinear range-assignment solvers: point
// containers, feasibility predicates, cost functions and the tolerance policy.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace collinear {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Malformed input: unsorted or duplicate coordinates, non-finite values,
/// and similar violations of a type invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller broke an operation precondition (length mismatch, n out of range).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance admits no feasible solution.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixed absolute/relative comparison policy used by every predicate.
struct Tolerance {
  double eps_abs = 1e-9;
  double eps_rel = 1e-9;

  double slack(double a, double b) const {
    return eps_abs + eps_rel * std::max(std::abs(a), std::abs(b));
  }
  bool equal(double a, double b) const {
    if (a == b) return true;  // also covers matching infinities
    return std::abs(a - b) <= slack(a, b);
  }
  /// a <= b up to slack.
  bool less_equal(double a, double b) const {
    if (a <= b) return true;
    return a - b <= slack(a, b);
  }
};

inline constexpr Tolerance kDefaultTolerance{};

/// Strictly increasing, finite coordinates; n >= 1.
class PointSequence {
 public:
  explicit PointSequence(std::vector<double> xs);

  std::size_t size() const { return xs_.size(); }
  double operator[](std::size_t i) const { return xs_[i]; }
  std::span<const double> coords() const { return xs_; }

  /// Gap between point i and point i+1 (0-based).
  double gap(std::size_t i) const { return xs_[i + 1] - xs_[i]; }
  double front() const { return xs_.front(); }
  double back() const { return xs_.back(); }

 private:
  std::vector<double> xs_;
};

enum class Role { Client, Server };

struct TaggedPoint {
  double x;
  Role role;

  bool operator==(const TaggedPoint&) const = default;
};

/// Clients and servers in non-decreasing coordinate order. A client and a
/// server may share a coordinate, in which case the client comes first.
class RoleTaggedPoints {
 public:
  explicit RoleTaggedPoints(std::vector<TaggedPoint> entries);

  std::size_t size() const { return entries_.size(); }
  const TaggedPoint& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const TaggedPoint> entries() const { return entries_; }

  std::size_t server_count() const { return server_count_; }
  std::size_t client_count() const { return entries_.size() - server_count_; }
  /// Indices of the servers, ascending.
  std::vector<std::size_t> server_indices() const;

 private:
  std::vector<TaggedPoint> entries_;
  std::size_t server_count_ = 0;
};

using RadiusAssignment = std::vector<double>;

struct Disk {
  double center = 0.0;
  double radius = 0.0;

  double left() const { return center - radius; }
  double right() const { return center + radius; }
};

using DiskSetSolution = std::vector<Disk>;

/// Every radius is non-negative and neighbouring radii fit inside their gap.
bool p1_feasible(const PointSequence& points, std::span<const double> radii,
                 const Tolerance& tol = kDefaultTolerance);

/// Every client lies in the closed disk of some server. `server_radii` is
/// ordered like RoleTaggedPoints::server_indices().
bool p2_feasible(const RoleTaggedPoints& points,
                 std::span<const double> server_radii,
                 const Tolerance& tol = kDefaultTolerance);

/// The disks cover [front, back] and disk i contains point i.
bool p3_feasible(const PointSequence& points, std::span<const Disk> disks,
                 const Tolerance& tol = kDefaultTolerance);

/// Sum of squared radii (total area divided by pi).
double alpha_cost(std::span<const double> radii);
double sum_cost(std::span<const double> radii);
double alpha_cost(std::span<const Disk> disks);

}  // namespace collinear
