#pragma once

// JSON instance files and result records.
//
// Instance:  {"problem": "p2", "points": [0, 1, 5, 6],
//             "roles": ["s", "c", "c", "s"], "metadata": {...}}
// Result:    {"problem": "p1", "n": 3, "cost": 5.0 | "infeasible",
//             "radii": [...], "wall_time_ns": 1234, "algorithm": "p1-linear",
//             "verification": "feasible"}

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collinear/core.hpp"
#include "json.hpp"

namespace collinear::cli {

enum class Problem { P1, P2, P3 };

std::string_view to_string(Problem p);
Problem parse_problem(std::string_view text);  // throws ValidationError

struct InstanceFile {
  Problem problem = Problem::P1;
  std::vector<double> points;
  std::optional<std::vector<Role>> roles;
  nlohmann::json metadata = nlohmann::json::object();

  bool operator==(const InstanceFile&) const = default;

  /// Sort points (and roles alongside), clients before servers on ties.
  void sort_points();
  PointSequence point_sequence() const;
  RoleTaggedPoints role_tagged() const;
};

/// Throws ValidationError on malformed documents or inconsistent lengths.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& instance);

InstanceFile read_instance_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

struct ResultRecord {
  Problem problem = Problem::P1;
  std::size_t n = 0;
  std::optional<double> cost;  // nullopt: infeasible
  std::optional<std::vector<double>> radii;
  std::int64_t wall_time_ns = 0;
  std::string algorithm;
  std::string verification;

  bool operator==(const ResultRecord&) const = default;
};

nlohmann::json to_json(const ResultRecord& record);
ResultRecord result_from_json(const nlohmann::json& j);

}  // namespace collinear::cli
