#include "collinear/cli/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace collinear::cli {

using nlohmann::json;

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::P1: return "p1";
    case Problem::P2: return "p2";
    case Problem::P3: return "p3";
  }
  return "?";
}

Problem parse_problem(std::string_view text) {
  if (text == "p1") return Problem::P1;
  if (text == "p2") return Problem::P2;
  if (text == "p3") return Problem::P3;
  throw ValidationError("unknown problem '" + std::string(text) + "' (expected p1, p2 or p3)");
}

void InstanceFile::sort_points() {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  auto role_rank = [&](std::size_t i) {
    return roles && (*roles)[i] == Role::Server ? 1 : 0;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a] != points[b]) return points[a] < points[b];
    return role_rank(a) < role_rank(b);
  });
  std::vector<double> xs;
  xs.reserve(order.size());
  for (auto i : order) xs.push_back(points[i]);
  if (roles) {
    std::vector<Role> rs;
    rs.reserve(order.size());
    for (auto i : order) rs.push_back((*roles)[i]);
    roles = std::move(rs);
  }
  points = std::move(xs);
}

PointSequence InstanceFile::point_sequence() const { return PointSequence(points); }

RoleTaggedPoints InstanceFile::role_tagged() const {
  if (!roles) throw ValidationError("p2 instance requires roles");
  std::vector<TaggedPoint> entries;
  entries.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) entries.push_back({points[i], (*roles)[i]});
  return RoleTaggedPoints(std::move(entries));
}

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance must be a JSON object");

  InstanceFile inst;
  try {
    inst.problem = parse_problem(doc.at("problem").get<std::string>());
    const auto& pts = doc.at("points");
    if (!pts.is_array()) throw ValidationError("'points' must be an array");
    for (const auto& v : pts) {
      if (!v.is_number()) throw ValidationError("'points' must contain numbers only");
      inst.points.push_back(v.get<double>());
    }
    if (doc.contains("roles")) {
      std::vector<Role> roles;
      for (const auto& v : doc.at("roles")) {
        const auto s = v.get<std::string>();
        if (s == "c") roles.push_back(Role::Client);
        else if (s == "s") roles.push_back(Role::Server);
        else throw ValidationError("role must be \"c\" or \"s\", got \"" + s + "\"");
      }
      inst.roles = std::move(roles);
    }
    if (doc.contains("metadata")) inst.metadata = doc.at("metadata");
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed instance: ") + e.what());
  }

  if (inst.points.empty()) throw ValidationError("instance has no points");
  if (inst.problem == Problem::P2) {
    if (!inst.roles) throw ValidationError("p2 instance requires 'roles'");
    if (inst.roles->size() != inst.points.size()) {
      throw ValidationError("'roles' and 'points' differ in length");
    }
  } else if (inst.roles) {
    throw ValidationError("'roles' is only allowed for p2");
  }
  return inst;
}

std::string serialize_instance(const InstanceFile& instance) {
  json doc;
  doc["problem"] = to_string(instance.problem);
  doc["points"] = instance.points;
  if (instance.roles) {
    json roles = json::array();
    for (Role r : *instance.roles) roles.push_back(r == Role::Client ? "c" : "s");
    doc["roles"] = roles;
  }
  if (!instance.metadata.empty()) doc["metadata"] = instance.metadata;
  return doc.dump(2) + "\n";
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

json to_json(const ResultRecord& record) {
  json j;
  j["problem"] = to_string(record.problem);
  j["n"] = record.n;
  if (record.cost) j["cost"] = *record.cost;
  else j["cost"] = "infeasible";
  if (record.radii) j["radii"] = *record.radii;
  j["wall_time_ns"] = record.wall_time_ns;
  j["algorithm"] = record.algorithm;
  j["verification"] = record.verification;
  return j;
}

ResultRecord result_from_json(const json& j) {
  ResultRecord r;
  r.problem = parse_problem(j.at("problem").get<std::string>());
  r.n = j.at("n").get<std::size_t>();
  const auto& cost = j.at("cost");
  if (cost.is_string()) {
    if (cost.get<std::string>() != "infeasible") throw ValidationError("bad cost value");
  } else {
    r.cost = cost.get<double>();
  }
  if (j.contains("radii")) r.radii = j.at("radii").get<std::vector<double>>();
  r.wall_time_ns = j.at("wall_time_ns").get<std::int64_t>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.verification = j.at("verification").get<std::string>();
  return r;
}

}  // namespace collinear::cli
