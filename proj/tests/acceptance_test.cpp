// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "collinear/cli/commands.hpp"
#include "collinear/cli/generators.hpp"
#include "collinear/oracles.hpp"
#include "collinear/p1_max_area.hpp"
#include "collinear/p2_min_radii.hpp"
#include "collinear/p3_interval_cover.hpp"
#include "test_support.hpp"

using namespace collinear;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << " (" << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed; first: " << first_;
    s << ")";
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double seconds_of(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Fastest repetition per size, fitted.
struct Scaling {
  std::vector<double> sizes;
  std::vector<double> best;
  double slope = 0;
};

Scaling measure(cli::Problem problem, const std::vector<std::size_t>& sizes, std::size_t reps,
                bool reference, std::uint64_t seed) {
  cli::BenchOptions opts;
  opts.problem = problem;
  opts.sizes = sizes;
  opts.reps = reps;
  opts.main = !reference;
  opts.reference = reference;
  opts.seed = seed;
  const auto rows = cli::run_benchmark(opts);
  Scaling s;
  for (std::size_t n : sizes) {
    double best = kInfinity;
    for (const auto& r : rows) {
      if (r.n == n) best = std::min(best, r.seconds);
    }
    s.sizes.push_back(static_cast<double>(n));
    s.best.push_back(best);
  }
  s.slope = cli::fit_loglog_slope(s.sizes, s.best);
  return s;
}

std::string timings(const Scaling& s) {
  std::string out;
  for (std::size_t i = 0; i < s.sizes.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += "n=" + num(s.sizes[i]) + ":" + num(s.best[i]) + "s";
  }
  return out;
}

RoleTaggedPoints bounded_roles(std::mt19937_64& rng, std::size_t max_servers, std::size_t max_clients) {
  const std::size_t servers = rng() % (max_servers + 1);
  const std::size_t clients = rng() % (max_clients + 1);
  const auto xs = testing::random_sorted(rng, std::max<std::size_t>(servers + clients, 1));
  std::vector<Role> roles(xs.size(), Role::Client);
  for (std::size_t i = 0; i < servers; ++i) roles[i] = Role::Server;
  std::shuffle(roles.begin(), roles.end(), rng);
  if (servers + clients == 0) roles[0] = Role::Server;
  std::vector<TaggedPoint> entries;
  for (std::size_t i = 0; i < xs.size(); ++i) entries.push_back({xs[i], roles[i]});
  return RoleTaggedPoints(std::move(entries));
}

// Cost or +inf when infeasible.
template <typename F>
double cost_or_inf(F&& f) {
  try {
    return f();
  } catch (const InfeasibleError&) {
    return kInfinity;
  }
}

bool same_cost(double a, double b, double rel) {
  if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
  return close_rel(a, b, rel);
}

Outcome p1_oracle_equivalence() {
  Tally t;
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const PointSequence pts(testing::random_sorted(rng, n, 0.0, 100.0));
    const auto sol = p1::solve(pts);
    const double ref = oracle::p1_vertex(pts).cost;
    t.expect(close_rel(sol.alpha, ref, 1e-6) && p1_feasible(pts, sol.radii),
             "instance " + std::to_string(trial) + ": " + num(sol.alpha) + " vs " + num(ref));
  }
  return t.outcome("1000 instances, n in [3,8]");
}

Outcome p1_fixtures() {
  Tally t;
  const std::vector<std::pair<std::vector<double>, double>> cases{
      {{0, 1, 3}, 5.0}, {{0, 1, 2}, 2.0}, {{0, 1, 2, 2.5}, 1.25}};
  for (const auto& [xs, expected] : cases) {
    const PointSequence pts(xs);
    const double got = p1::solve(pts).alpha;
    t.expect(std::abs(got - expected) <= 1e-9, "got " + num(got) + " want " + num(expected));
    t.expect(std::abs(oracle::p1_vertex(pts).cost - expected) <= 1e-9, "oracle disagrees");
  }
  return t.outcome("[0,1,3]->5, [0,1,2]->2, [0,1,2,2.5]->1.25");
}

Outcome p1_scaling() {
  const auto s = measure(cli::Problem::P1, {250'000, 500'000, 1'000'000}, 3, false, 11);
  const bool ok = s.best.back() < 1.0 && s.slope <= 1.15;
  return {ok, timings(s) + "; slope " + num(s.slope) + " (limit 1.15, n=1e6 under 1 s)"};
}

Outcome delta_example() {
  const auto signs = p1::parse_signs("-++-+++---+--++");
  std::vector<std::string> pieces;
  for (auto [i, j] : p1::decompose_delta(signs)) {
    pieces.push_back(p1::to_string(std::span<const p1::Sign>(signs).subspan(i, j - i + 1)));
  }
  const std::vector<std::string> expected{"-++-", "-+++-", "--", "--", "-+-", "--"};
  std::string got;
  for (const auto& p : pieces) got += (got.empty() ? "" : " ") + p;
  return {pieces == expected, got};
}

Outcome p2_oracle_equivalence() {
  Tally t;
  std::mt19937_64 rng(2002);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto pts = trial % 3 == 0 ? testing::random_roles_on_grid(rng, n)
                                    : testing::random_roles(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
    const double got = cost_or_inf([&] { return p2::solve(pts).cost; });
    const double ref = cost_or_inf([&] { return oracle::p2_dense(pts).cost; });
    t.expect(same_cost(got, ref, 1e-9), "dense, instance " + std::to_string(trial));
  }
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = bounded_roles(rng, 4, 5);
    const double got = cost_or_inf([&] { return p2::solve(pts).cost; });
    const double ref = cost_or_inf([&] { return oracle::p2_exhaustive(pts).cost; });
    t.expect(same_cost(got, ref, 1e-9), "exhaustive, instance " + std::to_string(trial));
  }
  return t.outcome("1000 vs dense n<=12, 300 vs exhaustive <=4 servers/<=5 clients");
}

Outcome p2_structural() {
  Tally t;
  const Tolerance tol;
  std::mt19937_64 rng(2003);
  std::size_t solved = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const auto pts = trial % 2 ? testing::random_roles(rng, n) : testing::random_roles_on_grid(rng, n);
    if (pts.client_count() > 0 && pts.server_count() == 0) continue;
    const auto sol = p2::solve(pts);
    ++solved;
    const std::string id = "instance " + std::to_string(trial);
    t.expect(p2_feasible(pts, sol.server_radii), id + ": not feasible");
    const auto servers = pts.server_indices();
    for (std::size_t a = 0; a < servers.size(); ++a) {
      const double r = sol.server_radii[a];
      if (r == 0) continue;
      const double xs = pts[servers[a]].x;
      bool distance = false;
      for (const auto& p : pts.entries()) {
        if (p.role == Role::Client) distance = distance || tol.equal(std::abs(p.x - xs), r);
      }
      t.expect(distance, id + ": radius is not a server-client distance");
      for (std::size_t b = 0; b < servers.size(); ++b) {
        if (b == a || sol.server_radii[b] == 0) continue;
        t.expect(tol.less_equal(r, std::abs(pts[servers[b]].x - xs)),
                 id + ": disk contains another chosen center");
      }
    }
  }
  return t.outcome(std::to_string(solved) + " optima, n<=60");
}

Outcome p2_scaling() {
  const auto s = measure(cli::Problem::P2, {2000, 4000, 8000, 16000}, 2, false, 21);
  cli::GeneratorOptions gen;
  gen.problem = cli::Problem::P2;
  gen.n = 20'000;
  gen.seed = 22;
  const auto pts = cli::generate(gen).role_tagged();
  const double big = seconds_of([&] { (void)p2::solve(pts); });
  const bool ok = big < 5.0 && s.slope <= 2.3;
  return {ok, timings(s) + "; exponent " + num(s.slope) + " (limit 2.3); n=20000: " + num(big) +
                  "s (limit 5)"};
}

Outcome p3_agreement() {
  Tally t;
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 1000; ++trial) {
    const PointSequence pts(testing::random_sorted(rng, 1 + rng() % 40));
    const double q = p3::solve_quadratic(pts).cost;
    const double c = p3::solve_cubic(pts);
    t.expect(close_rel(q, c, 1e-9), "quadratic/cubic, instance " + std::to_string(trial));
  }
  for (int trial = 0; trial < 300; ++trial) {
    const PointSequence pts(testing::random_sorted(rng, 1 + rng() % 10));
    const double q = p3::solve_quadratic(pts).cost;
    const double c = p3::solve_cubic(pts);
    const double s = oracle::p3_split(pts).cost;
    t.expect(close_rel(q, s, 1e-9) && close_rel(c, s, 1e-9), "split, instance " + std::to_string(trial));
  }
  const std::vector<std::pair<std::vector<double>, double>> fixtures{
      {{0, 0.5, 1}, 1.0 / 12}, {{0, 0.1, 1}, 0.10375}, {{0, 1}, 0.125}};
  for (const auto& [xs, expected] : fixtures) {
    const PointSequence pts(xs);
    t.expect(std::abs(p3::solve_quadratic(pts).cost - expected) <= 1e-9, "fixture, quadratic");
    t.expect(std::abs(p3::solve_cubic(pts) - expected) <= 1e-9, "fixture, cubic");
  }
  return t.outcome("1000 quadratic=cubic n<=40, 300 vs split n<=10, 3 fixtures");
}

Outcome p3_structure() {
  Tally t;
  const Tolerance tol;
  std::mt19937_64 rng(3004);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % (trial % 10 == 0 ? 300 : 40);
    const PointSequence pts(testing::random_sorted(rng, n));
    const auto sol = p3::solve_quadratic(pts);
    const std::string id = "instance " + std::to_string(trial);
    t.expect(p3_feasible(pts, sol.disks), id + ": not feasible");
    auto disks = sol.disks;
    std::sort(disks.begin(), disks.end(),
              [](const Disk& a, const Disk& b) { return a.center < b.center; });
    for (std::size_t i = 0; i + 1 < disks.size(); ++i) {
      const auto& l = disks[i];
      const auto& r = disks[i + 1];
      t.expect(tol.less_equal(l.right(), r.left()), id + ": interiors overlap");
      const double junction = r.left();
      bool at_point = false;
      for (double x : pts.coords()) at_point = at_point || tol.equal(x, junction);
      if (!at_point) t.expect(tol.equal(l.radius, r.radius), id + ": unequal radii at junction");
    }
  }
  return t.outcome("1000 optima, n<=300");
}

Outcome p3_scaling() {
  const std::vector<std::size_t> sizes{200, 400, 800, 1600};
  const auto quad = measure(cli::Problem::P3, sizes, 3, false, 31);
  const auto cubic = measure(cli::Problem::P3, sizes, 2, true, 31);
  cli::GeneratorOptions gen;
  gen.problem = cli::Problem::P3;
  gen.n = 5000;
  gen.seed = 32;
  const auto pts = cli::generate(gen).point_sequence();
  const double big = seconds_of([&] { (void)p3::solve_quadratic(pts); });
  const bool ok = std::abs(quad.slope - 2) <= 0.35 && std::abs(cubic.slope - 3) <= 0.35 && big < 10.0;
  return {ok, "quadratic slope " + num(quad.slope) + ", cubic slope " + num(cubic.slope) +
                  " (each within 0.35 of 2 and 3); quadratic n=5000: " + num(big) + "s (limit 10)"};
}

Outcome incremental_state() {
  Tally t;
  const Tolerance tol;
  std::mt19937_64 rng(4004);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 49;
    const PointSequence pts(testing::random_sorted(rng, n));
    const auto xs = pts.coords();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (int a = 0; a < 2; ++a) {
        p3::UnitCoverState st;
        if (a) st.append(xs[i], xs[i]);
        const std::size_t first = a ? i : i + 1;
        for (std::size_t j = i + 1; j < n; ++j) {
          for (int b = 0; b < 2; ++b) {
            if (b) st.append(xs[i], xs[j]);
            const std::size_t last = b ? j + 1 : j;
            const auto scratch = first < last
                                     ? p3::unit_cover_eval(xs[i], xs[j], xs.subspan(first, last - first), tol)
                                     : p3::unit_cover_eval(xs[i], xs[j], {}, tol);
            t.expect(st.valid(xs[i], xs[j], tol) == scratch.valid,
                     "instance " + std::to_string(trial) + " segment (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(a) + "," + std::to_string(b) + ")");
          }
        }
      }
    }
  }
  return t.outcome("200 instances, n<=50, every segment and inclusion variant");
}

Outcome equity_fuzz() {
  Tally t;
  std::mt19937_64 rng(5005);
  std::uniform_real_distribution<double> u(1e-9, 1.0);
  std::uniform_real_distribution<double> total(1e-3, 1e3);
  for (int trial = 0; trial < 100'000; ++trial) {
    const std::size_t k = 1 + rng() % 50;
    const double R = total(rng);
    std::vector<double> r(k);
    double raw = 0;
    for (auto& v : r) raw += (v = u(rng));
    double sum = 0, sq = 0;
    for (auto& v : r) {
      v *= R / raw;
      sum += v;
      sq += v * v;
    }
    const double bound = sum * sum / static_cast<double>(k);
    t.expect(sq >= bound * (1 - 1e-12), "tuple " + std::to_string(trial));
  }
  return t.outcome("1e5 positive tuples, k<=50");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"P1 oracle equivalence", p1_oracle_equivalence},
      {"P1 fixtures", p1_fixtures},
      {"P1 scaling", p1_scaling},
      {"signature decomposition example", delta_example},
      {"P2 oracle equivalence", p2_oracle_equivalence},
      {"P2 structural suite", p2_structural},
      {"P2 scaling", p2_scaling},
      {"P3 triple agreement", p3_agreement},
      {"P3 solution structure", p3_structure},
      {"P3 scaling", p3_scaling},
      {"incremental-state correctness", incremental_state},
      {"equal-radii inequality fuzz", equity_fuzz},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    double secs = 0;
    try {
      secs = seconds_of([&] { o = criteria[c].second(); });
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
