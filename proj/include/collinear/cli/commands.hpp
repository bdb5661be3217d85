#pragma once

// `collinear-ranges {gen|solve|verify|bench}`: the command implementations,
// callable in-process so tests can drive them without spawning the binary.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "collinear/cli/generators.hpp"
#include "collinear/cli/instance_io.hpp"

namespace collinear::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitVerifyFailed = 4;

/// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

enum class Algorithm { Main, Reference };

/// Solves one instance, timing only the solver call. P2 instances without
/// servers yield a record whose cost is nullopt.
ResultRecord solve_instance(const InstanceFile& instance, Algorithm algo, bool emit_solution);

struct VerifyOutcome {
  bool pass = false;
  std::string detail;
};

/// Main solver against every oracle applicable at this size.
VerifyOutcome verify_instance(const InstanceFile& instance);

struct BenchRow {
  Problem problem = Problem::P1;
  std::string algo;
  std::size_t n = 0;
  std::size_t rep = 0;
  double seconds = 0.0;
};

struct BenchOptions {
  Problem problem = Problem::P1;
  std::vector<std::size_t> sizes;
  std::size_t reps = 3;
  bool main = true;
  bool reference = false;
  std::uint64_t seed = 1;
};

std::vector<BenchRow> run_benchmark(const BenchOptions& options);

/// Least-squares slope of log(seconds) against log(n).
double fit_loglog_slope(std::span<const double> sizes, std::span<const double> seconds);

/// Per algorithm: slope fitted through the fastest repetition at each size.
std::map<std::string, double> empirical_exponents(const std::vector<BenchRow>& rows);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Worker threads for verify: hardware concurrency, capped by the
/// COLLINEAR_RANGES_THREADS environment variable when set.
std::size_t worker_count();

}  // namespace collinear::cli
