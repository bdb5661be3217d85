#include "collinear/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "CLI11.hpp"
#include "collinear/oracles.hpp"
#include "collinear/p1_max_area.hpp"
#include "collinear/p2_min_radii.hpp"
#include "collinear/p3_interval_cover.hpp"

namespace collinear::cli {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(F&& f, std::int64_t& ns) {
  const auto t0 = Clock::now();
  auto result = f();
  ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
  return result;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

ResultRecord solve_instance(const InstanceFile& instance, Algorithm algo, bool emit_solution) {
  ResultRecord rec;
  rec.problem = instance.problem;
  rec.n = instance.points.size();
  std::vector<double> radii;

  switch (instance.problem) {
    case Problem::P1: {
      const auto pts = instance.point_sequence();
      if (algo == Algorithm::Main) {
        rec.algorithm = "p1-linear";
        auto sol = timed([&] { return p1::solve(pts); }, rec.wall_time_ns);
        rec.cost = sol.alpha;
        radii = std::move(sol.radii);
      } else {
        rec.algorithm = "p1-vertex-oracle";
        auto rep = timed([&] { return oracle::p1_vertex(pts); }, rec.wall_time_ns);
        rec.cost = rep.cost;
        radii = std::move(rep.witness);
      }
      rec.verification = p1_feasible(pts, radii) ? "feasible" : "infeasible-output";
      break;
    }
    case Problem::P2: {
      const auto pts = instance.role_tagged();
      rec.algorithm = algo == Algorithm::Main ? "p2-quadratic" : "p2-dense-oracle";
      try {
        if (algo == Algorithm::Main) {
          auto sol = timed([&] { return p2::solve(pts); }, rec.wall_time_ns);
          rec.cost = sol.cost;
          radii = std::move(sol.server_radii);
        } else {
          auto rep = timed([&] { return oracle::p2_dense(pts); }, rec.wall_time_ns);
          rec.cost = rep.cost;
          radii = std::move(rep.witness);
        }
        rec.verification = p2_feasible(pts, radii) ? "feasible" : "infeasible-output";
      } catch (const InfeasibleError&) {
        rec.verification = "infeasible-instance";
        return rec;
      }
      break;
    }
    case Problem::P3: {
      const auto pts = instance.point_sequence();
      if (algo == Algorithm::Main) {
        rec.algorithm = "p3-quadratic";
        auto sol = timed([&] { return p3::solve_quadratic(pts); }, rec.wall_time_ns);
        rec.cost = sol.cost;
        for (const auto& d : sol.disks) radii.push_back(d.radius);
        rec.verification = p3_feasible(pts, sol.disks) ? "feasible" : "infeasible-output";
      } else {
        // The reference DP reports the cost only.
        rec.algorithm = "p3-cubic";
        rec.cost = timed([&] { return p3::solve_cubic(pts); }, rec.wall_time_ns);
        rec.verification = "unchecked";
        emit_solution = false;
      }
      break;
    }
  }
  if (emit_solution) rec.radii = std::move(radii);
  return rec;
}

VerifyOutcome verify_instance(const InstanceFile& instance) {
  const Tolerance exact{1e-9, 1e-9};
  std::ostringstream detail;
  bool pass = true;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  };

  switch (instance.problem) {
    case Problem::P1: {
      const auto pts = instance.point_sequence();
      const auto sol = p1::solve(pts);
      detail << "main=" << fmt(sol.alpha);
      check(p1_feasible(pts, sol.radii), "main infeasible");
      if (pts.size() <= oracle::kVertexOracleMaxPoints) {
        const auto rep = oracle::p1_vertex(pts);
        detail << " vertex=" << fmt(rep.cost);
        check(Tolerance{1e-9, 1e-6}.equal(sol.alpha, rep.cost), "vertex oracle differs");
      }
      const double sampled = oracle::p1_random_feasible(pts, 1000, 12345);
      check(exact.less_equal(sampled, sol.alpha), "random assignment beats main");
      break;
    }
    case Problem::P2: {
      const auto pts = instance.role_tagged();
      double main_cost = kInfinity;
      std::vector<double> radii;
      try {
        auto sol = p2::solve(pts);
        main_cost = sol.cost;
        radii = std::move(sol.server_radii);
      } catch (const InfeasibleError&) {
      }
      detail << "main=" << fmt(main_cost);
      if (!std::isinf(main_cost)) check(p2_feasible(pts, radii), "main infeasible");
      double dense = kInfinity;
      try {
        dense = oracle::p2_dense(pts).cost;
      } catch (const InfeasibleError&) {
      }
      detail << " dense=" << fmt(dense);
      check(exact.equal(main_cost, dense), "dense oracle differs");
      if (pts.server_count() <= 4 && pts.client_count() <= 5) {
        double exhaustive = kInfinity;
        try {
          exhaustive = oracle::p2_exhaustive(pts).cost;
        } catch (const InfeasibleError&) {
        }
        detail << " exhaustive=" << fmt(exhaustive);
        check(exact.equal(main_cost, exhaustive), "exhaustive oracle differs");
      }
      break;
    }
    case Problem::P3: {
      const auto pts = instance.point_sequence();
      const auto sol = p3::solve_quadratic(pts);
      const double cubic = p3::solve_cubic(pts);
      detail << "main=" << fmt(sol.cost) << " cubic=" << fmt(cubic);
      check(p3_feasible(pts, sol.disks), "main infeasible");
      check(exact.equal(sol.cost, alpha_cost(sol.disks)), "disks disagree with cost");
      check(exact.equal(sol.cost, cubic), "cubic DP differs");
      if (pts.size() <= oracle::kSplitOracleMaxPoints) {
        const double split = oracle::p3_split(pts).cost;
        detail << " split=" << fmt(split);
        check(exact.equal(sol.cost, split), "split oracle differs");
      }
      break;
    }
  }
  return {pass, detail.str()};
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("COLLINEAR_RANGES_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v >= 1) n = std::min(n, static_cast<std::size_t>(v));
  }
  return n;
}

// Keep freed blocks in the heap. Otherwise glibc returns every buffer above
// its mmap threshold to the OS, so only large sizes pay fresh page faults on
// each repetition and the fitted slope is skewed.
static void keep_freed_memory() {
#if defined(__GLIBC__)
  static const bool once = [] {
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
    return true;
  }();
  (void)once;
#endif
}

std::vector<BenchRow> run_benchmark(const BenchOptions& options) {
  keep_freed_memory();
  if (!std::is_sorted(options.sizes.begin(), options.sizes.end())) {
    throw UsageError("benchmark sizes must be ascending");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n : options.sizes) {
    GeneratorOptions gen;
    gen.problem = options.problem;
    gen.n = n;
    gen.seed = options.seed + n;
    const auto inst = generate(gen);
    for (std::size_t rep = 0; rep < options.reps; ++rep) {
      auto record = [&](Algorithm algo) {
        const auto r = solve_instance(inst, algo, false);
        rows.push_back({options.problem, r.algorithm, n, rep, r.wall_time_ns * 1e-9});
      };
      if (options.main) record(Algorithm::Main);
      if (options.reference) record(Algorithm::Reference);
    }
  }
  return rows;
}

double fit_loglog_slope(std::span<const double> sizes, std::span<const double> seconds) {
  if (sizes.size() != seconds.size() || sizes.size() < 2) {
    throw UsageError("slope fit needs at least two (size, time) pairs");
  }
  const double k = static_cast<double>(sizes.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(sizes[i]);
    const double y = std::log(std::max(seconds[i], 1e-12));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::map<std::string, double> empirical_exponents(const std::vector<BenchRow>& rows) {
  std::map<std::string, std::map<std::size_t, double>> fastest;
  for (const auto& r : rows) {
    auto [it, inserted] = fastest[r.algo].try_emplace(r.n, r.seconds);
    if (!inserted) it->second = std::min(it->second, r.seconds);
  }
  std::map<std::string, double> out;
  for (const auto& [algo, by_n] : fastest) {
    if (by_n.size() < 2) continue;
    std::vector<double> ns, secs;
    for (const auto& [n, s] : by_n) {
      ns.push_back(static_cast<double>(n));
      secs.push_back(s);
    }
    out[algo] = fit_loglog_slope(ns, secs);
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "problem,algo,n,rep,seconds\n";
  os.precision(9);
  for (const auto& r : rows) {
    os << to_string(r.problem) << ',' << r.algo << ',' << r.n << ',' << r.rep << ','
       << r.seconds << '\n';
  }
  return os.str();
}

namespace {

void print_record(const ResultRecord& rec, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(rec).dump() << '\n';
    return;
  }
  out << "problem: " << to_string(rec.problem) << '\n'
      << "n: " << rec.n << '\n'
      << "cost: " << (rec.cost ? fmt(*rec.cost) : std::string("infeasible")) << '\n'
      << "algorithm: " << rec.algorithm << '\n'
      << "wall_time_ns: " << rec.wall_time_ns << '\n'
      << "verification: " << rec.verification << '\n';
  if (rec.radii) {
    out << "radii:";
    for (double r : *rec.radii) out << ' ' << fmt(r);
    out << '\n';
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad size '" + item + "' in --sizes");
    }
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

int run_verify(std::vector<InstanceFile> instances, std::ostream& out) {
  std::vector<VerifyOutcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        outcomes[i] = verify_instance(instances[i]);
      } catch (const std::exception& e) {
        outcomes[i] = {false, std::string("error: ") + e.what()};
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t threads = std::min(worker_count(), std::max<std::size_t>(1, instances.size()));
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  std::size_t passed = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& o = outcomes[i];
    passed += o.pass ? 1 : 0;
    out << (o.pass ? "PASS " : "FAIL ") << to_string(instances[i].problem) << " #" << i
        << " n=" << instances[i].points.size() << ' ' << o.detail << '\n';
  }
  out << passed << '/' << instances.size() << " PASS\n";
  return passed == instances.size() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Range-assignment solvers for collinear points", "collinear-ranges"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string gen_problem, gen_dist = "uniform", gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  double gen_ratio = 0.5;
  gen->add_option("problem", gen_problem, "p1, p2 or p3")->required();
  gen->add_option("--n", gen_n, "Number of points")->required();
  gen->add_option("--dist", gen_dist, "uniform, clustered, geometric or adversarial-ties");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--client-ratio", gen_ratio, "Probability of a client (p2)");
  gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  std::string solve_in, solve_algo = "main";
  bool emit = false, as_json = false, solve_sort = false;
  solve->add_option("instance", solve_in, "Instance file")->required();
  solve->add_option("--algo", solve_algo, "main or reference");
  solve->add_flag("--emit-solution", emit, "Include radii");
  solve->add_flag("--json", as_json, "Print a JSON result record");
  solve->add_flag("--sort", solve_sort, "Sort points before solving");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the main solvers against the oracles");
  std::string verify_in, verify_dist = "uniform";
  std::vector<std::string> random_spec;
  bool verify_sort = false;
  verify->add_option("instance", verify_in, "Instance file");
  verify->add_option("--random", random_spec, "problem n count seed")->expected(4);
  verify->add_option("--dist", verify_dist, "Distribution for --random");
  verify->add_flag("--sort", verify_sort, "Sort points of the instance file");

  // bench
  auto* bench = app.add_subcommand("bench", "Time solvers over growing sizes");
  std::string bench_problem, bench_sizes, bench_csv_out, bench_algo = "main";
  std::size_t bench_reps = 3;
  std::uint64_t bench_seed = 1;
  bench->add_option("problem", bench_problem, "p1, p2 or p3")->required();
  bench->add_option("--sizes", bench_sizes, "Comma-separated ascending sizes")->required();
  bench->add_option("--reps", bench_reps, "Repetitions per size");
  bench->add_option("--csv", bench_csv_out, "CSV output file (stdout if omitted)");
  bench->add_option("--algo", bench_algo, "main, reference or both");
  bench->add_option("--seed", bench_seed, "RNG seed");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("collinear-ranges");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*gen) {
      GeneratorOptions opts;
      opts.problem = parse_problem(gen_problem);
      opts.n = gen_n;
      opts.distribution = parse_distribution(gen_dist);
      opts.seed = gen_seed;
      opts.client_ratio = gen_ratio;
      const auto text = serialize_instance(generate(opts));
      if (gen_out.empty()) out << text;
      else write_text_file(gen_out, text);
      return kExitOk;
    }

    if (*solve) {
      auto inst = read_instance_file(solve_in);
      if (solve_sort) inst.sort_points();
      Algorithm algo;
      if (solve_algo == "main") algo = Algorithm::Main;
      else if (solve_algo == "reference") algo = Algorithm::Reference;
      else throw UsageError("--algo must be main or reference");
      const auto rec = solve_instance(inst, algo, emit);
      print_record(rec, as_json, out);
      return rec.cost ? kExitOk : kExitInfeasible;
    }

    if (*verify) {
      std::vector<InstanceFile> instances;
      if (!random_spec.empty()) {
        if (!verify_in.empty()) throw UsageError("give either an instance file or --random");
        GeneratorOptions opts;
        opts.problem = parse_problem(random_spec[0]);
        std::size_t count = 0;
        std::uint64_t seed = 0;
        try {
          opts.n = std::stoul(random_spec[1]);
          count = std::stoul(random_spec[2]);
          seed = std::stoull(random_spec[3]);
        } catch (const std::exception&) {
          throw UsageError("--random expects: problem n count seed");
        }
        opts.distribution = parse_distribution(verify_dist);
        for (std::size_t i = 0; i < count; ++i) {
          opts.seed = seed * 1'000'003 + i;
          instances.push_back(generate(opts));
        }
      } else {
        if (verify_in.empty()) throw UsageError("verify needs an instance file or --random");
        auto inst = read_instance_file(verify_in);
        if (verify_sort) inst.sort_points();
        // Validate up front so malformed files exit 2 rather than FAIL.
        if (inst.problem == Problem::P2) (void)inst.role_tagged();
        else (void)inst.point_sequence();
        instances.push_back(std::move(inst));
      }
      return run_verify(std::move(instances), out);
    }

    if (*bench) {
      BenchOptions opts;
      opts.problem = parse_problem(bench_problem);
      opts.sizes = parse_sizes(bench_sizes);
      opts.reps = bench_reps;
      opts.seed = bench_seed;
      if (bench_algo == "main") {
        opts.main = true;
        opts.reference = false;
      } else if (bench_algo == "reference") {
        opts.main = false;
        opts.reference = true;
      } else if (bench_algo == "both") {
        opts.main = opts.reference = true;
      } else {
        throw UsageError("--algo must be main, reference or both");
      }
      const auto rows = run_benchmark(opts);
      const auto csv = bench_csv(rows);
      if (bench_csv_out.empty()) out << csv;
      else write_text_file(bench_csv_out, csv);
      for (const auto& [algo, slope] : empirical_exponents(rows)) {
        out << "empirical exponent " << algo << ": " << fmt(slope) << '\n';
      }
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace collinear::cli
