#include "collinear/cli/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace collinear::cli {

Distribution parse_distribution(std::string_view text) {
  if (text == "uniform") return Distribution::Uniform;
  if (text == "clustered") return Distribution::Clustered;
  if (text == "geometric") return Distribution::Geometric;
  if (text == "adversarial-ties") return Distribution::AdversarialTies;
  throw UsageError("unknown distribution '" + std::string(text) + "'");
}

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::Clustered: return "clustered";
    case Distribution::Geometric: return "geometric";
    case Distribution::AdversarialTies: return "adversarial-ties";
  }
  return "?";
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

std::vector<double> sorted_distinct(std::size_t n, auto draw) {
  std::vector<double> xs;
  xs.reserve(n);
  while (xs.size() < n) {
    while (xs.size() < n) xs.push_back(draw());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  return xs;
}

std::vector<double> from_gaps(std::size_t n, auto gap) {
  std::vector<double> xs(n);
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x;
    x += gap(i);
  }
  return xs;
}

}  // namespace

InstanceFile generate(const GeneratorOptions& options) {
  if (options.n == 0) throw UsageError("n must be at least 1");
  if (!(options.client_ratio >= 0.0 && options.client_ratio <= 1.0)) {
    throw UsageError("client ratio must lie in [0, 1]");
  }
  std::mt19937_64 rng(options.seed);
  const std::size_t n = options.n;

  InstanceFile inst;
  inst.problem = options.problem;
  switch (options.distribution) {
    case Distribution::Uniform:
      inst.points = sorted_distinct(n, [&] { return 100.0 * unit_draw(rng); });
      break;
    case Distribution::Clustered: {
      const std::size_t clusters = std::max<std::size_t>(1, n / 8);
      std::vector<double> centers(clusters);
      for (auto& c : centers) c = 100.0 * unit_draw(rng);
      inst.points = sorted_distinct(n, [&] {
        const double c = centers[rng() % clusters];
        return c + (unit_draw(rng) - 0.5);
      });
      break;
    }
    case Distribution::Geometric:
      // Gap scales spread over four orders of magnitude.
      inst.points = from_gaps(n, [&](std::size_t) {
        return std::pow(10.0, 4.0 * unit_draw(rng) - 2.0);
      });
      break;
    case Distribution::AdversarialTies: {
      // Gaps equal to 1 or off by a hair, so signature comparisons and
      // tolerance checks land on or next to their boundaries.
      static constexpr double kNudges[] = {0.0, 0.0, 0.0, 1e-12, -1e-12, 1e-10, -1e-10, 0.5};
      inst.points = from_gaps(n, [&](std::size_t) { return 1.0 + kNudges[rng() % 8]; });
      break;
    }
  }

  if (options.problem == Problem::P2) {
    std::vector<Role> roles(n);
    for (auto& r : roles) {
      r = unit_draw(rng) < options.client_ratio ? Role::Client : Role::Server;
    }
    inst.roles = std::move(roles);
  }
  inst.metadata = {{"generator", std::string(to_string(options.distribution))},
                   {"seed", options.seed}};
  return inst;
}

}  // namespace collinear::cli
