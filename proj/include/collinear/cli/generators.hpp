#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "collinear/cli/instance_io.hpp"

namespace collinear::cli {

enum class Distribution { Uniform, Clustered, Geometric, AdversarialTies };

Distribution parse_distribution(std::string_view text);
std::string_view to_string(Distribution d);

struct GeneratorOptions {
  Problem problem = Problem::P1;
  std::size_t n = 1;
  Distribution distribution = Distribution::Uniform;
  std::uint64_t seed = 0;
  double client_ratio = 0.5;  // p2 only
};

/// Strictly increasing coordinates (and roles for p2). Bit-identical output
/// for identical options: only the engine's raw output is consumed, never
/// the implementation-defined std distributions.
InstanceFile generate(const GeneratorOptions& options);

/// Uniform double in [0, 1) from 53 random bits.
double unit_draw(std::mt19937_64& rng);

}  // namespace collinear::cli
