#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace bayesassist {

/// Unnormalised log density over R^d. May return -infinity to reject a point.
using LogDensity = std::function<double(std::span<const double>)>;

struct SamplerConfig {
  int chains = 4;
  int warmup = 2000;
  int draws = 2500;
  std::uint64_t seed = 0;
  /// Iterations per step-size adaptation window during warmup.
  int adaptation_window = 50;
  /// Per-coordinate acceptance band the warmup steers toward.
  double target_acceptance_low = 0.23;
  double target_acceptance_high = 0.44;
  double initial_step = 0.1;
  /// Run chains on separate threads. Results do not depend on this.
  bool parallel = true;
};

struct ChainTrace {
  /// Row-major kept draws: draws x dimension.
  std::vector<double> samples;
  /// Post-warmup acceptance rate per coordinate.
  std::vector<double> acceptance;
  /// Proposal scale per coordinate at the end of warmup.
  std::vector<double> step_sizes;
};

struct McmcResult {
  std::size_t dimension = 0;
  std::size_t draws_per_chain = 0;
  std::vector<ChainTrace> chains;

  /// Draws of one coordinate, one vector per chain.
  std::vector<std::vector<double>> coordinate(std::size_t index) const;
};

/// Produces a starting point for a chain from its own generator.
using Initializer = std::function<std::vector<double>(std::mt19937_64&)>;

/// Component-wise random-walk Metropolis. Each sweep proposes a Gaussian move
/// in every coordinate in turn. During warmup each coordinate's proposal
/// scale is multiplied by exp(+-delta) after every adaptation window whose
/// acceptance falls outside the target band, with delta shrinking as
/// 1/sqrt(window index). Scales are frozen for the kept draws.
///
/// Chain c is seeded from (config.seed, c) only, so output is identical
/// whether or not chains run in parallel.
McmcResult sample_metropolis(const LogDensity& log_density, std::size_t dimension,
                             const Initializer& initializer, const SamplerConfig& config);

/// Split potential scale reduction (each chain halved). Returns 1 for chains
/// that are all the same constant and +infinity if within-chain variance is
/// zero but chains disagree.
double split_rhat(const std::vector<std::vector<double>>& chains);

/// Multi-chain effective sample size from autocorrelations truncated by
/// Geyer's initial positive sequence.
double effective_sample_size(const std::vector<std::vector<double>>& chains);

}  // namespace bayesassist
