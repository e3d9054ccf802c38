#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bayesassist/mcmc.hpp"
#include "bayesassist/study.hpp"

namespace bayesassist {

/// Dummy coding of presentation conditions. All-zero is the uncertainty
/// visualisation reference; at most one indicator may be set.
struct ConditionCode {
  bool post = false;
  bool analogy = false;
  bool point_est = false;

  static constexpr ConditionCode reference() { return {}; }
  /// Throws InvalidInput if more than one indicator is set.
  void validate() const;
  /// 0 reference, 1 post, 2 analogy, 3 point estimate.
  int cell() const;

  friend bool operator==(const ConditionCode&, const ConditionCode&) = default;
};

/// Coding of an elicitation condition; nullopt for the no-elicitation arms,
/// which have no individual normative posterior.
std::optional<ConditionCode> condition_code(Condition condition);

/// Column order of RegressionFit draws.
enum class Coefficient {
  mu_int,
  mu_post,
  mu_anlg,
  mu_point_est,
  sigma_int,
  sigma_post,
  sigma_anlg,
  sigma_point_est,
};

inline constexpr std::size_t kCoefficientCount = 8;
inline constexpr std::array<std::string_view, kCoefficientCount> kCoefficientNames{
    "mu_int",    "mu_post",    "mu_anlg",    "mu_pointEst",
    "sigma_int", "sigma_post", "sigma_anlg", "sigma_pointEst"};

struct LognormalObservation {
  double kld = 1.0;
  ConditionCode code;
};

struct RegressionConfig {
  SamplerConfig sampler;
  /// Normal(0, sd) priors; sd, not precision.
  double mu_prior_sd = 5.0;
  double sigma_prior_sd = 2.5;
  double rhat_threshold = 1.05;
  /// Minimum total kept draws across chains.
  std::size_t min_total_draws = 4000;
};

struct CoefficientSummary {
  std::string_view name;
  double mean = 0.0;
  double sd = 0.0;
  /// 95% percentile interval.
  double lower = 0.0;
  double upper = 0.0;
  double rhat = 1.0;
  double ess = 0.0;
};

/// Posterior draws of the bias (mu) and log-dispersion (sigma) submodels:
///   log kld ~ Normal(mu_int + mu_c, exp(sigma_int + sigma_c)).
struct RegressionFit {
  std::vector<std::array<double, kCoefficientCount>> draws;
  std::size_t chains = 0;
  std::size_t draws_per_chain = 0;
  std::array<CoefficientSummary, kCoefficientCount> coefficients{};
  /// chains x coefficients.
  std::vector<std::array<double, kCoefficientCount>> acceptance;
  std::size_t observations = 0;
  /// False when any split R-hat exceeds the threshold; never silently dropped.
  bool converged = false;

  const CoefficientSummary& summary(Coefficient c) const {
    return coefficients[static_cast<std::size_t>(c)];
  }
};

/// Log posterior (up to a constant) of the coefficient vector. Exposed for
/// tests and diagnostics.
class LognormalPosterior {
 public:
  LognormalPosterior(std::span<const LognormalObservation> observations, double mu_prior_sd,
                     double sigma_prior_sd);
  double operator()(std::span<const double> theta) const;

  std::size_t count(int cell) const { return cells_[cell].n; }
  double mean_log(int cell) const { return cells_[cell].mean; }

 private:
  // Per-cell sufficient statistics of log kld.
  struct Cell {
    std::size_t n = 0;
    double mean = 0.0;
    double centered_ss = 0.0;
  };
  std::array<Cell, 4> cells_{};
  double mu_prior_var_;
  double sigma_prior_var_;
};

/// Throws InvalidInput on an empty list or a non-positive / non-finite kld.
RegressionFit fit_lognormal_model(std::span<const LognormalObservation> observations,
                                  const RegressionConfig& config);

}  // namespace bayesassist
