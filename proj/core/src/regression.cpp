#include "bayesassist/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bayesassist/errors.hpp"
#include "bayesassist/stats.hpp"

namespace bayesassist {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Coefficient indices of the cell offsets; the reference cell has none.
constexpr std::array<int, 4> kMuOffset{-1, 1, 2, 3};
constexpr std::array<int, 4> kSigmaOffset{-1, 5, 6, 7};

}  // namespace

void ConditionCode::validate() const {
  if (int(post) + int(analogy) + int(point_est) > 1) {
    throw InvalidInput("at most one condition indicator may be set");
  }
}

int ConditionCode::cell() const {
  validate();
  if (post) return 1;
  if (analogy) return 2;
  if (point_est) return 3;
  return 0;
}

std::optional<ConditionCode> condition_code(Condition condition) {
  switch (condition) {
    case Condition::uncertainty_vis: return ConditionCode::reference();
    case Condition::posterior_vis: return ConditionCode{true, false, false};
    case Condition::analogy: return ConditionCode{false, true, false};
    case Condition::point_estimate: return ConditionCode{false, false, true};
    case Condition::no_elicit_point:
    case Condition::no_elicit_uncertainty: return std::nullopt;
  }
  return std::nullopt;
}

LognormalPosterior::LognormalPosterior(std::span<const LognormalObservation> observations,
                                       double mu_prior_sd, double sigma_prior_sd)
    : mu_prior_var_(mu_prior_sd * mu_prior_sd), sigma_prior_var_(sigma_prior_sd * sigma_prior_sd) {
  if (!(mu_prior_sd > 0.0) || !(sigma_prior_sd > 0.0)) {
    throw InvalidInput("prior standard deviations must be positive");
  }
  // Welford accumulation per cell.
  for (const auto& obs : observations) {
    if (!std::isfinite(obs.kld) || !(obs.kld > 0.0)) {
      throw InvalidInput("lognormal regression needs finite, strictly positive KLD values");
    }
    Cell& c = cells_[obs.code.cell()];
    const double y = std::log(obs.kld);
    ++c.n;
    const double delta = y - c.mean;
    c.mean += delta / static_cast<double>(c.n);
    c.centered_ss += delta * (y - c.mean);
  }
}

double LognormalPosterior::operator()(std::span<const double> theta) const {
  double lp = 0.0;
  for (int k = 0; k < 4; ++k) lp -= theta[k] * theta[k] / (2.0 * mu_prior_var_);
  for (int k = 4; k < 8; ++k) lp -= theta[k] * theta[k] / (2.0 * sigma_prior_var_);

  for (int cell = 0; cell < 4; ++cell) {
    const Cell& c = cells_[cell];
    if (c.n == 0) continue;
    const double mu = theta[0] + (kMuOffset[cell] >= 0 ? theta[kMuOffset[cell]] : 0.0);
    const double log_sigma = theta[4] + (kSigmaOffset[cell] >= 0 ? theta[kSigmaOffset[cell]] : 0.0);
    const double n = static_cast<double>(c.n);
    const double squares = c.centered_ss + n * (c.mean - mu) * (c.mean - mu);
    // squares / (2 sigma^2), in log space so tiny sigma cannot produce 0 * inf.
    double quadratic = 0.0;
    if (squares > 0.0) {
      quadratic = 0.5 * std::exp(std::log(squares) - 2.0 * log_sigma);
      if (!std::isfinite(quadratic)) return kNegInf;
    }
    lp -= n * log_sigma + quadratic;
  }
  return lp;
}

RegressionFit fit_lognormal_model(std::span<const LognormalObservation> observations,
                                  const RegressionConfig& config) {
  if (observations.empty()) throw InvalidInput("lognormal regression needs observations");
  const LognormalPosterior posterior(observations, config.mu_prior_sd, config.sigma_prior_sd);

  // Overdispersed starts: bias around the pooled log-KLD mean, dispersion
  // around the pooled log spread.
  std::vector<double> logs;
  logs.reserve(observations.size());
  for (const auto& o : observations) logs.push_back(std::log(o.kld));
  const double pooled_mean = mean_of(logs);
  double pooled_sd = logs.size() > 1 ? std::sqrt(sample_variance(logs)) : 1.0;
  if (!(pooled_sd > 1e-3)) pooled_sd = 1e-3;

  const Initializer init = [&](std::mt19937_64& rng) {
    std::normal_distribution<double> jitter(0.0, 1.0);
    std::vector<double> x(kCoefficientCount);
    x[0] = pooled_mean + jitter(rng);
    for (int k = 1; k < 4; ++k) x[k] = 0.5 * jitter(rng);
    x[4] = std::log(pooled_sd) + 0.5 * jitter(rng);
    for (int k = 5; k < 8; ++k) x[k] = 0.5 * jitter(rng);
    return x;
  };
  const LogDensity density = [&](std::span<const double> theta) { return posterior(theta); };
  const McmcResult mcmc = sample_metropolis(density, kCoefficientCount, init, config.sampler);

  RegressionFit fit;
  fit.chains = mcmc.chains.size();
  fit.draws_per_chain = mcmc.draws_per_chain;
  fit.observations = observations.size();
  fit.draws.reserve(fit.chains * fit.draws_per_chain);
  for (const auto& chain : mcmc.chains) {
    for (std::size_t i = 0; i < fit.draws_per_chain; ++i) {
      std::array<double, kCoefficientCount> row{};
      std::copy_n(chain.samples.begin() + static_cast<std::ptrdiff_t>(i * kCoefficientCount),
                  kCoefficientCount, row.begin());
      fit.draws.push_back(row);
    }
    std::array<double, kCoefficientCount> acc{};
    std::copy(chain.acceptance.begin(), chain.acceptance.end(), acc.begin());
    fit.acceptance.push_back(acc);
  }

  bool converged = fit.draws.size() >= config.min_total_draws;
  for (std::size_t k = 0; k < kCoefficientCount; ++k) {
    const auto per_chain = mcmc.coordinate(k);
    std::vector<double> all;
    all.reserve(fit.draws.size());
    for (const auto& c : per_chain) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    CoefficientSummary& s = fit.coefficients[k];
    s.name = kCoefficientNames[k];
    s.mean = mean_of(all);
    s.sd = all.size() > 1 ? std::sqrt(sample_variance(all)) : 0.0;
    s.lower = sorted_quantile(all, 0.025);
    s.upper = sorted_quantile(all, 0.975);
    s.rhat = split_rhat(per_chain);
    s.ess = effective_sample_size(per_chain);
    if (!(s.rhat <= config.rhat_threshold)) converged = false;
  }
  fit.converged = converged;
  return fit;
}

}  // namespace bayesassist
