#include "bayesassist/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

ChainTrace run_chain(const LogDensity& log_density, std::size_t dim,
                     const Initializer& initializer, const SamplerConfig& config, int chain) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed & 0xffffffffu),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(chain)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<double> x = initializer(rng);
  if (x.size() != dim) throw InvalidInput("initializer returned a point of the wrong dimension");
  double current = log_density(x);
  if (!std::isfinite(current)) {
    throw InvalidInput("sampler initial point has non-finite log density");
  }

  std::vector<double> log_step(dim, std::log(config.initial_step));
  std::vector<int> window_accepts(dim, 0);
  std::vector<long> kept_accepts(dim, 0);
  int window_index = 0;

  ChainTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(config.draws) * dim);

  const int total = config.warmup + config.draws;
  for (int iter = 0; iter < total; ++iter) {
    const bool warming = iter < config.warmup;
    for (std::size_t j = 0; j < dim; ++j) {
      const double old = x[j];
      x[j] = old + std::exp(log_step[j]) * gauss(rng);
      const double proposed = log_density(x);
      if (std::log(unif(rng)) < proposed - current) {
        current = proposed;
        if (warming) ++window_accepts[j];
        else ++kept_accepts[j];
      } else {
        x[j] = old;
      }
    }
    if (warming && (iter + 1) % config.adaptation_window == 0) {
      ++window_index;
      const double delta = std::min(0.5, 1.0 / std::sqrt(static_cast<double>(window_index)));
      for (std::size_t j = 0; j < dim; ++j) {
        const double rate = static_cast<double>(window_accepts[j]) / config.adaptation_window;
        if (rate < config.target_acceptance_low) log_step[j] -= delta;
        else if (rate > config.target_acceptance_high) log_step[j] += delta;
        window_accepts[j] = 0;
      }
    }
    if (!warming) trace.samples.insert(trace.samples.end(), x.begin(), x.end());
  }

  trace.acceptance.resize(dim);
  trace.step_sizes.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    trace.acceptance[j] =
        config.draws > 0 ? static_cast<double>(kept_accepts[j]) / config.draws : 0.0;
    trace.step_sizes[j] = std::exp(log_step[j]);
  }
  return trace;
}

double chain_mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double chain_var(const std::vector<double>& v, double mean) {
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace

std::vector<std::vector<double>> McmcResult::coordinate(std::size_t index) const {
  std::vector<std::vector<double>> out;
  out.reserve(chains.size());
  for (const auto& c : chains) {
    std::vector<double> v(draws_per_chain);
    for (std::size_t i = 0; i < draws_per_chain; ++i) v[i] = c.samples[i * dimension + index];
    out.push_back(std::move(v));
  }
  return out;
}

McmcResult sample_metropolis(const LogDensity& log_density, std::size_t dimension,
                             const Initializer& initializer, const SamplerConfig& config) {
  if (dimension == 0) throw InvalidInput("sampler dimension must be positive");
  if (config.chains < 1 || config.warmup < 0 || config.draws < 1 ||
      config.adaptation_window < 1) {
    throw InvalidInput("sampler needs >= 1 chain, >= 0 warmup, >= 1 draw");
  }
  McmcResult result;
  result.dimension = dimension;
  result.draws_per_chain = static_cast<std::size_t>(config.draws);
  result.chains.resize(static_cast<std::size_t>(config.chains));

  if (config.parallel && config.chains > 1) {
    std::vector<std::exception_ptr> errors(result.chains.size());
    std::vector<std::thread> workers;
    for (int c = 0; c < config.chains; ++c) {
      workers.emplace_back([&, c] {
        try {
          result.chains[c] = run_chain(log_density, dimension, initializer, config, c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (int c = 0; c < config.chains; ++c) {
      result.chains[c] = run_chain(log_density, dimension, initializer, config, c);
    }
  }
  return result;
}

double split_rhat(const std::vector<std::vector<double>>& chains) {
  std::vector<std::vector<double>> halves;
  for (const auto& c : chains) {
    const std::size_t half = c.size() / 2;
    if (half < 2) throw InvalidInput("split R-hat needs at least four draws per chain");
    halves.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
    halves.emplace_back(c.end() - static_cast<std::ptrdiff_t>(half), c.end());
  }
  const double n = static_cast<double>(halves.front().size());
  const double m = static_cast<double>(halves.size());
  std::vector<double> means;
  double within = 0.0;
  for (const auto& h : halves) {
    const double mu = chain_mean(h);
    means.push_back(mu);
    within += chain_var(h, mu);
  }
  within /= m;
  const double grand = chain_mean(means);
  double between = 0.0;
  for (double mu : means) between += (mu - grand) * (mu - grand);
  between *= n / (m - 1.0);
  if (within <= 0.0) {
    return between <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  const double var_plus = (n - 1.0) / n * within + between / n;
  return std::sqrt(var_plus / within);
}

double effective_sample_size(const std::vector<std::vector<double>>& chains) {
  if (chains.empty()) throw InvalidInput("effective sample size needs at least one chain");
  const std::size_t n = chains.front().size();
  const double m = static_cast<double>(chains.size());
  if (n < 4) throw InvalidInput("effective sample size needs at least four draws per chain");

  std::vector<double> means, vars;
  for (const auto& c : chains) {
    means.push_back(chain_mean(c));
    vars.push_back(chain_var(c, means.back()));
  }
  const double within = chain_mean(vars);
  double between = 0.0;
  if (chains.size() > 1) {
    const double grand = chain_mean(means);
    for (double mu : means) between += (mu - grand) * (mu - grand);
    between *= static_cast<double>(n) / (m - 1.0);
  }
  const double dn = static_cast<double>(n);
  const double var_plus = (dn - 1.0) / dn * within + between / dn;
  if (!(var_plus > 0.0)) return m * dn;

  // Mean over chains of the biased autocovariance at a lag.
  const auto autocovariance = [&](std::size_t lag) {
    double total = 0.0;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      double s = 0.0;
      for (std::size_t i = 0; i + lag < n; ++i) {
        s += (chains[c][i] - means[c]) * (chains[c][i + lag] - means[c]);
      }
      total += s / dn;
    }
    return total / m;
  };
  const auto rho = [&](std::size_t lag) {
    return 1.0 - (within - autocovariance(lag)) / var_plus;
  };

  double tau = -1.0;
  double previous_pair = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
    double pair = rho(2 * k) + rho(2 * k + 1);
    if (pair <= 0.0) break;
    pair = std::min(pair, previous_pair);  // initial monotone sequence
    tau += 2.0 * pair;
    previous_pair = pair;
  }
  return m * dn / std::max(tau, 1.0 / std::log10(m * dn));
}

}  // namespace bayesassist
