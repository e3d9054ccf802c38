#include "bayesassist/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bayesassist/errors.hpp"

namespace bayesassist {

double mean_of(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("mean of an empty sample");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) throw InvalidInput("sample variance needs at least two values");
  const double m = mean_of(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return ss / static_cast<double>(values.size() - 1);
}

double sorted_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InvalidInput("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("quantile level must lie in [0, 1]");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || sorted[lo] == sorted[hi]) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double quantile(std::span<const double> values, double p) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_quantile(sorted, p);
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace bayesassist
