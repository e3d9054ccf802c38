#pragma once

#include <span>
#include <vector>

namespace bayesassist {

double mean_of(std::span<const double> values);
double sample_variance(std::span<const double> values);

/// Quantile of already sorted data by linear interpolation between order
/// statistics (position p * (n - 1)).
double sorted_quantile(std::span<const double> sorted, double p);

/// Copies, sorts, then sorted_quantile().
double quantile(std::span<const double> values, double p);

double standard_normal_cdf(double z);

}  // namespace bayesassist
