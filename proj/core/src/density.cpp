#include "bayesassist/density.hpp"

#include <cmath>

#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

constexpr double kEndpointNudge = 1e-6;
constexpr double kWindowTail = 1e-7;

double finite_density(const BetaBelief& belief, double x) {
  double d = belief.pdf(x);
  if (std::isfinite(d)) return d;
  const double nudged = x <= 0.5 ? x + kEndpointNudge : x - kEndpointNudge;
  d = belief.pdf(nudged);
  return std::isfinite(d) ? d : 0.0;
}

std::vector<DensityPoint> evenly_spaced(const BetaBelief& belief, double lo, double hi,
                                        std::size_t points) {
  if (points < 2) throw InvalidInput("a density polyline needs at least two points");
  std::vector<DensityPoint> out;
  out.reserve(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? hi : lo + step * static_cast<double>(i);
    out.push_back({x, finite_density(belief, x)});
  }
  return out;
}

}  // namespace

std::vector<DensityPoint> density_on_unit_grid(const BetaBelief& belief, std::size_t points) {
  return evenly_spaced(belief, 0.0, 1.0, points);
}

std::vector<DensityPoint> density_on_support_window(const BetaBelief& belief,
                                                    std::size_t points) {
  if (points < 2) throw InvalidInput("a density polyline needs at least two points");
  double lo = belief.quantile(kWindowTail);
  double hi = belief.quantile(1.0 - kWindowTail);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  if (lo <= step) lo = 0.0;
  if (1.0 - hi <= step) hi = 1.0;
  return evenly_spaced(belief, lo, hi, points);
}

double trapezoid_integral(std::span<const DensityPoint> polyline) {
  double total = 0.0;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    total += 0.5 * (polyline[i].x - polyline[i - 1].x) *
             (polyline[i].density + polyline[i - 1].density);
  }
  return total;
}

}  // namespace bayesassist
