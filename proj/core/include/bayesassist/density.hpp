#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bayesassist/beta_belief.hpp"

namespace bayesassist {

inline constexpr std::size_t kDensityPolylinePoints = 257;

struct DensityPoint {
  double x = 0.0;
  double density = 0.0;
};

/// Density at `points` evenly spaced abscissae spanning [0, 1]. Unbounded
/// endpoint densities are evaluated one part in 1e6 inside the boundary.
std::vector<DensityPoint> density_on_unit_grid(const BetaBelief& belief,
                                               std::size_t points = kDensityPolylinePoints);

/// Density at `points` evenly spaced abscissae spanning the central
/// 1 - 2e-7 of the distribution, snapped out to 0 or 1 when the window comes
/// within one grid step of the boundary. Resolves narrow posteriors that a
/// fixed [0, 1] grid would step over.
std::vector<DensityPoint> density_on_support_window(const BetaBelief& belief,
                                                    std::size_t points = kDensityPolylinePoints);

double trapezoid_integral(std::span<const DensityPoint> polyline);

}  // namespace bayesassist
