#include "bayesassist/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

void check_mass(double mass) {
  if (!(mass > 0.0 && mass < 1.0)) throw InvalidInput("interval mass must lie in (0, 1)");
}

}  // namespace

CredibleInterval equal_tailed_interval(const BetaBelief& belief, double mass) {
  check_mass(mass);
  const double tail = 0.5 * (1.0 - mass);
  return {belief.quantile(tail), belief.quantile(1.0 - tail), IntervalKind::equal_tailed_fallback};
}

CredibleInterval hdi(const BetaBelief& belief, double mass) {
  check_mass(mass);
  const double a = belief.alpha();
  const double b = belief.beta();

  if (belief.concentration() <= 2.0 + kDegenerateConcentrationSlack || (a <= 1.0 && b <= 1.0)) {
    return equal_tailed_interval(belief, mass);
  }
  if (a <= 1.0) return {0.0, belief.quantile(mass), IntervalKind::one_sided_lower};
  if (b <= 1.0) return {belief.quantile(1.0 - mass), 1.0, IntervalKind::one_sided_upper};

  if (a == b) {
    CredibleInterval symmetric = equal_tailed_interval(belief, mass);
    symmetric.kind = IntervalKind::highest_density;
    return symmetric;
  }

  // Root of log pdf(lower) - log pdf(upper) in the lower-tail mass; the
  // difference rises from -inf at tail 0 to +inf at tail 1 - mass.
  const auto finite = [](double x) { return std::clamp(x, -1e300, 1e300); };
  const auto imbalance = [&](double tail) {
    const double upper_tail = std::min(1.0, tail + mass);
    return finite(belief.log_pdf(belief.quantile(tail))) -
           finite(belief.log_pdf(belief.quantile(upper_tail)));
  };
  std::uintmax_t max_iter = 300;
  const double span = 1.0 - mass;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      imbalance, 0.0, span, imbalance(0.0), imbalance(span),
      boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 3), max_iter);
  const double tail = 0.5 * (lo + hi);
  return {belief.quantile(tail), belief.quantile(std::min(1.0, tail + mass)),
          IntervalKind::highest_density};
}

}  // namespace bayesassist
