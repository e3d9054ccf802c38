#include "bayesassist/assistance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bayesassist/errors.hpp"
#include "bayesassist/updating.hpp"

namespace bayesassist {

namespace {

std::string format_size(double kappa) {
  char buf[32];
  if (kappa == std::round(kappa) && kappa < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", kappa);
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", kappa);
  }
  return buf;
}

}  // namespace

std::string_view to_string(InformationReference reference) {
  return reference == InformationReference::prior_richer ? "prior_richer" : "data_richer";
}

double data_concentration(const ObservedData& data) {
  data.validate();
  return static_cast<double>(data.sample_size) + 2.0;
}

std::string format_multiplier(double multiplier) {
  char buf[32];
  if (multiplier >= 10.0) {
    std::snprintf(buf, sizeof buf, "%.0f", std::round(multiplier));
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", std::round(multiplier * 10.0) / 10.0);
  }
  return buf;
}

Analogy make_analogy(const BetaBelief& prior, const ObservedData& data, const TextCatalog& text) {
  const double kappa_prior = prior.concentration();
  if (kappa_prior < 2.0) throw InvalidInput("analogy needs a prior concentration of at least 2");
  const double kappa_data = data_concentration(data);

  Analogy out;
  out.prior_concentration = kappa_prior;
  out.data_concentration = kappa_data;
  out.reference = kappa_prior > kappa_data ? InformationReference::prior_richer
                                           : InformationReference::data_richer;
  out.multiplier = std::max(kappa_prior, kappa_data) / std::min(kappa_prior, kappa_data);
  out.display_multiplier = format_multiplier(out.multiplier);

  const TextCatalog::Variables vars{{"multiplier", out.display_multiplier},
                                    {"data_size", format_size(kappa_data)},
                                    {"prior_size", format_size(kappa_prior)}};
  if (kappa_prior == kappa_data) {
    out.sentence = text.render("analogy.equal", vars);
  } else if (out.reference == InformationReference::prior_richer) {
    out.sentence = text.render("analogy.prior_richer", vars);
  } else {
    out.sentence = text.render("analogy.data_richer", vars);
  }
  out.explanation = text.render("analogy.explanation", vars);
  return out;
}

PosteriorVisPayload make_posterior_vis(const BetaBelief& prior, const ObservedData& data,
                                       const TextCatalog& text) {
  PosteriorVisPayload out;
  out.posterior = posterior_update(prior, data);
  out.density_points = density_on_support_window(out.posterior);
  out.interval_95 = hdi(out.posterior, kDefaultMass);
  out.point_estimate = out.posterior.mean();
  const std::string analogy =
      prior.concentration() >= 2.0 ? make_analogy(prior, data, text).sentence : std::string();
  out.explanation = text.render("posterior_vis.explanation", {{"analogy", analogy}});
  return out;
}

}  // namespace bayesassist
