#pragma once

#include <string>
#include <string_view>

#include "bayesassist/beta_belief.hpp"
#include "bayesassist/text_catalog.hpp"

namespace bayesassist {

enum class Handle { lower, upper };

Handle parse_handle(std::string_view text);
std::string_view to_string(Handle handle);

/// Handle positions are quantised to 0.1 percentage points.
inline constexpr double kDragResolution = 0.001;
/// A handle dragged across the point estimate lands this far from it.
inline constexpr double kHandleClamp = 0.002;

/// Live state of the two-handle interval widget. `fitted` is the mode-pinned
/// Beta whose 95% HDI is [lower, upper]; the uniform state is shown as the
/// full range [0, 1].
struct ElicitationState {
  double point_estimate = 0.5;
  double lower = 0.0;
  double upper = 1.0;
  double kappa = 2.0;
  BetaBelief fitted = BetaBelief::uniform();
  std::string summary_text;

  /// Point estimate at 0 or 1: the lower (resp. upper) handle is pinned there.
  bool boundary_mode() const noexcept { return point_estimate <= 0.0 || point_estimate >= 1.0; }
  bool is_uniform() const noexcept { return kappa <= 2.0; }
};

ElicitationState begin_elicitation(double point_estimate,
                                   const TextCatalog& text = TextCatalog::defaults());

/// Moves one handle. The dragged position fixes kappa (by root-finding on the
/// HDI endpoint of the mode-pinned Beta); the other handle is then placed on
/// the opposite HDI endpoint. Dragging a handle onto its current position
/// returns the state unchanged.
ElicitationState drag_handle(const ElicitationState& state, Handle which, double new_value,
                             const TextCatalog& text = TextCatalog::defaults());

/// Rebuilds a state from its wire form (point, kappa); handles and summary are
/// recomputed from the Beta so a client cannot desynchronise them.
ElicitationState restore_elicitation(double point_estimate, double kappa,
                                     const TextCatalog& text = TextCatalog::defaults());

std::string summary_sentence(double point_estimate, double lower, double upper,
                             const TextCatalog& text = TextCatalog::defaults());

}  // namespace bayesassist
