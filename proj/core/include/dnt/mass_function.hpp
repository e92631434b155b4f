#ifndef DNT_MASS_FUNCTION_HPP
#define DNT_MASS_FUNCTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "dnt/belief_interval.hpp"
#include "dnt/frame.hpp"

namespace dnt {

/// Classical basic probability assignment: masses over non-empty subsets
/// that sum to exactly 1 (within kSumTolerance). Zero entries are dropped at
/// construction so equal assignments have equal focal sets. Immutable.
///
/// Serves as the degeneration target for the generalized measures: a
/// complete DNumber under a fully exclusive non-exclusivity evaluates to the
/// same belief and plausibility this type computes directly.
class MassFunction {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Rejects masses outside [0,1], positive mass on the empty set, and
  /// totals off 1 by more than kSumTolerance. No silent renormalization.
  MassFunction(Frame frame, const std::map<SubsetIndex, double>& assignments);

  const Frame& frame() const noexcept { return frame_; }

  /// Focal elements in ascending SubsetIndex order; every stored mass > 0.
  const std::vector<std::pair<SubsetIndex, double>>& focal() const noexcept {
    return focal_;
  }

  /// Mass of one subset, 0 for non-focal subsets.
  double mass(SubsetIndex subset) const;

  /// Sum of masses of all focal subsets contained in `subset`.
  double bel(SubsetIndex subset) const;

  /// Sum of masses of all focal subsets intersecting `subset`.
  double pl(SubsetIndex subset) const;

  BeliefInterval belief_interval(SubsetIndex subset) const {
    return {bel(subset), pl(subset)};
  }

 private:
  Frame frame_;
  std::vector<std::pair<SubsetIndex, double>> focal_;
};

}  // namespace dnt

#endif  // DNT_MASS_FUNCTION_HPP
