#ifndef DNT_MEASURES_HPP
#define DNT_MEASURES_HPP

#include <array>
#include <string_view>
#include <vector>

#include "dnt/belief_interval.hpp"
#include "dnt/dnumber.hpp"
#include "dnt/nonexclusivity.hpp"

namespace dnt {

/// Slack allowed on the ordering theorems (1, 2, 3).
inline constexpr double kOrderingTolerance = 1e-12;

/// Tolerance on the duality identity Bel(A) + Pl(A^c) = total mass
/// (theorem 4); wider than the ordering slack because it compares two
/// independently accumulated sums.
inline constexpr double kDualityTolerance = 1e-9;

/// Full-powerset theorem sweeps are capped at 2^20 subsets.
inline constexpr std::size_t kMaxSweepSize = 20;

/// Belief in A: mass of each focal subset contained in A, discounted by
/// that subset's non-exclusive degree with the complement of A. Focal
/// subsets are visited in ascending SubsetIndex order.
double bel(const DNumber& d, const NonExclusivity& ne, SubsetIndex a);

/// Plausibility of A: sum over all focal subsets of u(B, A) * mass(B), in
/// ascending SubsetIndex order. Subsets intersecting A contribute their full
/// mass (u = 1 there); disjoint subsets contribute their discounted mass.
double pl(const DNumber& d, const NonExclusivity& ne, SubsetIndex a);

/// [bel, pl] for one subset; lower <= upper.
BeliefInterval belief_interval(const DNumber& d, const NonExclusivity& ne,
                               SubsetIndex a);

/// Dense per-subset tables in canonical order, capped at 10-label frames.
std::vector<double> bel_vector(const DNumber& d, const NonExclusivity& ne);
std::vector<double> pl_vector(const DNumber& d, const NonExclusivity& ne);

/// One verified inequality or identity from the measure algebra.
struct TheoremCheck {
  int number = 0;            // 1..4
  std::string_view name;     // statement in terms of A, A^c, s
  double max_residual = 0.0; // largest residual over every subset A
  SubsetIndex witness = 0;   // first subset attaining max_residual
  double tolerance = 0.0;    // residual must not exceed this

  bool passed() const noexcept { return max_residual <= tolerance; }
};

/// Result of sweeping all four checks over every subset of the frame.
/// Residuals are oriented so that larger is worse and anything above the
/// check's tolerance is a violation:
///   1: Bel(A) - Pl(A)             <= ordering tolerance
///   2: Bel(A) + Bel(A^c) - s      <= ordering tolerance
///   3: s - (Pl(A) + Pl(A^c))      <= ordering tolerance
///   4: |Bel(A) + Pl(A^c) - s|     <= duality tolerance
/// where s is the D number's total mass (1 for complete D numbers).
struct TheoremReport {
  double total_mass = 0.0;
  std::size_t subsets_checked = 0;
  std::array<TheoremCheck, 4> checks;

  bool all_passed() const noexcept {
    for (const auto& check : checks)
      if (!check.passed()) return false;
    return true;
  }
};

/// Checks theorems 1-4 for every subset A of the frame. The measures are
/// treated as testable contracts: violations are reported with a witness,
/// never assumed away. Tolerances default to the library-wide constants;
/// tightening them to 0 demands bit-exact identities, which accumulated
/// rounding does not generally satisfy.
TheoremReport verify_theorems(const DNumber& d, const NonExclusivity& ne,
                              double duality_tolerance = kDualityTolerance,
                              double ordering_tolerance = kOrderingTolerance);

}  // namespace dnt

#endif  // DNT_MEASURES_HPP
