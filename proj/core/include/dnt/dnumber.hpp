#ifndef DNT_DNUMBER_HPP
#define DNT_DNUMBER_HPP

#include <map>
#include <utility>
#include <vector>

#include "dnt/frame.hpp"
#include "dnt/mass_function.hpp"

namespace dnt {

/// Whether a D number carries all of its mass; the deficit (1 - total mass,
/// clamped at 0) quantifies the missing information.
struct Completeness {
  enum class Kind { complete, incomplete };

  Kind kind = Kind::complete;
  double deficit = 0.0;

  bool is_complete() const noexcept { return kind == Kind::complete; }
};

/// Generalized mass assignment: masses over non-empty subsets whose total
/// may fall short of 1. The deficit is information, never an error, and is
/// never renormalized away; all measures accept incomplete D numbers as-is.
/// Immutable after construction.
class DNumber {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Rejects masses outside [0,1], positive mass on the empty set, and
  /// totals above 1 + kSumTolerance.
  DNumber(Frame frame, const std::map<SubsetIndex, double>& assignments);

  const Frame& frame() const noexcept { return frame_; }

  /// Focal elements in ascending SubsetIndex order; every stored mass > 0.
  const std::vector<std::pair<SubsetIndex, double>>& focal() const noexcept {
    return focal_;
  }

  /// Mass of one subset, 0 for non-focal subsets.
  double mass(SubsetIndex subset) const;

  /// Sum of all stored masses, accumulated in ascending SubsetIndex order.
  double total_mass() const noexcept { return total_mass_; }

  Completeness completeness() const noexcept;
  bool is_complete() const noexcept { return completeness().is_complete(); }

  /// The same masses as a classical BPA; requires a complete D number.
  MassFunction as_bpa() const;

  /// Dense mass vector in canonical order: entry k is mass(k), entry 0 is 0.
  /// Size 2^N; at the 24-label frame cap this is a 128 MiB allocation.
  std::vector<double> dense_vector() const;

 private:
  Frame frame_;
  std::vector<std::pair<SubsetIndex, double>> focal_;
  double total_mass_ = 0.0;
};

}  // namespace dnt

#endif  // DNT_DNUMBER_HPP
