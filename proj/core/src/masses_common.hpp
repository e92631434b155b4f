#ifndef DNT_SRC_MASSES_COMMON_HPP
#define DNT_SRC_MASSES_COMMON_HPP

#include <map>
#include <utility>
#include <vector>

#include "dnt/frame.hpp"

namespace dnt::detail {

struct CanonicalMasses {
  std::vector<std::pair<SubsetIndex, double>> focal;  // ascending, masses > 0
  double total = 0.0;  // accumulated in ascending SubsetIndex order
};

/// Shared validation for MassFunction and DNumber: subsets in range, masses
/// in [0,1], no positive empty-set mass, zero entries dropped. The sum
/// constraint differs between the two types and is checked by the caller.
CanonicalMasses canonicalize_masses(
    const Frame& frame, const std::map<SubsetIndex, double>& assignments);

/// Mass lookup by binary search; 0 for non-focal subsets.
double focal_mass(const std::vector<std::pair<SubsetIndex, double>>& focal,
                  SubsetIndex subset);

}  // namespace dnt::detail

#endif  // DNT_SRC_MASSES_COMMON_HPP
