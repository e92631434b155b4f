#include "masses_common.hpp"

#include <algorithm>
#include <string>

#include "dnt/error.hpp"

namespace dnt::detail {

CanonicalMasses canonicalize_masses(
    const Frame& frame, const std::map<SubsetIndex, double>& assignments) {
  CanonicalMasses out;
  out.focal.reserve(assignments.size());
  // std::map iterates keys ascending, which is the canonical order.
  for (const auto& [subset, value] : assignments) {
    frame.require_valid(subset);
    if (!(value >= 0.0 && value <= 1.0))
      throw Error(errc::mass_out_of_range,
                  "mass for subset '" + frame.format_subset(subset) +
                      "' is " + std::to_string(value) +
                      "; masses must lie in [0,1]");
    if (subset == 0 && value > 0.0)
      throw Error(errc::empty_set_mass,
                  "the empty set must carry zero mass (got " +
                      std::to_string(value) + ")");
    if (value == 0.0) continue;  // canonical form stores positive masses only
    out.focal.emplace_back(subset, value);
    out.total += value;
  }
  return out;
}

double focal_mass(const std::vector<std::pair<SubsetIndex, double>>& focal,
                  SubsetIndex subset) {
  auto it = std::lower_bound(
      focal.begin(), focal.end(), subset,
      [](const auto& entry, SubsetIndex key) { return entry.first < key; });
  if (it != focal.end() && it->first == subset) return it->second;
  return 0.0;
}

}  // namespace dnt::detail
