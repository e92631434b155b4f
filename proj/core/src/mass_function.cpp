#include "dnt/mass_function.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dnt/error.hpp"
#include "masses_common.hpp"

namespace dnt {

MassFunction::MassFunction(Frame frame,
                           const std::map<SubsetIndex, double>& assignments)
    : frame_(std::move(frame)) {
  auto canonical = detail::canonicalize_masses(frame_, assignments);
  if (std::abs(canonical.total - 1.0) > kSumTolerance)
    throw Error(errc::sum_not_one,
                "masses of a BPA must sum to 1 (got " +
                    std::to_string(canonical.total) + ")");
  focal_ = std::move(canonical.focal);
}

double MassFunction::mass(SubsetIndex subset) const {
  frame_.require_valid(subset);
  return detail::focal_mass(focal_, subset);
}

double MassFunction::bel(SubsetIndex subset) const {
  frame_.require_valid(subset);
  double acc = 0.0;
  for (const auto& [focal_set, value] : focal_)
    if ((focal_set & ~subset) == 0) acc += value;
  return acc;
}

double MassFunction::pl(SubsetIndex subset) const {
  frame_.require_valid(subset);
  double acc = 0.0;
  for (const auto& [focal_set, value] : focal_)
    if ((focal_set & subset) != 0) acc += value;
  return acc;
}

}  // namespace dnt
