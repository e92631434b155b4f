#include "dnt/dnumber.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dnt/error.hpp"
#include "masses_common.hpp"

namespace dnt {

DNumber::DNumber(Frame frame, const std::map<SubsetIndex, double>& assignments)
    : frame_(std::move(frame)) {
  auto canonical = detail::canonicalize_masses(frame_, assignments);
  if (canonical.total > 1.0 + kSumTolerance)
    throw Error(errc::sum_exceeds_one,
                "masses of a D number must sum to at most 1 (got " +
                    std::to_string(canonical.total) + ")");
  focal_ = std::move(canonical.focal);
  total_mass_ = canonical.total;
}

double DNumber::mass(SubsetIndex subset) const {
  frame_.require_valid(subset);
  return detail::focal_mass(focal_, subset);
}

Completeness DNumber::completeness() const noexcept {
  const double deficit = std::max(0.0, 1.0 - total_mass_);
  const auto kind = deficit <= kSumTolerance ? Completeness::Kind::complete
                                             : Completeness::Kind::incomplete;
  return {kind, deficit};
}

MassFunction DNumber::as_bpa() const {
  if (!is_complete())
    throw Error(errc::not_complete,
                "only an information-complete D number is a BPA; total mass "
                "is " + std::to_string(total_mass_));
  std::map<SubsetIndex, double> assignments(focal_.begin(), focal_.end());
  return MassFunction(frame_, assignments);
}

std::vector<double> DNumber::dense_vector() const {
  std::vector<double> dense(frame_.subset_count(), 0.0);
  for (const auto& [subset, value] : focal_) dense[subset] = value;
  return dense;
}

}  // namespace dnt
