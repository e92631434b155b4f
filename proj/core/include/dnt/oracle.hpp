#ifndef DNT_ORACLE_HPP
#define DNT_ORACLE_HPP

#include <cstdint>

#include "dnt/dnumber.hpp"
#include "dnt/nonexclusivity.hpp"

namespace dnt::oracle {

/// Exhaustive loops over all 2^N subsets are capped here.
inline constexpr std::size_t kMaxOracleSize = 16;

/// Belief by the full-powerset form: iterate every subset B of the frame,
/// focal or not, and accumulate mass(B) * (1 - u(B, complement of A)).
/// Deliberately a different written form than dnt::bel, which filters to
/// focal subsets contained in A; the two must agree on every input.
double bel(const DNumber& d, const NonExclusivity& ne, SubsetIndex a);

/// Plausibility by the two-branch form: subsets intersecting A contribute
/// their full mass, disjoint ones contribute u(B, A) * mass(B). Again a
/// different written form than dnt::pl, which folds both branches into
/// u(B, A) * mass(B) over focal subsets.
double pl(const DNumber& d, const NonExclusivity& ne, SubsetIndex a);

/// A generated test instance: a D number and a non-exclusivity on one frame.
struct RandomInstance {
  DNumber dnumber;
  NonExclusivity nonexclusivity;
};

/// Deterministic instance generator: a pure function of its arguments, so
/// equal seeds reproduce equal instances on every platform. Frame sizes 1-8;
/// labels are "a", "b", ... Focal subsets are drawn distinct, masses are
/// scaled to total exactly 1 (complete) or to a uniform draw in (0,1)
/// (incomplete); non-exclusive degrees are drawn per strategy.
RandomInstance random_instance(std::uint64_t seed, std::size_t frame_size,
                               NonExclusivityStrategy strategy, bool complete);

}  // namespace dnt::oracle

#endif  // DNT_ORACLE_HPP
