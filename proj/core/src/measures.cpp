#include "dnt/measures.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dnt/error.hpp"

namespace dnt {

namespace {

void require_same_frame(const DNumber& d, const NonExclusivity& ne) {
  if (!(d.frame() == ne.frame()))
    throw Error(errc::frame_mismatch,
                "the D number and the non-exclusivity must share a frame");
}

void require_dense_size(const Frame& frame) {
  if (frame.size() > NonExclusivity::kMaxDenseSize)
    throw Error(errc::frame_too_large_for_dense,
                "dense measure tables are limited to frames of at most " +
                    std::to_string(NonExclusivity::kMaxDenseSize) +
                    " labels (frame has " + std::to_string(frame.size()) +
                    ")");
}

/// Track the largest residual and the first subset attaining it.
struct ResidualMax {
  double value = -std::numeric_limits<double>::infinity();
  SubsetIndex witness = 0;

  void offer(double residual, SubsetIndex subset) {
    if (residual > value) {
      value = residual;
      witness = subset;
    }
  }
};

}  // namespace

double bel(const DNumber& d, const NonExclusivity& ne, SubsetIndex a) {
  require_same_frame(d, ne);
  const SubsetIndex comp = d.frame().complement(a);
  double acc = 0.0;
  for (const auto& [subset, mass] : d.focal())
    if ((subset & ~a) == 0) acc += mass * (1.0 - ne.u(subset, comp));
  return acc;
}

double pl(const DNumber& d, const NonExclusivity& ne, SubsetIndex a) {
  require_same_frame(d, ne);
  d.frame().require_valid(a);
  double acc = 0.0;
  for (const auto& [subset, mass] : d.focal()) acc += ne.u(subset, a) * mass;
  return acc;
}

BeliefInterval belief_interval(const DNumber& d, const NonExclusivity& ne,
                               SubsetIndex a) {
  return {bel(d, ne, a), pl(d, ne, a)};
}

std::vector<double> bel_vector(const DNumber& d, const NonExclusivity& ne) {
  require_same_frame(d, ne);
  require_dense_size(d.frame());
  std::vector<double> out;
  out.reserve(d.frame().subset_count());
  for (const SubsetIndex a : d.frame().subsets()) out.push_back(bel(d, ne, a));
  return out;
}

std::vector<double> pl_vector(const DNumber& d, const NonExclusivity& ne) {
  require_same_frame(d, ne);
  require_dense_size(d.frame());
  std::vector<double> out;
  out.reserve(d.frame().subset_count());
  for (const SubsetIndex a : d.frame().subsets()) out.push_back(pl(d, ne, a));
  return out;
}

TheoremReport verify_theorems(const DNumber& d, const NonExclusivity& ne,
                              double duality_tolerance,
                              double ordering_tolerance) {
  require_same_frame(d, ne);
  const Frame& frame = d.frame();
  if (frame.size() > kMaxSweepSize)
    throw Error(errc::frame_too_large_for_sweep,
                "theorem sweeps are limited to frames of at most " +
                    std::to_string(kMaxSweepSize) + " labels (frame has " +
                    std::to_string(frame.size()) + ")");

  const std::size_t count = frame.subset_count();
  std::vector<double> bel_all(count), pl_all(count);
  for (const SubsetIndex a : frame.subsets()) {
    bel_all[a] = bel(d, ne, a);
    pl_all[a] = pl(d, ne, a);
  }

  const double s = d.total_mass();
  ResidualMax interval_order, belief_super, plausibility_sub, duality;
  for (const SubsetIndex a : frame.subsets()) {
    const SubsetIndex comp = frame.universe() & ~a;
    interval_order.offer(bel_all[a] - pl_all[a], a);
    belief_super.offer(bel_all[a] + bel_all[comp] - s, a);
    plausibility_sub.offer(s - (pl_all[a] + pl_all[comp]), a);
    duality.offer(std::abs(bel_all[a] + pl_all[comp] - s), a);
  }

  TheoremReport report;
  report.total_mass = s;
  report.subsets_checked = count;
  report.checks = {
      TheoremCheck{1, "Pl(A) >= Bel(A)", interval_order.value,
                   interval_order.witness, ordering_tolerance},
      TheoremCheck{2, "Bel(A) + Bel(A^c) <= s", belief_super.value,
                   belief_super.witness, ordering_tolerance},
      TheoremCheck{3, "Pl(A) + Pl(A^c) >= s", plausibility_sub.value,
                   plausibility_sub.witness, ordering_tolerance},
      TheoremCheck{4, "Bel(A) + Pl(A^c) = s", duality.value, duality.witness,
                   duality_tolerance},
  };
  return report;
}

}  // namespace dnt
