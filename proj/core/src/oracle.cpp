#include "dnt/oracle.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dnt/error.hpp"

namespace dnt::oracle {

namespace {

void require_same_frame(const DNumber& d, const NonExclusivity& ne) {
  if (!(d.frame() == ne.frame()))
    throw Error(errc::frame_mismatch,
                "the D number and the non-exclusivity must share a frame");
}

void require_oracle_size(const Frame& frame) {
  if (frame.size() > kMaxOracleSize)
    throw Error(errc::frame_too_large_for_oracle,
                "exhaustive reference evaluation is limited to frames of at "
                "most " + std::to_string(kMaxOracleSize) + " labels");
}

/// Uniform double in [0,1) from the top 53 bits; identical on every platform
/// because the mt19937_64 sequence itself is pinned by the standard.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double positive_unit_draw(std::mt19937_64& rng) {
  double x = unit_draw(rng);
  while (x < 1e-12) x = unit_draw(rng);
  return x;
}

}  // namespace

double bel(const DNumber& d, const NonExclusivity& ne, SubsetIndex a) {
  require_same_frame(d, ne);
  require_oracle_size(d.frame());
  const SubsetIndex comp = d.frame().complement(a);
  double acc = 0.0;
  for (const SubsetIndex b : d.frame().subsets())
    acc += d.mass(b) * (1.0 - ne.u(b, comp));
  return acc;
}

double pl(const DNumber& d, const NonExclusivity& ne, SubsetIndex a) {
  require_same_frame(d, ne);
  require_oracle_size(d.frame());
  d.frame().require_valid(a);
  double acc = 0.0;
  for (const SubsetIndex b : d.frame().subsets()) {
    if ((b & a) != 0)
      acc += d.mass(b);
    else
      acc += ne.u(b, a) * d.mass(b);
  }
  return acc;
}

RandomInstance random_instance(std::uint64_t seed, std::size_t frame_size,
                               NonExclusivityStrategy strategy,
                               bool complete) {
  if (frame_size < 1 || frame_size > 8)
    throw Error(errc::value_out_of_range,
                "random instances support frame sizes 1 through 8 (got " +
                    std::to_string(frame_size) + ")");
  std::mt19937_64 rng(seed);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < frame_size; ++i)
    labels.emplace_back(1, static_cast<char>('a' + i));
  Frame frame(std::move(labels));

  // Focal subsets: distinct draws from the non-empty subsets.
  const SubsetIndex universe = frame.universe();
  const std::size_t max_focal =
      std::min<std::size_t>(universe, 10);
  const std::size_t focal_count = 1 + rng() % max_focal;
  std::set<SubsetIndex> chosen;
  while (chosen.size() < focal_count)
    chosen.insert(static_cast<SubsetIndex>(1 + rng() % universe));

  // Masses: positive draws scaled to the target total.
  std::vector<double> raw;
  double raw_sum = 0.0;
  for (std::size_t i = 0; i < focal_count; ++i) {
    raw.push_back(positive_unit_draw(rng));
    raw_sum += raw.back();
  }
  double target = 1.0;
  if (!complete) {
    target = unit_draw(rng);
    while (target <= 1e-6 || target >= 1.0 - 1e-6) target = unit_draw(rng);
  }
  std::map<SubsetIndex, double> assignments;
  std::size_t index = 0;
  for (const SubsetIndex subset : chosen)
    assignments[subset] = raw[index++] / raw_sum * target;
  DNumber dnumber(frame, assignments);

  switch (strategy) {
    case NonExclusivityStrategy::exclusive:
      return {std::move(dnumber), NonExclusivity::exclusive(frame)};
    case NonExclusivityStrategy::element_derived: {
      std::vector<ElementPairDegree> pairs;
      for (std::size_t i = 0; i < frame.size(); ++i) {
        for (std::size_t j = i + 1; j < frame.size(); ++j) {
          const bool include = unit_draw(rng) < 0.5;
          const double degree = unit_draw(rng);
          if (include)
            pairs.push_back({frame.label(i), frame.label(j), degree});
        }
      }
      return {std::move(dnumber),
              NonExclusivity::element_derived(frame, pairs)};
    }
    case NonExclusivityStrategy::explicit_table: {
      std::vector<SubsetPairDegree> entries;
      for (SubsetIndex i = 1; i <= universe; ++i) {
        for (SubsetIndex j = i + 1; j <= universe; ++j) {
          if ((i & j) != 0) continue;
          const bool include = unit_draw(rng) < 0.5;
          const double degree = unit_draw(rng);
          if (include) entries.push_back({i, j, degree});
        }
      }
      return {std::move(dnumber),
              NonExclusivity::explicit_table(frame, entries)};
    }
  }
  throw Error(errc::value_out_of_range, "unknown non-exclusivity strategy");
}

}  // namespace dnt::oracle
