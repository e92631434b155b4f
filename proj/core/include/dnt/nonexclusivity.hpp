#ifndef DNT_NONEXCLUSIVITY_HPP
#define DNT_NONEXCLUSIVITY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dnt/dense_matrix.hpp"
#include "dnt/frame.hpp"

namespace dnt {

enum class NonExclusivityStrategy : std::uint8_t {
  exclusive,       // classical limit: disjoint subsets have degree 0
  element_derived, // subset degree = max over cross element pairs
  explicit_table,  // disjoint subset pairs listed directly
};

/// Canonical lowercase names used in instance files and reports.
std::string_view to_string(NonExclusivityStrategy strategy) noexcept;

/// Degree for one unordered pair of frame elements.
struct ElementPairDegree {
  std::string first;
  std::string second;
  double degree = 0.0;
};

/// Degree for one unordered pair of disjoint non-empty subsets.
struct SubsetPairDegree {
  SubsetIndex first = 0;
  SubsetIndex second = 0;
  double degree = 0.0;
};

/// Symmetric assignment of non-exclusive degrees u(Bi, Bj) over subset
/// pairs. Two rules hold regardless of strategy and cannot be overridden:
/// intersecting pairs have degree 1, and any pair involving the empty set
/// has degree 0. Unspecified disjoint pairs default to 0, which is the
/// classical Dempster-Shafer limit. Immutable; evaluation is pure.
class NonExclusivity {
 public:
  /// Dense 2^N x 2^N materialization is capped at N = 10 (8 MiB of doubles).
  static constexpr std::size_t kMaxDenseSize = 10;

  /// Every disjoint pair gets degree 0.
  static NonExclusivity exclusive(Frame frame);

  /// Degrees given per element pair; the degree of two disjoint subsets is
  /// the maximum over all cross pairs of their elements. Listing a pair
  /// twice with different degrees, or pairing an element with itself, is
  /// rejected.
  static NonExclusivity element_derived(Frame frame,
                                        std::span<const ElementPairDegree> pairs);

  /// Degrees given directly per disjoint subset pair. Entries keying
  /// intersecting pairs are rejected rather than corrected, as are
  /// contradicting symmetric duplicates.
  static NonExclusivity explicit_table(Frame frame,
                                       std::span<const SubsetPairDegree> entries);

  const Frame& frame() const noexcept { return frame_; }
  NonExclusivityStrategy strategy() const noexcept { return strategy_; }

  /// The non-exclusive degree of one subset pair. Symmetric in its
  /// arguments; 1 on intersecting pairs, 0 whenever either side is empty.
  double u(SubsetIndex a, SubsetIndex b) const;

  /// Entry (i, j) = u(subset i, subset j) in canonical order. Symmetric with
  /// zero row and column 0 and unit diagonal elsewhere.
  DenseMatrix matrix() const;

 private:
  NonExclusivity(Frame frame, NonExclusivityStrategy strategy);

  static std::uint64_t pair_key(SubsetIndex a, SubsetIndex b) noexcept;

  Frame frame_;
  NonExclusivityStrategy strategy_;
  std::vector<double> element_degrees_;  // N*N, element_derived only
  std::unordered_map<std::uint64_t, double> pair_degrees_;  // explicit_table
};

}  // namespace dnt

#endif  // DNT_NONEXCLUSIVITY_HPP
