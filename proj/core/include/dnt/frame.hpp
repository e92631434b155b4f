#ifndef DNT_FRAME_HPP
#define DNT_FRAME_HPP

#include <cstdint>
#include <initializer_list>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/error.hpp"

namespace dnt {

/// One subset of a frame, encoded as a bitmask: bit i set means the element
/// at label position i is a member. 0 is the empty set, 2^N - 1 the whole
/// frame. Ascending integer order is the canonical subset order everywhere
/// (vectors, matrices, tables, summations).
using SubsetIndex = std::uint32_t;

/// Placeholder used when rendering the empty set; never a legal label.
inline constexpr std::string_view kEmptySetSymbol = "∅";  // ∅

/// Frame of discernment: an ordered finite universe of distinct labels.
/// Label order is fixed at construction and defines the bit positions of
/// every SubsetIndex derived from this frame. Immutable and freely shareable
/// across threads.
class Frame {
 public:
  /// Per-query subset sweeps cost O(2^N); 24 bits keeps them interactive.
  static constexpr std::size_t kMaxSize = 24;

  /// Labels must be distinct, non-empty, contain no whitespace and no '|'
  /// (the subset-expression separator), and there may be at most kMaxSize
  /// of them.
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  SubsetIndex subset_count() const noexcept {
    return SubsetIndex{1} << labels_.size();
  }
  SubsetIndex universe() const noexcept { return subset_count() - 1; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t position) const;

  /// Bit position of a label; throws unknown_label.
  std::size_t position_of(std::string_view label) const;

  /// Subset holding exactly one element.
  SubsetIndex singleton(std::string_view label) const;

  /// Bitmask with the listed members' bits set. Repeats are idempotent.
  SubsetIndex encode(std::span<const std::string> members) const;
  SubsetIndex encode(std::initializer_list<std::string_view> members) const;

  /// Member labels of a subset in label order.
  std::vector<std::string> members(SubsetIndex subset) const;

  SubsetIndex complement(SubsetIndex subset) const {
    require_valid(subset);
    return universe() & ~subset;
  }

  bool valid(SubsetIndex subset) const noexcept {
    return subset < subset_count();
  }
  void require_valid(SubsetIndex subset) const;

  /// All subsets in canonical (ascending bitmask) order: 0 .. 2^N - 1.
  auto subsets() const {
    return std::views::iota(SubsetIndex{0}, subset_count());
  }

  /// "a|c" for {a,c}, "∅" for the empty set.
  std::string format_subset(SubsetIndex subset) const;

  /// Inverse of format_subset for non-empty expressions: labels joined by
  /// '|', whitespace around tokens ignored. Blank expressions and empty
  /// tokens are parse errors; the empty set has no parsable spelling.
  SubsetIndex parse_subset(std::string_view expression) const;

  bool operator==(const Frame& other) const noexcept {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

}  // namespace dnt

#endif  // DNT_FRAME_HPP
