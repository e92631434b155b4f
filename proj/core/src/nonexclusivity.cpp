#include "dnt/nonexclusivity.hpp"

#include <bit>
#include <utility>

#include "dnt/error.hpp"

namespace dnt {

namespace {

void require_degree_in_range(double degree, const std::string& pair_text) {
  if (!(degree >= 0.0 && degree <= 1.0))
    throw Error(errc::value_out_of_range,
                "non-exclusive degree for " + pair_text + " is " +
                    std::to_string(degree) + "; degrees must lie in [0,1]");
}

}  // namespace

std::string_view to_string(NonExclusivityStrategy strategy) noexcept {
  switch (strategy) {
    case NonExclusivityStrategy::exclusive: return "exclusive";
    case NonExclusivityStrategy::element_derived: return "element_derived";
    case NonExclusivityStrategy::explicit_table: return "explicit_table";
  }
  return "unknown";
}

NonExclusivity::NonExclusivity(Frame frame, NonExclusivityStrategy strategy)
    : frame_(std::move(frame)), strategy_(strategy) {}

std::uint64_t NonExclusivity::pair_key(SubsetIndex a, SubsetIndex b) noexcept {
  const auto lo = a < b ? a : b;
  const auto hi = a < b ? b : a;
  return (std::uint64_t{lo} << 32) | hi;
}

NonExclusivity NonExclusivity::exclusive(Frame frame) {
  return NonExclusivity(std::move(frame), NonExclusivityStrategy::exclusive);
}

NonExclusivity NonExclusivity::element_derived(
    Frame frame, std::span<const ElementPairDegree> pairs) {
  NonExclusivity ne(std::move(frame), NonExclusivityStrategy::element_derived);
  const std::size_t n = ne.frame_.size();
  ne.element_degrees_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) ne.element_degrees_[i * n + i] = 1.0;

  std::unordered_map<std::uint64_t, double> seen;
  for (const auto& pair : pairs) {
    const auto x = ne.frame_.position_of(pair.first);
    const auto y = ne.frame_.position_of(pair.second);
    const auto pair_text = "(" + pair.first + ", " + pair.second + ")";
    if (x == y)
      throw Error(errc::pair_not_disjoint,
                  "the degree of " + pair_text +
                      " is fixed at 1 because the elements intersect");
    require_degree_in_range(pair.degree, pair_text);
    const auto key = pair_key(static_cast<SubsetIndex>(x),
                              static_cast<SubsetIndex>(y));
    if (auto it = seen.find(key); it != seen.end()) {
      if (it->second != pair.degree)
        throw Error(errc::conflicting_symmetric_entries,
                    "degree for " + pair_text +
                        " was already given with a different value; "
                        "symmetric duplicates must agree");
      continue;
    }
    seen.emplace(key, pair.degree);
    ne.element_degrees_[x * n + y] = pair.degree;
    ne.element_degrees_[y * n + x] = pair.degree;
  }
  return ne;
}

NonExclusivity NonExclusivity::explicit_table(
    Frame frame, std::span<const SubsetPairDegree> entries) {
  NonExclusivity ne(std::move(frame), NonExclusivityStrategy::explicit_table);
  for (const auto& entry : entries) {
    ne.frame_.require_valid(entry.first);
    ne.frame_.require_valid(entry.second);
    const auto pair_text = "(" + ne.frame_.format_subset(entry.first) + ", " +
                           ne.frame_.format_subset(entry.second) + ")";
    if (entry.first == 0 || entry.second == 0)
      throw Error(errc::invalid_subset,
                  "non-exclusivity entries must pair non-empty subsets; the "
                  "empty set's degrees are fixed at 0");
    if ((entry.first & entry.second) != 0)
      throw Error(errc::pair_not_disjoint,
                  "the degree of " + pair_text +
                      " is fixed at 1 because the subsets intersect");
    require_degree_in_range(entry.degree, pair_text);
    const auto key = pair_key(entry.first, entry.second);
    if (auto it = ne.pair_degrees_.find(key); it != ne.pair_degrees_.end()) {
      if (it->second != entry.degree)
        throw Error(errc::conflicting_symmetric_entries,
                    "degree for " + pair_text +
                        " was already given with a different value; "
                        "symmetric duplicates must agree");
      continue;
    }
    ne.pair_degrees_.emplace(key, entry.degree);
  }
  return ne;
}

double NonExclusivity::u(SubsetIndex a, SubsetIndex b) const {
  frame_.require_valid(a);
  frame_.require_valid(b);
  if (a == 0 || b == 0) return 0.0;
  if ((a & b) != 0) return 1.0;
  switch (strategy_) {
    case NonExclusivityStrategy::exclusive:
      return 0.0;
    case NonExclusivityStrategy::element_derived: {
      const std::size_t n = frame_.size();
      double best = 0.0;
      for (SubsetIndex rest_a = a; rest_a != 0; rest_a &= rest_a - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(rest_a));
        for (SubsetIndex rest_b = b; rest_b != 0; rest_b &= rest_b - 1) {
          const auto y = static_cast<std::size_t>(std::countr_zero(rest_b));
          const double degree = element_degrees_[x * n + y];
          if (degree > best) best = degree;
        }
      }
      return best;
    }
    case NonExclusivityStrategy::explicit_table: {
      const auto it = pair_degrees_.find(pair_key(a, b));
      return it == pair_degrees_.end() ? 0.0 : it->second;
    }
  }
  return 0.0;  // unreachable
}

DenseMatrix NonExclusivity::matrix() const {
  if (frame_.size() > kMaxDenseSize)
    throw Error(errc::frame_too_large_for_dense,
                "dense matrices are limited to frames of at most " +
                    std::to_string(kMaxDenseSize) + " labels (frame has " +
                    std::to_string(frame_.size()) + ")");
  const std::size_t count = frame_.subset_count();
  auto m = DenseMatrix::zero(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      const double degree =
          u(static_cast<SubsetIndex>(i), static_cast<SubsetIndex>(j));
      m.at(i, j) = degree;
      m.at(j, i) = degree;
    }
  }
  return m;
}

}  // namespace dnt
