#include "dnt/frame.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace dnt {

namespace {

bool label_has_forbidden_char(std::string_view label) {
  return std::ranges::any_of(label, [](unsigned char c) {
    return c == '|' || std::isspace(c) != 0;
  });
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty())
    throw Error(errc::empty_frame, "a frame must contain at least one label");
  if (labels_.size() > kMaxSize)
    throw Error(errc::frame_too_large,
                "a frame may contain at most " + std::to_string(kMaxSize) +
                    " labels (got " + std::to_string(labels_.size()) + ")");
  for (const auto& label : labels_) {
    if (label.empty())
      throw Error(errc::invalid_label, "frame labels must be non-empty");
    if (label == kEmptySetSymbol)
      throw Error(errc::invalid_label,
                  "the label '" + label + "' is reserved for the empty set");
    if (label_has_forbidden_char(label))
      throw Error(errc::invalid_label,
                  "frame label '" + label +
                      "' must not contain '|' or whitespace");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw Error(errc::duplicate_label,
                    "frame labels must be distinct; '" + labels_[i] +
                        "' appears more than once");
}

const std::string& Frame::label(std::size_t position) const {
  if (position >= labels_.size())
    throw Error(errc::invalid_subset,
                "label position " + std::to_string(position) +
                    " is outside a frame of size " +
                    std::to_string(labels_.size()));
  return labels_[position];
}

std::size_t Frame::position_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(errc::unknown_label,
              "'" + std::string(label) + "' is not a label of this frame");
}

SubsetIndex Frame::singleton(std::string_view label) const {
  return SubsetIndex{1} << position_of(label);
}

SubsetIndex Frame::encode(std::span<const std::string> members) const {
  SubsetIndex bits = 0;
  for (const auto& member : members) bits |= singleton(member);
  return bits;
}

SubsetIndex Frame::encode(
    std::initializer_list<std::string_view> members) const {
  SubsetIndex bits = 0;
  for (auto member : members) bits |= singleton(member);
  return bits;
}

std::vector<std::string> Frame::members(SubsetIndex subset) const {
  require_valid(subset);
  std::vector<std::string> result;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (subset & (SubsetIndex{1} << i)) result.push_back(labels_[i]);
  return result;
}

void Frame::require_valid(SubsetIndex subset) const {
  if (!valid(subset))
    throw Error(errc::invalid_subset,
                "subset index " + std::to_string(subset) +
                    " is outside a frame with " +
                    std::to_string(subset_count()) + " subsets");
}

std::string Frame::format_subset(SubsetIndex subset) const {
  require_valid(subset);
  if (subset == 0) return std::string(kEmptySetSymbol);
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!(subset & (SubsetIndex{1} << i))) continue;
    if (!out.empty()) out += '|';
    out += labels_[i];
  }
  return out;
}

SubsetIndex Frame::parse_subset(std::string_view expression) const {
  if (trim(expression).empty())
    throw Error(errc::parse_error,
                "subset expression must name at least one label");
  SubsetIndex bits = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = expression.find('|', start);
    const auto token =
        trim(expression.substr(start, bar == std::string_view::npos
                                          ? std::string_view::npos
                                          : bar - start));
    if (token.empty())
      throw Error(errc::parse_error,
                  "empty label in subset expression '" +
                      std::string(expression) + "'");
    bits |= singleton(token);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return bits;
}

}  // namespace dnt
