#ifndef DNT_ERROR_HPP
#define DNT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dnt {

/// Every invariant the library enforces maps to one code.
enum class errc {
  // frame
  empty_frame,
  duplicate_label,
  invalid_label,
  frame_too_large,
  unknown_label,
  invalid_subset,
  // mass assignments
  mass_out_of_range,
  empty_set_mass,
  sum_not_one,
  sum_exceeds_one,
  not_complete,
  // non-exclusivity
  value_out_of_range,
  pair_not_disjoint,
  conflicting_symmetric_entries,
  // cross-module
  frame_mismatch,
  // size caps on dense / exhaustive operations
  frame_too_large_for_dense,
  frame_too_large_for_oracle,
  frame_too_large_for_sweep,
  // input files and subset expressions
  parse_error,
};

/// Coarse category an error code belongs to; drives the CLI exit code.
enum class error_kind { parse, validation, size_cap };

constexpr error_kind kind_of(errc code) noexcept {
  switch (code) {
    case errc::parse_error:
      return error_kind::parse;
    case errc::frame_too_large:
    case errc::frame_too_large_for_dense:
    case errc::frame_too_large_for_oracle:
    case errc::frame_too_large_for_sweep:
      return error_kind::size_cap;
    default:
      return error_kind::validation;
  }
}

/// Thrown on any violated precondition or invariant. The message states the
/// invariant that failed; code() identifies it programmatically.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }
  error_kind kind() const noexcept { return kind_of(code_); }

 private:
  errc code_;
};

}  // namespace dnt

#endif  // DNT_ERROR_HPP
