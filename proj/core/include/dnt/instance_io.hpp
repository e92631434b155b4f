#ifndef DNT_INSTANCE_IO_HPP
#define DNT_INSTANCE_IO_HPP

#include <filesystem>
#include <string>

#include "dnt/dnumber.hpp"
#include "dnt/nonexclusivity.hpp"

namespace dnt {

/// One parsed instance file: a D number and a non-exclusivity on a shared
/// frame, plus the optional declaration that the masses form a classical
/// BPA (total mass 1, exclusive frame).
struct Instance {
  DNumber dnumber;
  NonExclusivity nonexclusivity;
  bool classical = false;

  const Frame& frame() const noexcept { return dnumber.frame(); }
};

/// Parses the JSON instance schema:
///
///   {
///     "frame": ["a", "b", "c"],
///     "masses": { "a": 0.5, "b|c": 0.3 },
///     "nonexclusivity": {
///       "strategy": "element_derived",
///       "element_pairs": [ ["a", "b", 0.3] ]
///     },
///     "classical": false
///   }
///
/// Mass keys and subset pairs are subset expressions: labels joined by '|',
/// whitespace-insensitive. "nonexclusivity" defaults to the exclusive
/// strategy; "element_pairs" belongs to element_derived and "subset_pairs"
/// (pairs of subset expressions) to explicit_table. "classical": true
/// declares a classical BPA: the masses must total 1 and the strategy must
/// be exclusive (or absent).
///
/// Structural problems (malformed JSON, unknown or missing keys, wrong
/// types, malformed or duplicate subset expressions, contradictory field
/// combinations) raise parse errors; content that violates a constructor
/// invariant raises that invariant's validation error.
Instance parse_instance(const std::string& text);

/// parse_instance on a file's contents; unreadable files are parse errors.
/// Error messages are prefixed with the path.
Instance load_instance(const std::filesystem::path& path);

}  // namespace dnt

#endif  // DNT_INSTANCE_IO_HPP
