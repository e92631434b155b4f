#ifndef DNT_TOOLS_FORMAT_HPP
#define DNT_TOOLS_FORMAT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dnt::tools {

/// 12 significant digits. Wide enough to round-trip every value the library
/// produces to visual stability, narrow enough to swallow one-ulp noise, so
/// identical inputs always render identical bytes.
std::string num(double value);

/// 3 significant digits; used for residuals and tolerances, where only the
/// magnitude matters.
std::string num3(double value);

/// Code-point count (UTF-8), so that padding stays aligned when a cell
/// holds the multi-byte empty-set symbol.
std::size_t display_width(std::string_view text);

/// Left-aligns `text` in a field `width` code points wide.
std::string pad(std::string_view text, std::size_t width);

/// Renders rows as aligned columns, two spaces between fields, no trailing
/// whitespace. Every row must have the same arity as `headers`.
std::string align_columns(const std::vector<std::string>& headers,
                          const std::vector<std::vector<std::string>>& rows);

/// A quoted JSON string with the required escapes applied.
std::string json_string(std::string_view text);

}  // namespace dnt::tools

#endif  // DNT_TOOLS_FORMAT_HPP
