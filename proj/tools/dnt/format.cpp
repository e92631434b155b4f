#include "format.hpp"

#include <algorithm>
#include <cstdio>

namespace dnt::tools {

namespace {

std::string printf_double(const char* format, double value) {
  if (value == 0.0) value = 0.0;  // collapse -0 so it renders as "0"
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

}  // namespace

std::string num(double value) { return printf_double("%.12g", value); }

std::string num3(double value) { return printf_double("%.3g", value); }

std::size_t display_width(std::string_view text) {
  std::size_t width = 0;
  for (unsigned char byte : text)
    if ((byte & 0xC0) != 0x80) ++width;  // count non-continuation bytes
  return width;
}

std::string pad(std::string_view text, std::size_t width) {
  std::string out(text);
  for (std::size_t have = display_width(text); have < width; ++have)
    out.push_back(' ');
  return out;
}

std::string align_columns(const std::vector<std::string>& headers,
                          const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& header : headers) widths.push_back(display_width(header));
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], display_width(row[i]));

  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += "  ";
      out += i + 1 < cells.size() ? pad(cells[i], widths[i]) : cells[i];
    }
    out += '\n';
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
  return out;
}

std::string json_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
          out += buffer;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
  return out;
}

}  // namespace dnt::tools
