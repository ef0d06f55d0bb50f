#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace linecast::csv {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

/// Splits on LF, drops a trailing CR per line and a leading UTF-8 BOM.
/// Blank lines are skipped.
std::vector<Line> split_lines(std::string_view text);

/// Comma-separated fields, surrounding whitespace trimmed. No quoting.
std::vector<std::string_view> split_fields(std::string_view line);

std::string_view trim(std::string_view s);

}  // namespace linecast::csv
