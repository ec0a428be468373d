#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

namespace shortcut::detail {

// 1-based line and column of the byte offset reported by a JSON parse error.
inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace shortcut::detail
