#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace zernike::testing {

/// Collapses whitespace runs to one space and trims both ends.
inline std::string normalize_ws(std::string_view s) {
  std::string out;
  bool pending = false;
  for (const char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += ch;
  }
  return out;
}

/// Cells of one table row, row terminator removed, each whitespace-normalized.
inline std::vector<std::string> split_cells(std::string_view row) {
  std::string body = normalize_ws(row);
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "\\\\") == 0)
    body.resize(body.size() - 2);
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == '&' && (i == 0 || body[i - 1] != '\\'))) {
      cells.push_back(normalize_ws(std::string_view(body).substr(start, i - start)));
      start = i + 1;
    }
  }
  return cells;
}

inline std::size_t count_unescaped(std::string_view s, char ch) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == ch && (i == 0 || s[i - 1] != '\\')) ++n;
  return n;
}

inline std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < s.size()) lines.emplace_back(s.substr(start));
      break;
    }
    lines.emplace_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace zernike::testing
