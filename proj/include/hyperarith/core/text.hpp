#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperarith::text {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

/// Whitespace-separated tokens; '#' starts a comment.
inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && blank(line[i])) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !blank(line[i]) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

/// Nonempty tokenized lines. Views point into text.
inline std::vector<Line> tokenized_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0, number = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto toks = tokenize(text.substr(pos, end - pos));
    if (!toks.empty()) out.push_back({number, std::move(toks)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::optional<long> to_long(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace hyperarith::text
