#pragma once

#include <cctype>
#include <string>

#include "fishburn/core.hpp"

namespace fishburn::detail {

// Small cursor-based scanners shared by the payload grammars. All throw
// ParseError carrying the byte offset of the defect.

inline int parse_uint(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError(pos, "expected a digit");
  long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1000000000L) throw ParseError(pos, "number too large");
    ++pos;
  }
  return static_cast<int>(value);
}

inline void expect(const std::string& text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    throw ParseError(pos, std::string("expected '") + c + "'");
  ++pos;
}

inline bool try_consume(const std::string& text, std::size_t& pos, char c) {
  if (pos < text.size() && text[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

inline void expect_end(const std::string& text, std::size_t pos) {
  if (pos != text.size()) throw ParseError(pos, "unexpected trailing input");
}

}  // namespace fishburn::detail
