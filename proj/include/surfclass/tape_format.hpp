#pragma once

// Text encoding of a gluing table:
//
//   tape   := ( '#' entry entry entry )*
//   entry  := '-' | numeral label
//   numeral:= '1' ('0' | '1')*          binary, no leading zeros
//   label  := '(12)' | '(21)' | '(23)' | '(32)' | '(31)' | '(13)'
//
// Tokens are separated by whitespace (newlines included). '-' marks a
// boundary edge. The three entries of a row are its columns (12), (23), (31).

#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surfclass/triangulation.hpp"

namespace surfclass {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed token stream.
class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Well-formed tokens with an illegal triangle index (0, > n, or a leading zero).
class RangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

inline std::optional<EdgeLabel> parse_label(std::string_view tok) {
  for (EdgeLabel e : kLabels)
    if (tok == to_string(e)) return e;
  return std::nullopt;
}

inline bool is_numeral(std::string_view tok) {
  if (tok.empty()) return false;
  for (char ch : tok)
    if (ch != '0' && ch != '1') return false;
  return true;
}

}  // namespace detail

/// Parse the tape encoding. The empty string is the empty triangulation.
inline Triangulation parse(std::string_view text) {
  using detail::Token;
  const std::vector<Token> tokens = detail::tokenize(text);

  struct PendingEntry {
    GluingEntry entry;
    std::size_t offset;
  };
  std::vector<std::array<PendingEntry, 3>> rows;

  std::size_t k = 0;
  while (k < tokens.size()) {
    if (tokens[k].text != "#")
      throw SyntaxError("expected '#', found '" + std::string(tokens[k].text) + "'",
                        tokens[k].offset);
    const std::size_t row_offset = tokens[k].offset;
    ++k;
    std::array<PendingEntry, 3> row{};
    for (int col = 0; col < 3; ++col) {
      if (k >= tokens.size() || tokens[k].text == "#")
        throw SyntaxError("row starting here has " + std::to_string(col) + " of 3 entries",
                          row_offset);
      const Token& tok = tokens[k];
      if (tok.text == "-") {
        row[col] = {GluingEntry::boundary(), tok.offset};
        ++k;
        continue;
      }
      if (!detail::is_numeral(tok.text))
        throw SyntaxError("unexpected token '" + std::string(tok.text) + "'", tok.offset);
      if (tok.text.front() == '0')
        throw RangeError(tok.text == "0" ? "triangle index 0"
                                         : "leading zero in '" + std::string(tok.text) + "'",
                         tok.offset);
      if (tok.text.size() > 64)
        throw RangeError("triangle index exceeds 64 bits", tok.offset);
      std::uint64_t value = 0;
      for (char ch : tok.text) value = (value << 1) | static_cast<std::uint64_t>(ch - '0');
      ++k;
      if (k >= tokens.size())
        throw SyntaxError("numeral without edge label", tok.offset);
      const auto label = detail::parse_label(tokens[k].text);
      if (!label)
        throw SyntaxError("expected edge label, found '" + std::string(tokens[k].text) + "'",
                          tokens[k].offset);
      row[col] = {GluingEntry::glued(value, *label), tok.offset};
      ++k;
    }
    rows.push_back(row);
  }

  const std::uint64_t n = rows.size();
  std::vector<Row> table(n);
  for (std::uint64_t t = 0; t < n; ++t)
    for (int col = 0; col < 3; ++col) {
      const PendingEntry& p = rows[t][col];
      if (!p.entry.is_boundary() && p.entry.target > n)
        throw RangeError("triangle index " + std::to_string(p.entry.target) + " > n = " +
                             std::to_string(n),
                         p.offset);
      table[t][col] = p.entry;
    }
  return Triangulation(std::move(table));
}

inline std::string to_binary(std::uint64_t value) {
  if (value == 0) return "0";
  std::string digits;
  for (int bit = static_cast<int>(std::bit_width(value)) - 1; bit >= 0; --bit)
    digits.push_back(((value >> bit) & 1U) != 0 ? '1' : '0');
  return digits;
}

/// Canonical encoding: single spaces, minimal numerals, '-' for boundary.
inline std::string serialize(const Triangulation& tri) {
  std::string out;
  for (const Row& row : tri.rows()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back('#');
    for (const GluingEntry& y : row) {
      out.push_back(' ');
      if (y.is_boundary()) {
        out.push_back('-');
      } else {
        out += to_binary(y.target);
        out.push_back(' ');
        out += to_string(y.label);
      }
    }
  }
  return out;
}

}  // namespace surfclass
