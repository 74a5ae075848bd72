#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dnacodes/error.hpp"

namespace dnacodes {

/// Binary string, one bit per element (0 or 1). Position 0 is a_1.
using BinaryWord = std::vector<std::uint8_t>;

inline BinaryWord parse_binary(std::string_view text) {
  if (text.empty()) throw ParseError("empty binary word");
  BinaryWord w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError(std::string("invalid bit '") + text[i] + "' at position " + std::to_string(i + 1));
    }
    w.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return w;
}

inline std::string to_string(const BinaryWord& w) {
  std::string s;
  s.reserve(w.size());
  for (auto b : w) s.push_back(b ? '1' : '0');
  return s;
}

/// Word of length n whose bits are the binary digits of `value`, most
/// significant first. Requires n <= 64.
inline BinaryWord binary_from_index(std::size_t n, std::uint64_t value) {
  if (n > 64) throw std::invalid_argument("binary_from_index requires n <= 64");
  BinaryWord w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1u);
  return w;
}

inline std::size_t binary_hamming(const BinaryWord& a, const BinaryWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("binary_hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

inline std::size_t binary_weight(const BinaryWord& a) {
  std::size_t w = 0;
  for (auto b : a) w += b;
  return w;
}

}  // namespace dnacodes
