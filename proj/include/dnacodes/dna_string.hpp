#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnacodes/error.hpp"

namespace dnacodes {

// Two-bit codes are chosen so that complement is `code ^ 3` and a base is
// G or C exactly when its two bits differ.
enum class Nucleotide : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

constexpr Nucleotide complement(Nucleotide b) noexcept {
  return static_cast<Nucleotide>(static_cast<std::uint8_t>(b) ^ 3u);
}

constexpr bool is_gc(Nucleotide b) noexcept {
  const auto v = static_cast<std::uint8_t>(b);
  return ((v ^ (v >> 1)) & 1u) != 0;
}

constexpr char to_char(Nucleotide b) noexcept { return "ACGT"[static_cast<std::uint8_t>(b)]; }

constexpr std::optional<Nucleotide> nucleotide_from_char(char c) noexcept {
  switch (c) {
    case 'A': case 'a': return Nucleotide::A;
    case 'C': case 'c': return Nucleotide::C;
    case 'G': case 'g': return Nucleotide::G;
    case 'T': case 't': return Nucleotide::T;
    default: return std::nullopt;
  }
}

/// Fixed-length string over {A,C,G,T}, packed 32 bases per 64-bit word.
///
/// Position 0 occupies the two most significant bits of word 0, so comparing
/// the word vectors of two equal-length strings gives lexicographic order.
/// Unused trailing bits are always zero.
class DnaString {
 public:
  static constexpr std::size_t kBasesPerWord = 32;

  DnaString() = default;

  /// `n` copies of A.
  explicit DnaString(std::size_t n) : size_(n), words_((n + kBasesPerWord - 1) / kBasesPerWord, 0) {}

  /// Parses ACGT text (either case). Throws ParseError on any other character
  /// or on empty input.
  static DnaString parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty DNA string");
    DnaString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      const auto b = nucleotide_from_char(text[i]);
      if (!b) {
        throw ParseError(std::string("invalid nucleotide '") + text[i] + "' at position " +
                         std::to_string(i + 1));
      }
      s.set(i, *b);
    }
    return s;
  }

  /// The `index`-th string of length `n` in lexicographic order (base-4
  /// digits, position 0 most significant). Requires n <= 32.
  static DnaString from_index(std::size_t n, std::uint64_t index) {
    if (n == 0 || n > kBasesPerWord) throw std::invalid_argument("from_index requires 1 <= n <= 32");
    DnaString s(n);
    s.words_[0] = n == kBasesPerWord ? index : (index << (2 * (kBasesPerWord - n)));
    return s;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  Nucleotide operator[](std::size_t i) const noexcept {
    return static_cast<Nucleotide>((words_[i / kBasesPerWord] >> shift(i)) & 3u);
  }

  void set(std::size_t i, Nucleotide b) noexcept {
    auto& w = words_[i / kBasesPerWord];
    w &= ~(std::uint64_t{3} << shift(i));
    w |= std::uint64_t{static_cast<std::uint8_t>(b)} << shift(i);
  }

  std::string str() const {
    std::string out(size_, 'A');
    for (std::size_t i = 0; i < size_; ++i) out[i] = to_char((*this)[i]);
    return out;
  }

  /// Packed words; bases are MSB-first within each word.
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Concatenation.
  DnaString operator+(const DnaString& rhs) const {
    DnaString out(size_ + rhs.size_);
    for (std::size_t i = 0; i < size_; ++i) out.set(i, (*this)[i]);
    for (std::size_t i = 0; i < rhs.size_; ++i) out.set(size_ + i, rhs[i]);
    return out;
  }

  DnaString substr(std::size_t pos, std::size_t len) const {
    if (pos + len > size_) throw std::out_of_range("DnaString::substr");
    DnaString out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, (*this)[pos + i]);
    return out;
  }

  friend bool operator==(const DnaString&, const DnaString&) = default;

  // Shorter strings order first; equal lengths compare lexicographically.
  friend std::strong_ordering operator<=>(const DnaString& a, const DnaString& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  friend std::ostream& operator<<(std::ostream& os, const DnaString& s) { return os << s.str(); }

 private:
  static constexpr unsigned shift(std::size_t i) noexcept {
    return static_cast<unsigned>(2 * (kBasesPerWord - 1 - i % kBasesPerWord));
  }

  // Mask with ones on every bit that carries a base of this string.
  std::uint64_t used_mask(std::size_t w) const noexcept {
    const std::size_t bases = std::min(kBasesPerWord, size_ - w * kBasesPerWord);
    return bases == kBasesPerWord ? ~std::uint64_t{0} : ~(~std::uint64_t{0} >> (2 * bases));
  }

  friend DnaString complement(const DnaString& s);

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail {
inline constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;

// One bit (the low bit of each base slot) per position where `x` is nonzero.
constexpr std::uint64_t nonzero_bases(std::uint64_t x) noexcept { return (x | (x >> 1)) & kLowBits; }
}  // namespace detail

inline DnaString complement(const DnaString& s) {
  DnaString out = s;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] ^= s.used_mask(w);
  return out;
}

inline DnaString reverse(const DnaString& s) {
  const std::size_t n = s.size();
  DnaString out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, s[n - 1 - i]);
  return out;
}

inline DnaString reverse_complement(const DnaString& s) { return reverse(complement(s)); }

/// Number of differing positions. Throws std::invalid_argument on length mismatch.
inline std::size_t hamming_distance(const DnaString& s, const DnaString& t) {
  if (s.size() != t.size()) {
    throw std::invalid_argument("hamming_distance: lengths " + std::to_string(s.size()) + " and " +
                                std::to_string(t.size()) + " differ");
  }
  std::size_t d = 0;
  const auto& a = s.words();
  const auto& b = t.words();
  for (std::size_t w = 0; w < a.size(); ++w) d += std::popcount(detail::nonzero_bases(a[w] ^ b[w]));
  return d;
}

inline std::size_t gc_content(const DnaString& s) noexcept {
  std::size_t g = 0;
  for (auto w : s.words()) g += std::popcount((w ^ (w >> 1)) & detail::kLowBits);
  return g;
}

}  // namespace dnacodes

template <>
struct std::hash<dnacodes::DnaString> {
  std::size_t operator()(const dnacodes::DnaString& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
    for (auto w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};
