#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/binary_word.hpp"
#include "dnacodes/constraints.hpp"
#include "dnacodes/detail/parallel.hpp"
#include "dnacodes/dna_string.hpp"
#include "dnacodes/error.hpp"

namespace dnacodes {

/// The four blocks of a pair. Bit 1 is the class (x or y), bit 0 says
/// whether the block is complemented.
enum class BlockRole : std::uint8_t { X = 0, Xc = 1, Y = 2, Yc = 3 };

constexpr BlockRole complement(BlockRole r) noexcept {
  return static_cast<BlockRole>(static_cast<std::uint8_t>(r) ^ 1u);
}
constexpr bool is_y_class(BlockRole r) noexcept { return (static_cast<std::uint8_t>(r) & 2u) != 0; }

inline const char* role_name(BlockRole r) noexcept {
  switch (r) {
    case BlockRole::X: return "x";
    case BlockRole::Xc: return "xc";
    case BlockRole::Y: return "y";
    case BlockRole::Yc: return "yc";
  }
  return "?";
}

inline BlockRole parse_role(std::string_view s) {
  if (s == "x") return BlockRole::X;
  if (s == "xc") return BlockRole::Xc;
  if (s == "y") return BlockRole::Y;
  if (s == "yc") return BlockRole::Yc;
  throw std::invalid_argument("block role must be one of x, xc, y, yc (got '" + std::string(s) + "')");
}

/// Blocks x, y of equal length ell with x, x^c, y, y^c pairwise distinct.
class BlockPair {
 public:
  BlockPair(DnaString x, DnaString y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.empty() || x_.size() != y_.size()) throw std::invalid_argument("BlockPair: blocks must be non-empty and of equal length");
    const std::array<DnaString, 4> b{x_, complement(x_), y_, complement(y_)};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (b[i] == b[j]) throw std::invalid_argument("BlockPair: x, x^c, y, y^c must be pairwise distinct (" + x_.str() + ", " + y_.str() + ")");
      }
    }
  }

  static BlockPair parse(std::string_view x, std::string_view y) { return {DnaString::parse(x), DnaString::parse(y)}; }

  const DnaString& x() const noexcept { return x_; }
  const DnaString& y() const noexcept { return y_; }
  std::size_t ell() const noexcept { return x_.size(); }

  DnaString block(BlockRole r) const {
    switch (r) {
      case BlockRole::X: return x_;
      case BlockRole::Xc: return complement(x_);
      case BlockRole::Y: return y_;
      case BlockRole::Yc: return complement(y_);
    }
    return x_;
  }

  std::optional<BlockRole> role_of(const DnaString& b) const {
    for (auto r : {BlockRole::X, BlockRole::Xc, BlockRole::Y, BlockRole::Yc}) {
      if (block(r) == b) return r;
    }
    return std::nullopt;
  }

  friend bool operator==(const BlockPair&, const BlockPair&) = default;
  friend auto operator<=>(const BlockPair& a, const BlockPair& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.y_ <=> b.y_;
  }

 private:
  DnaString x_;
  DnaString y_;
};

/// f(x,0)=y   f(x,1)=y^c   f(x^c,0)=y^c f(x^c,1)=y
/// f(y,0)=x^c f(y,1)=x     f(y^c,0)=x   f(y^c,1)=x^c
constexpr BlockRole transition(BlockRole prev, std::uint8_t bit) noexcept {
  const auto p = static_cast<std::uint8_t>(prev);
  const std::uint8_t cls = (p >> 1) & 1u;
  const std::uint8_t comp = p & 1u;
  return static_cast<BlockRole>(((cls ^ 1u) << 1) | (comp ^ (bit & 1u) ^ cls));
}

/// Pair plus initializer: h(0) = h0 and h(1) = h0^c.
struct TransitionMap {
  BlockPair pair;
  BlockRole h0 = BlockRole::X;

  BlockRole h(std::uint8_t bit) const noexcept { return bit ? complement(h0) : h0; }
};

/// f on concrete blocks. Throws std::invalid_argument if `prev` is not one of
/// x, x^c, y, y^c.
inline DnaString transition(const TransitionMap& map, const DnaString& prev, std::uint8_t bit) {
  if (bit > 1) throw std::invalid_argument("transition: bit must be 0 or 1");
  const auto role = map.pair.role_of(prev);
  if (!role) throw std::invalid_argument("transition: '" + prev.str() + "' is not a block of the pair");
  return map.pair.block(transition(*role, bit));
}

/// Block roles u_1..u_n of the encoding of `a`.
inline std::vector<BlockRole> encode_roles(const BinaryWord& a, BlockRole h0 = BlockRole::X) {
  if (a.empty()) throw std::invalid_argument("encode: empty binary word");
  std::vector<BlockRole> roles;
  roles.reserve(a.size());
  roles.push_back(a[0] ? complement(h0) : h0);
  for (std::size_t i = 1; i < a.size(); ++i) roles.push_back(transition(roles.back(), a[i]));
  return roles;
}

/// u_1 = h(a_1), u_i = f(u_{i-1}, a_i); the result has length n*ell.
inline DnaString encode(const BinaryWord& a, const TransitionMap& map) {
  const std::size_t ell = map.pair.ell();
  const std::array<DnaString, 4> blocks{map.pair.block(BlockRole::X), map.pair.block(BlockRole::Xc),
                                        map.pair.block(BlockRole::Y), map.pair.block(BlockRole::Yc)};
  const auto roles = encode_roles(a, map.h0);
  DnaString out(roles.size() * ell);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    const auto& b = blocks[static_cast<std::size_t>(roles[i])];
    for (std::size_t k = 0; k < ell; ++k) out.set(i * ell + k, b[k]);
  }
  return out;
}

inline constexpr std::size_t kImageSetMaxLength = 16;

/// Encodings of all 2^n binary words, sorted. Refuses n > 16.
inline std::vector<DnaString> image_set(std::size_t n, const TransitionMap& map) {
  if (n < 1) throw std::invalid_argument("image_set: n must be >= 1");
  if (n > kImageSetMaxLength) throw RefusedError("image_set: 2^" + std::to_string(n) + " strings is too many", std::uint64_t{1} << std::min<std::size_t>(n, 63));
  std::vector<DnaString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) out.push_back(encode(binary_from_index(n, v), map));
  std::sort(out.begin(), out.end());
  return out;
}

/// Differing positions (1-based), with n+1 appended when their count is odd.
inline std::vector<std::size_t> support_set(const BinaryWord& a, const BinaryWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("support_set: length mismatch");
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) s.push_back(i + 1);
  }
  if (s.size() % 2 == 1) s.push_back(a.size() + 1);
  return s;
}

/// ell * sum over consecutive support pairs of (s_{2i} - s_{2i-1}).
inline std::size_t binary_distance(const BinaryWord& a, const BinaryWord& b, std::size_t ell) {
  const auto s = support_set(a, b);
  std::size_t sum = 0;
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) sum += s[i + 1] - s[i];
  return ell * sum;
}

/// Minimum binary_distance over distinct pairs. Needs at least two words.
inline std::size_t min_binary_distance(std::span<const BinaryWord> words, std::size_t ell,
                                       unsigned workers = detail::default_workers()) {
  if (words.size() < 2) throw std::invalid_argument("min_binary_distance: need at least two codewords");
  const std::size_t n = words.front().size();
  for (const auto& w : words) {
    if (w.size() != n) throw std::invalid_argument("min_binary_distance: mixed lengths");
  }
  const unsigned w = std::max(1u, workers);
  std::vector<std::size_t> partial(w, ell * (n + 1));
  detail::parallel_slices(words.size(), w, [&](std::size_t begin, std::size_t end, unsigned k) {
    std::size_t best = partial[k];
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, binary_distance(words[i], words[j], ell));
    }
    partial[k] = best;
  });
  return *std::min_element(partial.begin(), partial.end());
}

/// Which distance condition selects pairs.
///  - Tabulated: d(x,y) = d(x,y^r) = d(x,x^rc) = ell; reproduces the
///    published pair listing exactly.
///  - Printed: d(x,y) = d(x,y^r) = d(x,y^rc) = ell, as the listing's caption
///    reads.
enum class PairCriterion { Tabulated, Printed };

struct PairValidation {
  /// The 16 strings (x y* x* y*), (y x* y* x*) are (2ell-1)-conflict-free.
  bool conflict_safe = false;
  /// (x y x), (x y x^c), (x y^c x), (x y^c x^c) are rc-substring-free.
  bool hairpin_safe = false;
  /// d(x, y^r) = d(x, y^rc) = ell.
  bool reverse_safe = false;
  /// gc(x) + gc(y) = ell.
  bool gc_balanced = false;
  /// Distance condition of the selected criterion.
  bool distance_ok = false;
  /// distance_ok, gc_balanced and conflict_safe.
  bool fully_valid = false;
};

inline bool pair_conflict_safe(const BlockPair& p) {
  const std::size_t ell = p.ell();
  const std::size_t level = 2 * ell - 1;
  for (bool y_first : {false, true}) {
    const BlockRole a = y_first ? BlockRole::Y : BlockRole::X;
    const BlockRole b = y_first ? BlockRole::X : BlockRole::Y;
    for (unsigned mask = 0; mask < 8; ++mask) {
      const auto s = p.block(a) + p.block((mask & 1u) ? complement(b) : b) +
                     p.block((mask & 2u) ? complement(a) : a) + p.block((mask & 4u) ? complement(b) : b);
      if (!detail::conflict_free_up_to(s, level)) return false;
    }
  }
  return true;
}

inline bool pair_hairpin_safe(const BlockPair& p) {
  const auto x = p.x(), xc = complement(p.x()), y = p.y(), yc = complement(p.y());
  for (const auto& s : {x + y + x, x + y + xc, x + yc + x, x + yc + xc}) {
    if (!is_rc_substring_free(s)) return false;
  }
  return true;
}

inline PairValidation validate_pair(const BlockPair& p, PairCriterion criterion = PairCriterion::Tabulated) {
  const auto& x = p.x();
  const auto& y = p.y();
  const std::size_t ell = p.ell();
  PairValidation v;
  const bool d_xy = hamming_distance(x, y) == ell;
  const bool d_xyr = hamming_distance(x, reverse(y)) == ell;
  const bool d_xyrc = hamming_distance(x, reverse_complement(y)) == ell;
  const bool d_xxrc = hamming_distance(x, reverse_complement(x)) == ell;
  v.reverse_safe = d_xyr && d_xyrc;
  v.gc_balanced = gc_content(x) + gc_content(y) == ell;
  v.distance_ok = d_xy && d_xyr && (criterion == PairCriterion::Tabulated ? d_xxrc : d_xyrc);
  v.conflict_safe = pair_conflict_safe(p);
  v.hairpin_safe = pair_hairpin_safe(p);
  v.fully_valid = v.distance_ok && v.gc_balanced && v.conflict_safe;
  return v;
}

inline constexpr std::size_t kPairEnumerationMaxEll = 6;

/// All ordered pairs that are fully valid under `criterion`, sorted by (x, y).
inline std::vector<BlockPair> enumerate_valid_pairs(std::size_t ell, PairCriterion criterion = PairCriterion::Tabulated) {
  if (ell < 1) throw std::invalid_argument("enumerate_valid_pairs: ell must be >= 1");
  if (ell > kPairEnumerationMaxEll) {
    throw RefusedError("enumerate_valid_pairs: ell > " + std::to_string(kPairEnumerationMaxEll) + " is beyond desk scale", std::uint64_t{1} << (4 * ell));
  }
  const std::uint64_t count = std::uint64_t{1} << (2 * ell);
  std::vector<DnaString> all;
  all.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) all.push_back(DnaString::from_index(ell, i));
  std::vector<BlockPair> out;
  for (const auto& x : all) {
    const std::size_t gx = gc_content(x);
    if (gx > ell) continue;
    const auto xc = complement(x);
    if (criterion == PairCriterion::Tabulated && hamming_distance(x, reverse(xc)) != ell) continue;
    for (const auto& y : all) {
      if (gx + gc_content(y) != ell || hamming_distance(x, y) != ell || y == xc) continue;
      if (hamming_distance(x, reverse(y)) != ell) continue;
      if (criterion == PairCriterion::Printed && hamming_distance(x, reverse_complement(y)) != ell) continue;
      BlockPair p(x, y);
      if (pair_conflict_safe(p)) out.push_back(std::move(p));
    }
  }
  return out;
}

enum class StartClass { X, Y };

/// GC content of an encoded word of n blocks, given gc(x), gc(y) and the
/// class of the first block.
inline std::size_t encoded_gc_content(std::size_t n, std::size_t gx, std::size_t gy, StartClass start = StartClass::X) {
  if (n % 2 == 0) return (gx + gy) * n / 2;
  return (start == StartClass::X ? gx : gy) + (gx + gy) * (n - 1) / 2;
}

/// Distance between encodings of words differing at position i only
/// (ell(n-i+1)) or at positions i < j only (ell(j-i)). 1-based.
inline std::size_t flip_distance(std::size_t n, std::size_t ell, std::size_t i, std::optional<std::size_t> j = std::nullopt) {
  if (i < 1 || i > n) throw std::invalid_argument("flip_distance: need 1 <= i <= n");
  if (!j) return ell * (n - i + 1);
  if (*j <= i || *j > n) throw std::invalid_argument("flip_distance: need i < j <= n");
  return ell * (*j - i);
}

struct DistanceBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const DistanceBounds&, const DistanceBounds&) = default;
};

/// ell*ceil(dH/2) <= d <= ell*(n - floor(dH/2)) for words at Hamming distance dH.
inline DistanceBounds half_distance_bounds(std::size_t dH, std::size_t n, std::size_t ell) {
  if (dH > n) throw std::invalid_argument("half_distance_bounds: dH must not exceed n");
  return {ell * ((dH + 1) / 2), ell * (n - dH / 2)};
}

/// sigma = min over z1 in {x, x^c}, z2 in {y, y^c} of min(d(z1,z2), ell - d(z1,z2)).
inline std::size_t block_sigma(const BlockPair& p) {
  const std::size_t ell = p.ell();
  std::size_t sigma = ell;
  for (auto z1 : {BlockRole::X, BlockRole::Xc}) {
    for (auto z2 : {BlockRole::Y, BlockRole::Yc}) {
      const std::size_t d = hamming_distance(p.block(z1), p.block(z2));
      sigma = std::min({sigma, d, ell - d});
    }
  }
  return sigma;
}

/// Four-case bound on d((u f(u_n,a)), (v f(v_n,b))) in terms of the binary
/// Hamming distance dH of the source words and bit_dist = d(a, b).
inline std::size_t append_distance_bound(std::size_t dH, std::size_t bit_dist, std::size_t sigma) {
  if (bit_dist > 1) throw std::invalid_argument("append_distance_bound: bit distance is 0 or 1");
  const bool even = dH % 2 == 0;
  const bool differ = bit_dist == 1;
  return (even == differ) ? sigma * (dH + 1) : sigma * dH;
}

enum class ConditionMode { Literal, Corrected };

/// Window condition for complete conflict freedom of the encoding. For every
/// mu with 2mu <= floor(n/2) and lambda = 0..n-4mu:
///  - Literal: 2mu < sum_{i=lambda+1}^{lambda+2mu} [a_i = a_{2mu+i}]
///  - Corrected: the sum is below 2mu (not every position agrees).
/// With no windows (n < 4) the condition holds vacuously in both modes.
inline bool binary_complete_conflict_condition(const BinaryWord& a, ConditionMode mode) {
  const std::size_t n = a.size();
  for (std::size_t mu = 1; 4 * mu <= n; ++mu) {
    const std::size_t width = 2 * mu;
    for (std::size_t lambda = 0; lambda + 2 * width <= n; ++lambda) {
      std::size_t agree = 0;
      for (std::size_t i = lambda; i < lambda + width; ++i) agree += (a[i] == a[i + width]);
      const bool holds = mode == ConditionMode::Literal ? width < agree : agree < width;
      if (!holds) return false;
    }
  }
  return true;
}

/// Semantic check: is the encoding of `a` complete conflict free?
inline bool encodes_to_complete_conflict_free(const BinaryWord& a, const TransitionMap& map) {
  return is_complete_conflict_free(encode(a, map));
}

}  // namespace dnacodes
