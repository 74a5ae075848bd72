#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnacodes/detail/parallel.hpp"
#include "dnacodes/dna_string.hpp"

namespace dnacodes {

namespace detail {

// True when some t-block starting at p equals the t-block at p + t.
inline bool has_adjacent_repeat(const DnaString& s, std::size_t t) noexcept {
  const std::size_t n = s.size();
  if (t == 0 || 2 * t > n) return false;
  if (n <= DnaString::kBasesPerWord) {
    const std::uint64_t w = s.words()[0];
    const std::uint64_t eq = ~nonzero_bases(w ^ (w << (2 * t))) & kLowBits;
    std::uint64_t run = eq;
    for (std::size_t k = 1; k < t; ++k) run &= eq << (2 * k);
    const std::size_t starts = n - 2 * t + 1;
    const std::uint64_t valid =
        starts >= DnaString::kBasesPerWord ? kLowBits : (kLowBits & ~(~std::uint64_t{0} >> (2 * starts)));
    return (run & valid) != 0;
  }
  for (std::size_t p = 0; p + 2 * t <= n; ++p) {
    std::size_t k = 0;
    while (k < t && s[p + k] == s[p + t + k]) ++k;
    if (k == t) return true;
  }
  return false;
}

inline bool conflict_free_up_to(const DnaString& s, std::size_t ell) noexcept {
  for (std::size_t t = 1; t <= ell; ++t) {
    if (has_adjacent_repeat(s, t)) return false;
  }
  return true;
}

// Reverse complement of a 3-mer in 6-bit form (first base in the high bits).
inline constexpr std::array<std::uint8_t, 64> kTripletRc = [] {
  std::array<std::uint8_t, 64> t{};
  for (unsigned v = 0; v < 64; ++v) {
    const unsigned b0 = (v >> 4) & 3u, b1 = (v >> 2) & 3u, b2 = v & 3u;
    t[v] = static_cast<std::uint8_t>(((b2 ^ 3u) << 4) | ((b1 ^ 3u) << 2) | (b0 ^ 3u));
  }
  return t;
}();

}  // namespace detail

/// True iff no two adjacent identical blocks of length t exist for any
/// t in 1..ell, at any offset. Requires 1 <= ell <= floor(n/2).
inline bool is_conflict_free(const DnaString& s, std::size_t ell) {
  if (ell < 1 || ell > s.size() / 2) {
    throw std::invalid_argument("is_conflict_free: ell=" + std::to_string(ell) + " outside [1, " +
                                std::to_string(s.size() / 2) + "]");
  }
  return detail::conflict_free_up_to(s, ell);
}

/// floor(n/2)-conflict-free; vacuously true when n == 1.
inline bool is_complete_conflict_free(const DnaString& s) noexcept {
  return detail::conflict_free_up_to(s, s.size() / 2);
}

/// Largest ell in [0, floor(n/2)] for which `s` is ell-conflict-free.
inline std::size_t conflict_free_level(const DnaString& s) noexcept {
  for (std::size_t ell = s.size() / 2; ell >= 1; --ell) {
    if (detail::conflict_free_up_to(s, ell)) return ell;
  }
  return 0;
}

/// True iff no 3-mer of `s` has its reverse complement occurring in `s`.
/// Occurrences may overlap. Any reverse-complementary pair of length k > 3
/// contains one of length 3, so checking 3-mers is sufficient.
inline bool is_rc_substring_free(const DnaString& s) noexcept {
  if (s.size() < 3) return true;
  std::uint64_t present = 0;
  unsigned v = (static_cast<unsigned>(s[0]) << 2) | static_cast<unsigned>(s[1]);
  for (std::size_t i = 2; i < s.size(); ++i) {
    v = ((v << 2) | static_cast<unsigned>(s[i])) & 63u;
    present |= std::uint64_t{1} << v;
  }
  for (unsigned w = 0; w < 64; ++w) {
    if ((present >> w & 1u) && (present >> detail::kTripletRc[w] & 1u)) return false;
  }
  return true;
}

/// A set of distinct equal-length DNA strings, kept in sorted order.
class DnaCode {
 public:
  /// Throws std::invalid_argument when `words` is empty, mixes lengths, or
  /// contains duplicates.
  explicit DnaCode(std::vector<DnaString> words, std::optional<std::size_t> gc_target = std::nullopt)
      : words_(std::move(words)), gc_target_(gc_target) {
    if (words_.empty()) throw std::invalid_argument("DnaCode: a code needs at least one codeword");
    const std::size_t n = words_.front().size();
    for (const auto& w : words_) {
      if (w.size() != n) {
        throw std::invalid_argument("DnaCode: mixed lengths " + std::to_string(n) + " and " +
                                    std::to_string(w.size()));
      }
    }
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
      throw std::invalid_argument("DnaCode: duplicate codeword");
    }
  }

  std::size_t length() const noexcept { return words_.front().size(); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<DnaString>& words() const noexcept { return words_; }
  std::optional<std::size_t> gc_target() const noexcept { return gc_target_; }

  bool contains(const DnaString& s) const { return std::binary_search(words_.begin(), words_.end(), s); }

 private:
  std::vector<DnaString> words_;
  std::optional<std::size_t> gc_target_;
};

struct ConstraintReport {
  std::size_t length = 0;
  std::size_t size = 0;
  /// Minimum over distinct pairs; equals `length` for a single codeword.
  std::size_t min_hamming = 0;
  /// Threshold the pairwise constraints were checked against.
  std::size_t distance_threshold = 0;
  /// Minimum d(x, y^r), d(x, y^rc), d(x, y^c) over all x, y with the image
  /// different from x.
  std::size_t min_reverse = 0;
  std::size_t min_reverse_complement = 0;
  std::size_t min_complement = 0;
  bool hamming_ok = true;
  bool reverse_ok = true;
  bool reverse_complement_ok = true;
  bool complement_ok = true;
  std::optional<std::size_t> gc_constant;
  std::size_t conflict_free_level = 0;
  bool hairpin_free = true;
};

namespace detail {

struct PairScan {
  std::size_t min_hamming;
  std::size_t min_reverse;
  std::size_t min_rc;
  std::size_t min_complement;
};

// Minimum distances d(x, y), d(x, y^r), d(x, y^rc), d(x, y^c) over the pairs
// the constraint definitions admit. Images equal to x are skipped.
inline PairScan scan_pairs(std::span<const DnaString> words, unsigned workers) {
  const std::size_t m = words.size();
  const std::size_t n = words.empty() ? 0 : words.front().size();
  std::vector<DnaString> rev(m), rc(m), comp(m);
  for (std::size_t i = 0; i < m; ++i) {
    comp[i] = complement(words[i]);
    rev[i] = reverse(words[i]);
    rc[i] = reverse(comp[i]);
  }
  const unsigned w = std::max(1u, workers);
  std::vector<PairScan> partial(w, PairScan{n, n, n, n});
  parallel_slices(m, w, [&](std::size_t begin, std::size_t end, unsigned k) {
    PairScan local{n, n, n, n};
    for (std::size_t i = begin; i < end; ++i) {
      const auto& x = words[i];
      for (std::size_t j = 0; j < m; ++j) {
        if (j > i) local.min_hamming = std::min(local.min_hamming, hamming_distance(x, words[j]));
        if (x != rev[j]) local.min_reverse = std::min(local.min_reverse, hamming_distance(x, rev[j]));
        if (x != rc[j]) local.min_rc = std::min(local.min_rc, hamming_distance(x, rc[j]));
        if (x != comp[j]) local.min_complement = std::min(local.min_complement, hamming_distance(x, comp[j]));
      }
    }
    partial[k] = local;
  });
  PairScan out{n, n, n, n};
  for (const auto& p : partial) {
    out.min_hamming = std::min(out.min_hamming, p.min_hamming);
    out.min_reverse = std::min(out.min_reverse, p.min_reverse);
    out.min_rc = std::min(out.min_rc, p.min_rc);
    out.min_complement = std::min(out.min_complement, p.min_complement);
  }
  return out;
}

}  // namespace detail

/// Minimum Hamming distance over distinct pairs (n for a singleton).
inline std::size_t min_hamming_distance(std::span<const DnaString> words) {
  if (words.empty()) throw std::invalid_argument("min_hamming_distance: empty code");
  const std::size_t n = words.front().size();
  std::size_t best = n;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, hamming_distance(words[i], words[j]));
  }
  return best;
}

/// Measures every pairwise and per-string constraint of `code`. The pairwise
/// reverse/reverse-complement/complement checks use `claimed_d` when given,
/// otherwise the measured minimum distance. The result does not depend on
/// `workers`.
inline ConstraintReport verify_code(const DnaCode& code, std::optional<std::size_t> claimed_d = std::nullopt,
                                    unsigned workers = detail::default_workers()) {
  const auto& words = code.words();
  ConstraintReport r;
  r.length = code.length();
  r.size = code.size();
  const auto scan = detail::scan_pairs(words, workers);
  r.min_hamming = scan.min_hamming;
  r.distance_threshold = claimed_d.value_or(r.min_hamming);
  r.min_reverse = scan.min_reverse;
  r.min_reverse_complement = scan.min_rc;
  r.min_complement = scan.min_complement;
  r.hamming_ok = r.min_hamming >= r.distance_threshold;
  r.reverse_ok = scan.min_reverse >= r.distance_threshold;
  r.reverse_complement_ok = scan.min_rc >= r.distance_threshold;
  r.complement_ok = scan.min_complement >= r.distance_threshold;

  const std::size_t g = gc_content(words.front());
  r.gc_constant = g;
  r.conflict_free_level = r.length / 2;
  for (const auto& w : words) {
    if (gc_content(w) != g) r.gc_constant.reset();
    r.conflict_free_level = std::min(r.conflict_free_level, conflict_free_level(w));
    if (r.hairpin_free && !is_rc_substring_free(w)) r.hairpin_free = false;
  }
  return r;
}

/// Convenience overload for unvalidated input; throws like DnaCode's constructor.
inline ConstraintReport verify_code(std::vector<DnaString> words, std::optional<std::size_t> claimed_d = std::nullopt,
                                    unsigned workers = detail::default_workers()) {
  return verify_code(DnaCode(std::move(words)), claimed_d, workers);
}

enum class SpecialKind {
  SelfReverse,                 ///< x = x^r
  SelfReverseComplement,       ///< x = x^rc
  GcExact,                     ///< GC content m
  GcAndSelfReverseComplement,  ///< GC content m and x = x^rc
  GcAndSelfReverse,            ///< GC content m and x = x^r
};

namespace detail {
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
inline std::uint64_t pow2(std::uint64_t e) { return std::uint64_t{1} << e; }
}  // namespace detail

/// Closed-form count of length-n strings of the given kind. `m` is required
/// for the GC kinds (0 <= m <= n) and rejected for the others.
inline std::uint64_t count_special_strings(std::size_t n, SpecialKind kind, std::optional<std::size_t> m = std::nullopt) {
  if (n < 1 || n > 31) throw std::invalid_argument("count_special_strings: n must be in [1, 31]");
  const bool gc_kind = kind == SpecialKind::GcExact || kind == SpecialKind::GcAndSelfReverseComplement ||
                       kind == SpecialKind::GcAndSelfReverse;
  if (gc_kind && (!m || *m > n)) throw std::invalid_argument("count_special_strings: GC kinds need 0 <= m <= n");
  if (!gc_kind && m) throw std::invalid_argument("count_special_strings: m only applies to GC kinds");
  const std::uint64_t half_up = (n + 1) / 2;
  const std::uint64_t half_down = n / 2;
  switch (kind) {
    case SpecialKind::SelfReverse:
      return detail::pow2(2 * half_up);
    case SpecialKind::SelfReverseComplement:
      return n % 2 == 1 ? 0 : detail::pow2(n);
    case SpecialKind::GcExact:
      return detail::binomial(n, *m) * detail::pow2(n);
    case SpecialKind::GcAndSelfReverseComplement:
      // Mirrored positions pair a base with its complement, so GC comes in pairs.
      if (n % 2 == 1 || *m % 2 == 1) return 0;
      return detail::binomial(n / 2, *m / 2) * detail::pow2(n / 2);
    case SpecialKind::GcAndSelfReverse:
      if (n % 2 == 0 && *m % 2 == 1) return 0;
      return detail::binomial(half_down, *m / 2) * detail::pow2(half_up);
  }
  throw std::invalid_argument("count_special_strings: unknown kind");
}

}  // namespace dnacodes
