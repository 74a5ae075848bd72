#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/bincodes.hpp"
#include "dnacodes/binary_word.hpp"
#include "dnacodes/constraints.hpp"
#include "dnacodes/detail/parallel.hpp"
#include "dnacodes/isomap.hpp"

namespace dnacodes {

/// One predicted-versus-measured comparison. Gating checks decide whether
/// the build passes; the others are recorded for inspection only.
struct TheoremCheck {
  std::string name;
  bool gating = true;
  std::string predicted;
  std::string measured;
  bool pass = false;
};

/// Constraints a build asserts on top of length, size, distance and GC.
struct BuildClaims {
  bool conflict = false;     ///< every codeword (2ell-1)-conflict-free
  bool hairpin = false;      ///< every codeword rc-substring-free
  bool reverse = false;      ///< reverse constraint (even n only)
  bool gc_balanced = false;  ///< GC content floor/ceil of n*ell/2

  /// Everything the pair's flags support.
  static BuildClaims supported_by(const PairValidation& v) {
    return {v.conflict_safe, v.hairpin_safe, v.reverse_safe, v.gc_balanced};
  }
};

struct DnaCodeBuildReport {
  std::string code_name;
  std::string x;
  std::string y;
  std::size_t ell = 0;
  BlockRole h0 = BlockRole::X;
  std::size_t binary_length = 0;
  PairValidation pair_flags;
  BuildClaims claims;

  std::size_t predicted_length = 0;
  std::uint64_t predicted_size = 0;
  std::size_t predicted_distance = 0;
  std::size_t predicted_gc = 0;
  std::optional<std::size_t> predicted_conflict_level;
  bool predicted_hairpin_free = false;

  ConstraintReport measured;
  std::vector<TheoremCheck> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return !c.gating || c.pass; });
  }

  const TheoremCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

struct DnaCodeBuild {
  DnaCode code;
  DnaCodeBuildReport report;
};

namespace detail {

inline void add_check(DnaCodeBuildReport& r, std::string name, bool gating, std::size_t predicted, std::size_t measured, bool pass) {
  r.checks.push_back({std::move(name), gating, std::to_string(predicted), std::to_string(measured), pass});
}

inline void add_flag_check(DnaCodeBuildReport& r, std::string name, bool gating, bool measured) {
  r.checks.push_back({std::move(name), gating, "true", measured ? "true" : "false", measured});
}

inline void refuse_unless(bool ok, const char* flag, const char* claim) {
  if (!ok) throw std::invalid_argument(std::string("pair is not ") + flag + "; cannot claim " + claim);
}

}  // namespace detail

/// Encodes every codeword of `code` with (pair, h0) and checks the measured
/// DNA code against each applicable prediction. With explicit `claims`, the
/// build refuses (std::invalid_argument naming the missing pair flag) when a
/// claim is not backed by the pair; by default it claims what the pair supports.
inline DnaCodeBuild build_dna_code(const BinaryCode& code, const BlockPair& pair, BlockRole h0 = BlockRole::X,
                                   std::optional<BuildClaims> claims = std::nullopt,
                                   unsigned workers = detail::default_workers(),
                                   std::uint64_t limit = kDefaultCodewordLimit) {
  const auto flags = validate_pair(pair);
  const BuildClaims c = claims.value_or(BuildClaims::supported_by(flags));
  if (c.conflict) detail::refuse_unless(flags.conflict_safe, "conflict_safe", "conflict freedom");
  if (c.hairpin) detail::refuse_unless(flags.hairpin_safe, "hairpin_safe", "hairpin freedom");
  if (c.reverse) detail::refuse_unless(flags.reverse_safe, "reverse_safe", "the reverse constraint");
  if (c.gc_balanced) detail::refuse_unless(flags.gc_balanced, "gc_balanced", "balanced GC content");

  const auto words = enumerate_codewords(code, limit);
  const TransitionMap map{pair, h0};
  std::vector<DnaString> dna(words.size());
  const unsigned w = std::max(1u, workers);
  detail::parallel_slices(words.size(), w, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) dna[i] = encode(words[i], map);
  });

  const std::size_t n = code.length();
  const std::size_t ell = pair.ell();
  DnaCodeBuildReport r;
  r.code_name = code.name();
  r.x = pair.x().str();
  r.y = pair.y().str();
  r.ell = ell;
  r.h0 = h0;
  r.binary_length = n;
  r.pair_flags = flags;
  r.claims = c;
  r.predicted_length = n * ell;
  r.predicted_size = words.size();
  r.predicted_distance = words.size() >= 2 ? min_binary_distance(words, ell, w) : n * ell;
  const StartClass start = is_y_class(h0) ? StartClass::Y : StartClass::X;
  r.predicted_gc = encoded_gc_content(n, gc_content(pair.x()), gc_content(pair.y()), start);

  DnaCode dna_code(std::move(dna));
  r.measured = verify_code(dna_code, r.predicted_distance, w);
  const auto& m = r.measured;

  detail::add_check(r, "length", true, r.predicted_length, m.length, m.length == r.predicted_length);
  detail::add_check(r, "size", true, r.predicted_size, m.size, m.size == r.predicted_size);
  detail::add_check(r, "distance", true, r.predicted_distance, m.min_hamming, m.min_hamming == r.predicted_distance);
  const std::size_t gc_measured = m.gc_constant.value_or(std::size_t(-1));
  r.checks.push_back({"gc_content", true, std::to_string(r.predicted_gc),
                      m.gc_constant ? std::to_string(*m.gc_constant) : "varies", gc_measured == r.predicted_gc});
  if (c.gc_balanced) {
    // For odd n the floor/ceil form also needs gc(x) = floor(ell/2).
    const std::size_t gx = gc_content(pair.x());
    const bool applies = n % 2 == 0 || gx == ell / 2;
    const std::size_t half = start == StartClass::X ? (n * ell) / 2 : (n * ell + 1) / 2;
    detail::add_check(r, "gc_half_length", applies, half, gc_measured, gc_measured == half);
  }
  if (c.conflict) {
    r.predicted_conflict_level = std::min(2 * ell - 1, (n * ell) / 2);
    detail::add_check(r, "conflict_level", true, *r.predicted_conflict_level, m.conflict_free_level,
                      m.conflict_free_level >= *r.predicted_conflict_level);
  }
  r.predicted_hairpin_free = c.hairpin;
  detail::add_flag_check(r, "hairpin_free", c.hairpin, m.hairpin_free);
  detail::add_flag_check(r, "reverse", c.reverse && n % 2 == 0, m.reverse_ok);
  detail::add_flag_check(r, "reverse_complement", false, m.reverse_complement_ok);
  if (contains_unit_vector_e1(code)) {
    detail::add_flag_check(r, "complement_e1", true, m.complement_ok);
  }
  if (2 * r.predicted_distance <= n * ell) {
    // Recorded only: small distance alone does not force the complement constraint.
    detail::add_flag_check(r, "complement_small_distance", false, m.complement_ok);
  }
  return {std::move(dna_code), std::move(r)};
}

inline constexpr std::size_t kReedMullerDnaMaxM = 4;

/// R(r, m) through the encoder, with the Reed-Muller predictions for length
/// ell*2^m, distance ell*2^(m-r-1), GC ell*2^(m-1) and size 2^dim. Refuses
/// r = m (fractional distance) and m > 4.
inline DnaCodeBuild reed_muller_dna(std::size_t r, std::size_t m, const BlockPair& pair, BlockRole h0 = BlockRole::X,
                                    unsigned workers = detail::default_workers()) {
  if (r >= m) throw std::invalid_argument("reed_muller_dna: need r < m (distance ell*2^(m-r-1) is fractional at r = m)");
  if (m > kReedMullerDnaMaxM) throw RefusedError("reed_muller_dna: m > 4 is beyond desk scale", std::uint64_t{1} << m);
  const auto code = reed_muller_code(r, m);
  auto build = build_dna_code(code, pair, h0, std::nullopt, workers);
  auto& rep = build.report;
  const auto& meas = rep.measured;
  const std::size_t ell = pair.ell();
  const std::size_t len = std::size_t{1} << m;

  std::size_t dim = 0, from_one = 0;
  for (std::size_t i = 0; i <= r; ++i) dim += detail::binomial(m, i);
  for (std::size_t i = 1; i <= r; ++i) from_one += detail::binomial(m, i);
  const std::size_t theorem_exponent = r * detail::binomial(m, r);
  const std::size_t rank = code.generator()->rank();

  detail::add_check(rep, "rm_length", true, ell * len, meas.length, meas.length == ell * len);
  detail::add_check(rep, "rm_dimension", true, dim, rank, rank == dim);
  detail::add_check(rep, "rm_size", true, std::uint64_t{1} << dim, meas.size, meas.size == (std::uint64_t{1} << dim));
  detail::add_check(rep, "rm_size_sum_from_one", false, std::uint64_t{1} << from_one, meas.size,
                    meas.size == (std::uint64_t{1} << from_one));
  detail::add_check(rep, "rm_size_theorem_exponent", false, std::uint64_t{1} << theorem_exponent, meas.size,
                    meas.size == (std::uint64_t{1} << theorem_exponent));
  const std::size_t dist = ell * (std::size_t{1} << (m - r - 1));
  detail::add_check(rep, "rm_distance", true, dist, meas.min_hamming, meas.min_hamming == dist);
  const std::size_t gc = ell * (len / 2);
  const std::size_t gc_measured = meas.gc_constant.value_or(std::size_t(-1));
  detail::add_check(rep, "rm_gc_content", rep.pair_flags.gc_balanced, gc, gc_measured, gc_measured == gc);
  const auto& f = rep.pair_flags;
  const bool hypotheses = f.conflict_safe && f.hairpin_safe && f.reverse_safe && f.gc_balanced;
  detail::add_flag_check(rep, "rm_reverse_complement", hypotheses, meas.reverse_complement_ok);
  return build;
}

/// Lexicographically first fully valid pair for block length ell.
inline BlockPair default_pair(std::size_t ell) {
  const auto pairs = enumerate_valid_pairs(ell);
  if (pairs.empty()) throw std::invalid_argument("no fully valid pair exists for ell = " + std::to_string(ell));
  return pairs.front();
}

}  // namespace dnacodes
