#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dnacodes/constraints.hpp"
#include "dnacodes/detail/parallel.hpp"
#include "dnacodes/dna_string.hpp"
#include "dnacodes/error.hpp"

namespace dnacodes {

/// Length n, conflict-free level ell and GC target g of a seed set.
struct SeedSetSpec {
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t gc = 0;

  void validate() const {
    if (n < 2 || ell < 1 || ell > n / 2 || gc > n) {
      throw std::invalid_argument("seed set needs n >= 2, 1 <= ell <= floor(n/2), 0 <= gc <= n (got n=" +
                                  std::to_string(n) + ", ell=" + std::to_string(ell) +
                                  ", gc=" + std::to_string(gc) + ")");
    }
  }
};

/// Largest number of candidate strings enumerate_seed_set will generate.
inline constexpr std::uint64_t kSeedEnumerationLimit = std::uint64_t{1} << 26;

/// All ell-conflict-free strings of length n with GC content g, sorted.
/// Candidates are generated by GC pattern, so the GC test precedes the
/// conflict test.
inline std::vector<DnaString> enumerate_seed_set(const SeedSetSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  if (n > DnaString::kBasesPerWord) throw RefusedError("seed enumeration supports n <= 32", n);
  const std::uint64_t candidates = detail::binomial(n, spec.gc) << n;
  if (candidates > kSeedEnumerationLimit) {
    throw RefusedError("seed enumeration would generate " + std::to_string(candidates) + " candidates", candidates);
  }
  std::vector<DnaString> out;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t gc_mask = 0; gc_mask < full; ++gc_mask) {
    if (static_cast<std::size_t>(std::popcount(gc_mask)) != spec.gc) continue;
    for (std::uint64_t pick = 0; pick < full; ++pick) {
      DnaString s(n);
      for (std::size_t i = 0; i < n; ++i) {
        const bool strong = (gc_mask >> i) & 1u;
        const bool alt = (pick >> i) & 1u;
        s.set(i, strong ? (alt ? Nucleotide::G : Nucleotide::C) : (alt ? Nucleotide::T : Nucleotide::A));
      }
      if (detail::conflict_free_up_to(s, spec.ell)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Which constraints an exact search enforces. The three orbit operations
/// require closure of the code under the corresponding map; `gc` restricts
/// candidates to a fixed GC content.
struct ConstraintSet {
  bool reverse = false;
  bool reverse_complement = false;
  bool complement = false;
  bool gc = false;

  static constexpr ConstraintSet full() { return {true, true, true, true}; }
};

/// Closure of {s} under the selected maps, sorted and deduplicated.
inline std::vector<DnaString> orbit(const DnaString& s, bool rev, bool rc, bool comp) {
  std::vector<DnaString> out{s};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const DnaString x = out[i];
    auto add = [&](DnaString y) {
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
    };
    if (rev) add(reverse(x));
    if (rc) add(reverse_complement(x));
    if (comp) add(complement(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest superset of `strings` closed under reverse and complement (hence
/// also reverse-complement). Sorted, no duplicates.
inline std::vector<DnaString> orbit_closure(std::span<const DnaString> strings) {
  std::vector<DnaString> out;
  out.reserve(strings.size() * 4);
  for (const auto& s : strings) {
    if (s.size() != strings.front().size()) throw std::invalid_argument("orbit_closure: mixed lengths");
    const DnaString c = complement(s);
    out.push_back(s);
    out.push_back(reverse(s));
    out.push_back(reverse(c));
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Distribution of |R| for each random trial.
struct SubsetLaw {
  enum class Kind { Uniform, UniformUpTo, Fixed };
  Kind kind = Kind::Uniform;
  std::size_t bound = 0;

  static SubsetLaw uniform() { return {}; }
  static SubsetLaw uniform_up_to(std::size_t k) { return {Kind::UniformUpTo, k}; }
  static SubsetLaw fixed(std::size_t k) { return {Kind::Fixed, k}; }

  /// "uniform", "uniform:K" (|R| uniform on 1..K) or "fixed:K".
  static SubsetLaw parse(const std::string& text) {
    auto number = [&](std::size_t colon) -> std::size_t {
      const std::string digits = text.substr(colon + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("subset law: bad bound in '" + text + "'");
      }
      const auto k = static_cast<std::size_t>(std::stoull(digits));
      if (k == 0) throw std::invalid_argument("subset law: bound must be >= 1");
      return k;
    };
    if (text == "uniform") return uniform();
    if (text.rfind("uniform:", 0) == 0) return uniform_up_to(number(7));
    if (text.rfind("fixed:", 0) == 0) return fixed(number(5));
    throw std::invalid_argument("subset law: expected uniform, uniform:K or fixed:K, got '" + text + "'");
  }

  std::string str() const {
    switch (kind) {
      case Kind::Uniform: return "uniform";
      case Kind::UniformUpTo: return "uniform:" + std::to_string(bound);
      case Kind::Fixed: return "fixed:" + std::to_string(bound);
    }
    return "uniform";
  }
};

struct SearchConfig {
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  SubsetLaw subset_law = SubsetLaw::uniform();
  unsigned workers = detail::default_workers();
};

/// Best code found for one (n, ell, g, d_H) cell.
struct BoundEntry {
  std::size_t distance = 0;
  std::size_t size = 0;
  std::optional<std::uint64_t> trial;
  std::vector<DnaString> code;
};

struct BoundTable {
  SeedSetSpec spec;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::string subset_law;
  std::size_t seed_set_size = 0;
  /// entries[d - 1] holds the cell for d_H = d, d = 1..n.
  std::vector<BoundEntry> entries;

  const BoundEntry& at_distance(std::size_t d) const { return entries.at(d - 1); }
};

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of trial `trial` under `master_seed`; independent of scheduling.
constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) noexcept {
  return splitmix64(master_seed ^ splitmix64(trial));
}

// Unbiased draw from [0, bound). std::uniform_int_distribution is not
// specified bit-for-bit, which would break cross-platform reproducibility.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

inline std::size_t draw_subset_size(const SubsetLaw& law, std::mt19937_64& rng, std::size_t population) {
  switch (law.kind) {
    case SubsetLaw::Kind::Uniform:
      return 1 + static_cast<std::size_t>(uniform_below(rng, population));
    case SubsetLaw::Kind::UniformUpTo:
      return 1 + static_cast<std::size_t>(uniform_below(rng, std::min(law.bound, population)));
    case SubsetLaw::Kind::Fixed:
      return std::min(law.bound, population);
  }
  return 1;
}

// Precomputed seed set with orbit membership, shared read-only by workers.
struct SeedIndex {
  std::vector<DnaString> strings;
  std::vector<std::uint64_t> packed;              // single-word form, n <= 32
  std::vector<std::vector<std::uint32_t>> orbit;  // orbit of each seed, as indices
};

inline SeedIndex index_seeds(std::vector<DnaString> seeds) {
  SeedIndex idx;
  idx.strings = std::move(seeds);
  std::unordered_map<DnaString, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < idx.strings.size(); ++i) {
    pos.emplace(idx.strings[i], i);
    idx.packed.push_back(idx.strings[i].words()[0]);
  }
  idx.orbit.resize(idx.strings.size());
  for (std::uint32_t i = 0; i < idx.strings.size(); ++i) {
    for (const auto& image : orbit(idx.strings[i], true, true, true)) {
      // Reverse and complement preserve both GC content and conflict freedom.
      idx.orbit[i].push_back(pos.at(image));
    }
  }
  return idx;
}

// Per-worker scratch state for a trial.
struct TrialScratch {
  std::vector<std::uint32_t> perm;
  std::vector<std::uint32_t> stamp;
  std::uint32_t generation = 0;
  std::vector<std::uint32_t> closure;

  explicit TrialScratch(std::size_t population) : perm(population), stamp(population, 0) {
    std::iota(perm.begin(), perm.end(), 0u);
  }
};

// Draws R for `trial` and leaves orbit_closure(R) in scratch.closure.
inline void run_trial(const SeedIndex& idx, const SearchConfig& cfg, std::uint64_t trial, TrialScratch& scratch) {
  std::mt19937_64 rng(trial_seed(cfg.master_seed, trial));
  const std::size_t population = idx.strings.size();
  const std::size_t k = draw_subset_size(cfg.subset_law, rng, population);
  // Partial Fisher-Yates; the swaps are undone so `perm` stays the identity.
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  swaps.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, population - i));
    std::swap(scratch.perm[i], scratch.perm[j]);
    swaps.emplace_back(i, j);
  }
  if (++scratch.generation == 0) {
    std::fill(scratch.stamp.begin(), scratch.stamp.end(), 0u);
    scratch.generation = 1;
  }
  scratch.closure.clear();
  for (std::size_t i = 0; i < k; ++i) {
    for (auto member : idx.orbit[scratch.perm[i]]) {
      if (scratch.stamp[member] != scratch.generation) {
        scratch.stamp[member] = scratch.generation;
        scratch.closure.push_back(member);
      }
    }
  }
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) std::swap(scratch.perm[it->first], scratch.perm[it->second]);
}

// Minimum pairwise distance of the closure, or any value below `floor` as
// soon as one pair is found under it.
inline std::size_t closure_min_distance(const SeedIndex& idx, std::span<const std::uint32_t> members, std::size_t n,
                                        std::size_t floor) {
  std::size_t best = n;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::uint64_t x = idx.packed[members[i]];
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto d = static_cast<std::size_t>(std::popcount(nonzero_bases(x ^ idx.packed[members[j]])));
      if (d < best) {
        best = d;
        if (best < floor) return best;
      }
    }
  }
  return best;
}

struct Cell {
  std::size_t size = 0;
  std::uint64_t trial = 0;
};

}  // namespace detail

/// Random subset search: each trial draws |R| from the subset law, samples R
/// uniformly without replacement from the seed set, closes it under reverse
/// and complement, and credits every d_H up to the measured minimum distance.
/// Ties keep the earliest trial. The table depends only on (spec, trials,
/// master_seed, subset_law), never on the worker count.
inline BoundTable random_construction(const SeedSetSpec& spec, const SearchConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("random_construction: trials must be >= 1");
  const auto idx = detail::index_seeds(enumerate_seed_set(spec));
  if (idx.strings.empty()) throw std::invalid_argument("random_construction: empty seed set");
  const std::size_t n = spec.n;
  const unsigned workers = std::max(1u, cfg.workers);

  std::vector<std::vector<detail::Cell>> partial(workers, std::vector<detail::Cell>(n + 1));
  detail::parallel_slices(static_cast<std::size_t>(cfg.trials), workers,
                          [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& best = partial[w];
    detail::TrialScratch scratch(idx.strings.size());
    for (std::size_t t = begin; t < end; ++t) {
      detail::run_trial(idx, cfg, t, scratch);
      const std::size_t size = scratch.closure.size();
      std::size_t first = 1;
      while (first <= n && best[first].size >= size) ++first;
      if (first > n) continue;
      const std::size_t dstar = detail::closure_min_distance(idx, scratch.closure, n, first);
      for (std::size_t d = first; d <= dstar; ++d) best[d] = {size, t};
    }
  });

  BoundTable table;
  table.spec = spec;
  table.trials = cfg.trials;
  table.master_seed = cfg.master_seed;
  table.subset_law = cfg.subset_law.str();
  table.seed_set_size = idx.strings.size();
  detail::TrialScratch replay(idx.strings.size());
  for (std::size_t d = 1; d <= n; ++d) {
    detail::Cell cell;
    bool found = false;
    for (const auto& p : partial) {
      const auto& c = p[d];
      if (c.size == 0) continue;
      if (!found || c.size > cell.size || (c.size == cell.size && c.trial < cell.trial)) {
        cell = c;
        found = true;
      }
    }
    BoundEntry e;
    e.distance = d;
    if (found) {
      e.size = cell.size;
      e.trial = cell.trial;
      detail::run_trial(idx, cfg, cell.trial, replay);
      for (auto i : replay.closure) e.code.push_back(idx.strings[i]);
      std::sort(e.code.begin(), e.code.end());
    }
    table.entries.push_back(std::move(e));
  }
  return table;
}

namespace detail {

using Bitset = std::vector<std::uint64_t>;

inline bool test_bit(const Bitset& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
inline void set_bit(Bitset& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
inline void clear_bit(Bitset& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
inline bool any_bit(const Bitset& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Maximum-weight clique by branch and bound with a greedy colouring bound.
class WeightedCliqueSolver {
 public:
  WeightedCliqueSolver(std::vector<Bitset> adjacency, std::vector<std::size_t> weights)
      : adj_(std::move(adjacency)), weight_(std::move(weights)), words_((weight_.size() + 63) / 64) {}

  std::vector<std::size_t> solve() {
    Bitset all(words_, 0);
    for (std::size_t v = 0; v < weight_.size(); ++v) set_bit(all, v);
    std::vector<std::size_t> current;
    expand(all, 0, current);
    return best_clique_;
  }

 private:
  // Upper bound on the weight any clique inside `cand` can add: colour
  // greedily into independent sets and sum each class's heaviest vertex.
  std::size_t colour_bound(const Bitset& cand) const {
    Bitset left = cand;
    std::size_t bound = 0;
    while (any_bit(left)) {
      Bitset free = left;
      std::size_t heaviest = 0;
      for (std::size_t v = 0; v < weight_.size(); ++v) {
        if (!test_bit(free, v)) continue;
        heaviest = std::max(heaviest, weight_[v]);
        clear_bit(left, v);
        clear_bit(free, v);
        for (std::size_t w = 0; w < words_; ++w) free[w] &= ~adj_[v][w];
      }
      bound += heaviest;
    }
    return bound;
  }

  void expand(Bitset cand, std::size_t weight, std::vector<std::size_t>& current) {
    if (weight > best_weight_) {
      best_weight_ = weight;
      best_clique_ = current;
    }
    if (!any_bit(cand) || weight + colour_bound(cand) <= best_weight_) return;
    for (std::size_t v = 0; v < weight_.size(); ++v) {
      if (!test_bit(cand, v)) continue;
      if (weight + colour_bound(cand) <= best_weight_) return;
      Bitset next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & adj_[v][w];
      current.push_back(v);
      expand(std::move(next), weight + weight_[v], current);
      current.pop_back();
      clear_bit(cand, v);
    }
  }

  std::vector<Bitset> adj_;
  std::vector<std::size_t> weight_;
  std::size_t words_;
  std::size_t best_weight_ = 0;
  std::vector<std::size_t> best_clique_;
};

}  // namespace detail

inline constexpr std::size_t kExactSearchMaxStrings = 512;

/// Largest code drawn from the ell-conflict-free strings of length n (with GC
/// content g when `constraints.gc`), closed under the selected orbit maps,
/// with minimum distance >= d. Returns a witness code. Refuses instances with
/// more than 512 candidate strings unless n <= 6.
inline std::vector<DnaString> exact_max_code(std::size_t n, std::size_t ell, std::size_t g, std::size_t d,
                                             ConstraintSet constraints) {
  if (d < 1 || d > n) throw std::invalid_argument("exact_max_size: need 1 <= d <= n");
  SeedSetSpec spec{n, ell, g};
  spec.validate();
  std::vector<DnaString> pool;
  if (constraints.gc) {
    pool = enumerate_seed_set(spec);
  } else {
    if (n > 8) throw RefusedError("exact_max_size without GC restriction enumerates 4^n strings", std::uint64_t{1} << (2 * n));
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t i = 0; i < total; ++i) {
      auto s = DnaString::from_index(n, i);
      if (detail::conflict_free_up_to(s, ell)) pool.push_back(std::move(s));
    }
  }
  if (pool.size() > kExactSearchMaxStrings && n > 6) {
    throw RefusedError("exact_max_size: " + std::to_string(pool.size()) + " candidate strings exceed the limit of " +
                           std::to_string(kExactSearchMaxStrings),
                       pool.size());
  }

  // Vertices are orbits whose internal distances already reach d.
  std::vector<std::vector<DnaString>> orbits;
  {
    std::vector<bool> seen(pool.size(), false);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (seen[i]) continue;
      auto o = orbit(pool[i], constraints.reverse, constraints.reverse_complement, constraints.complement);
      for (const auto& s : o) {
        const auto it = std::lower_bound(pool.begin(), pool.end(), s);
        if (it != pool.end() && *it == s) seen[static_cast<std::size_t>(it - pool.begin())] = true;
      }
      if (min_hamming_distance(o) >= d) orbits.push_back(std::move(o));
    }
  }
  const std::size_t v = orbits.size();
  if (v == 0) return {};
  auto compatible = [&](std::size_t a, std::size_t b) {
    for (const auto& x : orbits[a]) {
      for (const auto& y : orbits[b]) {
        if (hamming_distance(x, y) < d) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<bool>> edge(v, std::vector<bool>(v, false));
  std::vector<std::size_t> degree(v, 0);
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (compatible(a, b)) {
        edge[a][b] = edge[b][a] = true;
        ++degree[a];
        ++degree[b];
      }
    }
  }
  std::vector<std::size_t> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  const std::size_t words = (v + 63) / 64;
  std::vector<detail::Bitset> adjacency(v, detail::Bitset(words, 0));
  std::vector<std::size_t> weights(v);
  for (std::size_t i = 0; i < v; ++i) {
    weights[i] = orbits[order[i]].size();
    for (std::size_t j = 0; j < v; ++j) {
      if (i != j && edge[order[i]][order[j]]) detail::set_bit(adjacency[i], j);
    }
  }
  detail::WeightedCliqueSolver solver(std::move(adjacency), std::move(weights));
  std::vector<DnaString> code;
  for (auto i : solver.solve()) {
    const auto& o = orbits[order[i]];
    code.insert(code.end(), o.begin(), o.end());
  }
  std::sort(code.begin(), code.end());
  return code;
}

inline std::size_t exact_max_size(std::size_t n, std::size_t ell, std::size_t g, std::size_t d, ConstraintSet constraints) {
  return exact_max_code(n, ell, g, d, constraints).size();
}

/// Largest complete-conflict-free GC code closed under reverse and
/// complement with d_H = n: 2 for odd n, 4 for even n.
inline std::size_t extremal_size(std::size_t n) {
  if (n < 2) throw std::invalid_argument("extremal_size: n must be >= 2");
  return n % 2 == 1 ? 2 : 4;
}

}  // namespace dnacodes
