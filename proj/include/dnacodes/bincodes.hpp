#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/binary_word.hpp"
#include "dnacodes/error.hpp"

namespace dnacodes {

/// k x n binary matrix, one BinaryWord per row.
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;

  /// Throws std::invalid_argument on an empty matrix or ragged rows.
  explicit GeneratorMatrix(std::vector<BinaryWord> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty()) throw std::invalid_argument("GeneratorMatrix: empty matrix");
    for (const auto& r : rows_) {
      if (r.size() != rows_.front().size()) throw std::invalid_argument("GeneratorMatrix: ragged rows");
    }
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
  const std::vector<BinaryWord>& row_words() const noexcept { return rows_; }
  const BinaryWord& row(std::size_t i) const { return rows_.at(i); }

  /// Reduced row echelon form over GF(2), zero rows dropped.
  GeneratorMatrix rref() const {
    std::vector<BinaryWord> m = rows_;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < columns() && lead < m.size(); ++col) {
      std::size_t pivot = lead;
      while (pivot < m.size() && !m[pivot][col]) ++pivot;
      if (pivot == m.size()) continue;
      std::swap(m[lead], m[pivot]);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r != lead && m[r][col]) {
          for (std::size_t c = 0; c < columns(); ++c) m[r][c] ^= m[lead][c];
        }
      }
      ++lead;
    }
    m.resize(lead);
    if (m.empty()) m.push_back(BinaryWord(columns(), 0));
    GeneratorMatrix out;
    out.rows_ = std::move(m);
    return out;
  }

  /// Rank over GF(2).
  std::size_t rank() const {
    const auto r = rref();
    return (r.rows_.size() == 1 && binary_weight(r.rows_.front()) == 0) ? 0 : r.rows_.size();
  }

  /// Whether `w` lies in the row space.
  bool spans(const BinaryWord& w) const {
    if (w.size() != columns()) return false;
    auto extended = rows_;
    extended.push_back(w);
    return GeneratorMatrix(std::move(extended)).rank() == rank();
  }

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  std::vector<BinaryWord> rows_;
};

/// A binary code given either by an explicit codeword list or by a generator
/// matrix (then linear, with 2^rank codewords).
class BinaryCode {
 public:
  /// Explicit list; sorted and deduplicated. Throws on empty or mixed lengths.
  static BinaryCode from_words(std::vector<BinaryWord> words, std::string name = "custom") {
    if (words.empty()) throw std::invalid_argument("BinaryCode: empty codeword list");
    for (const auto& w : words) {
      if (w.empty() || w.size() != words.front().size()) throw std::invalid_argument("BinaryCode: mixed or zero lengths");
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    BinaryCode c;
    c.length_ = words.front().size();
    c.words_ = std::move(words);
    c.name_ = std::move(name);
    return c;
  }

  static BinaryCode from_generator(GeneratorMatrix g, std::string name = "linear") {
    BinaryCode c;
    c.length_ = g.columns();
    c.generator_ = std::move(g);
    c.name_ = std::move(name);
    return c;
  }

  std::size_t length() const noexcept { return length_; }
  const std::string& name() const noexcept { return name_; }
  const std::optional<GeneratorMatrix>& generator() const noexcept { return generator_; }
  const std::optional<std::vector<BinaryWord>>& words() const noexcept { return words_; }

  /// 2^rank for generator codes; may exceed 64 bits only if rank >= 64.
  std::uint64_t size() const {
    if (words_) return words_->size();
    const auto k = generator_->rank();
    if (k >= 64) throw RefusedError("BinaryCode: dimension too large to count", 0);
    return std::uint64_t{1} << k;
  }

  bool contains(const BinaryWord& w) const {
    if (words_) return std::binary_search(words_->begin(), words_->end(), w);
    return generator_->spans(w);
  }

 private:
  BinaryCode() = default;
  std::size_t length_ = 0;
  std::optional<GeneratorMatrix> generator_;
  std::optional<std::vector<BinaryWord>> words_;
  std::string name_;
};

inline constexpr std::uint64_t kDefaultCodewordLimit = std::uint64_t{1} << 24;

/// All codewords in lexicographic order. Generator codes are enumerated over
/// the message space. Refuses (with the required count) above `limit`.
inline std::vector<BinaryWord> enumerate_codewords(const BinaryCode& code, std::uint64_t limit = kDefaultCodewordLimit) {
  if (code.words()) {
    if (code.words()->size() > limit) throw RefusedError("enumerate_codewords: code exceeds the limit", code.words()->size());
    return *code.words();
  }
  const auto basis = code.generator()->rref();
  const std::size_t k = code.generator()->rank();
  if (k >= 63 || (std::uint64_t{1} << k) > limit) {
    throw RefusedError("enumerate_codewords: 2^" + std::to_string(k) + " codewords exceed the limit",
                       k >= 63 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << k);
  }
  const std::size_t n = code.length();
  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
    BinaryWord w(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if ((msg >> i) & 1u) {
        for (std::size_t c = 0; c < n; ++c) w[c] ^= basis.row(i)[c];
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Minimum Hamming distance over distinct codewords (n for a single word).
inline std::size_t min_hamming_distance(const BinaryCode& code, std::uint64_t limit = kDefaultCodewordLimit) {
  const auto words = enumerate_codewords(code, limit);
  std::size_t best = code.length();
  if (code.generator()) {
    for (const auto& w : words) {
      const auto wt = binary_weight(w);
      if (wt > 0) best = std::min(best, wt);
    }
    return best;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, binary_hamming(words[i], words[j]));
  }
  return best;
}

/// Whether (1 0 ... 0) is a codeword.
inline bool contains_unit_vector_e1(const BinaryCode& code) {
  BinaryWord e1(code.length(), 0);
  e1[0] = 1;
  return code.contains(e1);
}

inline BinaryCode repetition_code(std::size_t n) {
  if (n < 1) throw std::invalid_argument("repetition_code: n must be >= 1");
  return BinaryCode::from_generator(GeneratorMatrix({BinaryWord(n, 1)}), "repetition" + std::to_string(n));
}

/// The sixteen [7,4,3] Hamming codewords in their published order.
inline const std::vector<std::string>& hamming_7_4_listing() {
  static const std::vector<std::string> words{
      "0000000", "1110000", "1001100", "0111100", "0101010", "1011010", "1100110", "0010110",
      "1101001", "0011001", "0100101", "1010101", "1000011", "0110011", "0001111", "1111111"};
  return words;
}

inline BinaryCode hamming_7_4() {
  std::vector<BinaryWord> words;
  for (const auto& s : hamming_7_4_listing()) words.push_back(parse_binary(s));
  return BinaryCode::from_words(std::move(words), "hamming74");
}

namespace detail {

inline std::vector<BinaryWord> reed_muller_rows(std::size_t r, std::size_t m) {
  const std::size_t len = std::size_t{1} << m;
  if (r == 0) return {BinaryWord(len, 1)};
  if (r == m) {
    auto rows = reed_muller_rows(m - 1, m);
    BinaryWord last(len, 1);
    last.back() = 0;
    rows.push_back(std::move(last));
    return rows;
  }
  const auto top = reed_muller_rows(r, m - 1);
  const auto bottom = reed_muller_rows(r - 1, m - 1);
  std::vector<BinaryWord> rows;
  for (const auto& t : top) {
    BinaryWord w(t);
    w.insert(w.end(), t.begin(), t.end());
    rows.push_back(std::move(w));
  }
  for (const auto& b : bottom) {
    BinaryWord w(len / 2, 0);
    w.insert(w.end(), b.begin(), b.end());
    rows.push_back(std::move(w));
  }
  return rows;
}

}  // namespace detail

/// Generator of R(r, m) from the (u | u+v) block recursion. G_{0,m} is the
/// all-ones row; G_{m,m} appends the row 1...10 to G_{m-1,m}.
inline GeneratorMatrix reed_muller(std::size_t r, std::size_t m) {
  if (r > m) throw std::invalid_argument("reed_muller: need r <= m");
  if (m > 16) throw RefusedError("reed_muller: m > 16 is beyond desk scale", m);
  return GeneratorMatrix(detail::reed_muller_rows(r, m));
}

inline BinaryCode reed_muller_code(std::size_t r, std::size_t m) {
  return BinaryCode::from_generator(reed_muller(r, m), "rm," + std::to_string(r) + "," + std::to_string(m));
}

/// Coefficients x^0..x^11 of g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11.
inline constexpr std::uint8_t kGolayPolynomial[12] = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};

/// Systematic [23,12,7] generator: row reduction of the cyclic code
/// generated by kGolayPolynomial.
inline const std::vector<std::string>& golay_23_12_rows() {
  static const std::vector<std::string> rows{
      "10000000000010101110001", "01000000000011111001001", "00100000000011010010101",
      "00010000000011000111011", "00001000000011001101100", "00000100000001100110110",
      "00000010000000110011011", "00000001000010110111100", "00000000100001011011110",
      "00000000010000101101111", "00000000001010111000110", "00000000000101011100011"};
  return rows;
}

/// The twelve cyclic shifts of g(x), before reduction.
inline GeneratorMatrix golay_cyclic_generator() {
  std::vector<BinaryWord> rows;
  for (std::size_t shift = 0; shift < 12; ++shift) {
    BinaryWord w(23, 0);
    for (std::size_t i = 0; i < 12; ++i) w[shift + i] = kGolayPolynomial[i];
    rows.push_back(std::move(w));
  }
  return GeneratorMatrix(std::move(rows));
}

inline BinaryCode golay_23_12() {
  std::vector<BinaryWord> rows;
  for (const auto& s : golay_23_12_rows()) rows.push_back(parse_binary(s));
  return BinaryCode::from_generator(GeneratorMatrix(std::move(rows)), "golay23");
}

/// Named codes accepted by the command line: repetitionN, hamming74,
/// golay23, rm,R,M.
inline BinaryCode named_code(const std::string& name) {
  if (name == "hamming74") return hamming_7_4();
  if (name == "golay23") return golay_23_12();
  if (name.rfind("repetition", 0) == 0) {
    const std::string digits = name.substr(10);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      return repetition_code(std::stoul(digits));
    }
  }
  if (name.rfind("rm,", 0) == 0) {
    const auto comma = name.find(',', 3);
    if (comma != std::string::npos) {
      const std::string r = name.substr(3, comma - 3), m = name.substr(comma + 1);
      auto numeric = [](const std::string& s) { return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos; };
      if (numeric(r) && numeric(m)) return reed_muller_code(std::stoul(r), std::stoul(m));
    }
  }
  throw std::invalid_argument("unknown code '" + name + "' (expected repetitionN, hamming74, golay23 or rm,R,M)");
}

}  // namespace dnacodes
