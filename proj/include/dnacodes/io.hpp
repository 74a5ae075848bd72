#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/binary_word.hpp"
#include "dnacodes/dna_string.hpp"
#include "dnacodes/error.hpp"
#include "dnacodes/isomap.hpp"

// Line formats. Lines starting with '#' are comments; blank lines are
// ignored. Code files hold one uppercase ACGT word per line, binary code files
// one 0/1 word per line, pair files `x<TAB>y` per line.

namespace dnacodes::io {

namespace detail {

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline bool skip(const std::string& line) { return line.empty() || line.front() == '#'; }

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

/// Reads a DNA code. Throws ParseError carrying the 1-based line number on
/// a bad character, lowercase input or a length different from the first word.
inline std::vector<DnaString> read_dna_words(std::istream& in) {
  std::vector<DnaString> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = detail::strip_cr(std::move(line));
    if (detail::skip(line)) continue;
    for (char c : line) {
      if (c != 'A' && c != 'C' && c != 'G' && c != 'T') {
        throw ParseError("invalid character '" + std::string(1, c) + "'", number);
      }
    }
    auto w = DnaString::parse(line);
    if (!out.empty() && w.size() != out.front().size()) {
      throw ParseError("length " + std::to_string(w.size()) + " differs from " +
                           std::to_string(out.front().size()),
                       number);
    }
    out.push_back(std::move(w));
  }
  if (out.empty()) throw ParseError("no codewords found", number);
  return out;
}

inline std::vector<DnaString> read_dna_words(const std::string& path) {
  auto in = detail::open(path);
  return read_dna_words(in);
}

inline void write_dna_words(std::ostream& out, const std::vector<DnaString>& words,
                            const std::vector<std::string>& header = {}) {
  for (const auto& h : header) out << "# " << h << '\n';
  for (const auto& w : words) out << w.str() << '\n';
}

inline std::vector<BinaryWord> read_binary_words(std::istream& in) {
  std::vector<BinaryWord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = detail::strip_cr(std::move(line));
    if (detail::skip(line)) continue;
    BinaryWord w;
    try {
      w = parse_binary(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
    if (!out.empty() && w.size() != out.front().size()) {
      throw ParseError("word length differs", number);
    }
    out.push_back(std::move(w));
  }
  if (out.empty()) throw ParseError("no binary words found", number);
  return out;
}

inline std::vector<BinaryWord> read_binary_words(const std::string& path) {
  auto in = detail::open(path);
  return read_binary_words(in);
}

inline void write_binary_words(std::ostream& out, const std::vector<BinaryWord>& words,
                               const std::vector<std::string>& header = {}) {
  for (const auto& h : header) out << "# " << h << '\n';
  for (const auto& w : words) out << to_string(w) << '\n';
}

/// Pairs as `x<TAB>y` lines. Comment lines (including the count line) are skipped.
inline std::vector<std::pair<std::string, std::string>> read_pairs(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = detail::strip_cr(std::move(line));
    if (detail::skip(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected x<TAB>y", number);
    }
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
  auto in = detail::open(path);
  return read_pairs(in);
}

inline void write_pairs(std::ostream& out, const std::vector<BlockPair>& pairs, const std::vector<std::string>& header = {}) {
  for (const auto& h : header) out << "# " << h << '\n';
  for (const auto& p : pairs) out << p.x().str() << '\t' << p.y().str() << '\n';
  out << "# count " << pairs.size() << '\n';
}

}  // namespace dnacodes::io
