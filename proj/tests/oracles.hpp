#pragma once

// Character-level reference implementations. Deliberately slow and written
// without the packed representation so they share no code with the library.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline char comp(char c) {
  switch (c) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
  }
  return '?';
}

inline std::string complement(const std::string& s) {
  std::string out;
  for (char c : s) out += comp(c);
  return out;
}

inline std::string reverse(const std::string& s) { return std::string(s.rbegin(), s.rend()); }

inline std::string reverse_complement(const std::string& s) { return reverse(complement(s)); }

inline std::size_t hamming(const std::string& a, const std::string& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::size_t gc(const std::string& s) {
  std::size_t g = 0;
  for (char c : s) g += (c == 'G' || c == 'C');
  return g;
}

// No window s[i, i+t) equal to s[i+t, i+2t) for 1 <= t <= ell.
inline bool conflict_free(const std::string& s, std::size_t ell) {
  for (std::size_t t = 1; t <= ell; ++t) {
    for (std::size_t i = 0; i + 2 * t <= s.size(); ++i) {
      if (s.compare(i, t, s, i + t, t) == 0) return false;
    }
  }
  return true;
}

// No 3-mer whose reverse complement also occurs (anywhere, overlaps allowed).
inline bool rc_substring_free(const std::string& s) {
  if (s.size() < 3) return true;
  for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
    const std::string rc = reverse_complement(s.substr(i, 3));
    for (std::size_t j = 0; j + 3 <= s.size(); ++j) {
      if (s.compare(j, 3, rc) == 0) return false;
    }
  }
  return true;
}

inline std::string from_index(std::size_t n, std::uint64_t v) {
  static const char* kBases = "ACGT";
  std::string s(n, 'A');
  for (std::size_t i = n; i-- > 0;) {
    s[i] = kBases[v & 3u];
    v >>= 2;
  }
  return s;
}

inline std::string random_string(std::mt19937_64& rng, std::size_t n) {
  static const char* kBases = "ACGT";
  std::string s(n, 'A');
  for (auto& c : s) c = kBases[rng() & 3u];
  return s;
}

// Encoder driven by the printed mapping table, keyed by block name.
// Rows: previous block x, xc, y, yc; columns: bit 0, bit 1.
inline std::string encode(const std::vector<std::uint8_t>& a, const std::string& x, const std::string& y,
                          const std::string& h0 = "x") {
  const std::vector<std::string> names{"x", "xc", "y", "yc"};
  const std::string next[4][2] = {{"y", "yc"}, {"yc", "y"}, {"xc", "x"}, {"x", "xc"}};
  auto text = [&](const std::string& r) {
    if (r == "x") return x;
    if (r == "xc") return complement(x);
    if (r == "y") return y;
    return complement(y);
  };
  auto flip = [](const std::string& r) { return r.size() == 1 ? r + "c" : r.substr(0, 1); };
  std::string role = a[0] ? flip(h0) : h0;
  std::string out = text(role);
  for (std::size_t i = 1; i < a.size(); ++i) {
    std::size_t k = 0;
    while (names[k] != role) ++k;
    role = next[k][a[i]];
    out += text(role);
  }
  return out;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace oracle
