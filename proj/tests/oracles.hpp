#pragma once

// Brute-force reference computations used by the test suites. Nothing here
// shares code with the library's dynamic programs.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Occurrences of v in u as index tuples; end position of each occurrence.
inline void occurrences(const std::string& u, const std::string& v, std::size_t from, std::size_t matched,
                        std::size_t last, std::vector<std::size_t>& ends) {
  if (matched == v.size()) {
    ends.push_back(last);
    return;
  }
  for (std::size_t i = from; i < u.size(); ++i) {
    if (u[i] == v[matched]) occurrences(u, v, i + 1, matched + 1, i, ends);
  }
}

/// End index of every occurrence of v in u (v nonempty), by enumeration.
inline std::vector<std::size_t> occurrence_ends(const std::string& u, const std::string& v) {
  std::vector<std::size_t> ends;
  occurrences(u, v, 0, 0, 0, ends);
  return ends;
}

/// Number of occurrences by enumerating index subsets of u.
inline std::uint64_t count_subwords(const std::string& u, const std::string& v) {
  if (v.empty()) return 1;
  if (v.size() > u.size()) return 0;
  std::uint64_t count = 0;
  const std::size_t n = u.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != v.size()) continue;
    std::string picked;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) picked.push_back(u[i]);
    if (picked == v) ++count;
  }
  return count;
}

/// Pascal's triangle C(m, n) mod p for m, n <= size.
inline std::vector<std::vector<std::uint32_t>> pascal_mod(std::size_t size, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> c(size + 1, std::vector<std::uint32_t>(size + 1, 0));
  for (std::size_t m = 0; m <= size; ++m) {
    c[m][0] = 1 % p;
    for (std::size_t k = 1; k <= m; ++k) c[m][k] = (c[m - 1][k - 1] + c[m - 1][k]) % p;
  }
  return c;
}

/// Exact C(m, n) for small arguments.
inline std::uint64_t choose(std::uint64_t m, std::uint64_t n) {
  if (n > m) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k <= n; ++k) r = r * (m - n + k) / k;
  return r;
}

inline std::string binary(std::uint64_t n) {
  std::string s;
  for (; n > 0; n >>= 1) s.insert(s.begin(), static_cast<char>('0' + (n & 1)));
  return s;
}

/// Canonical words (ε and 1{0,1}*) with length <= max_len, genealogical order.
inline std::vector<std::string> canonical_words(unsigned max_len) {
  std::vector<std::string> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << max_len); ++i) out.push_back(binary(i));
  return out;
}

/// All binary words of exactly the given length.
inline std::vector<std::string> all_words(unsigned len) {
  std::vector<std::string> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
    std::string s;
    for (unsigned i = len; i-- > 0;) s.push_back(static_cast<char>('0' + ((x >> i) & 1)));
    out.push_back(s);
  }
  return out;
}

/// {(x, y) : 2^{n-1} <= y < 2^n, 0 <= x <= y, binom(rep2(y), rep2(x)) > 0}.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> vn(unsigned n) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t y = std::uint64_t{1} << (n - 1); y < (std::uint64_t{1} << n); ++y) {
    for (std::uint64_t x = 0; x <= y; ++x) {
      if (count_subwords(binary(y), binary(x)) > 0) out.emplace(x, y);
    }
  }
  return out;
}

/// The star condition evaluated straight from its definition.
inline bool star(const std::string& u, const std::string& v, std::uint32_t p, std::uint32_t r) {
  if (u.empty() && v.empty()) return false;
  return count_subwords(u, v) % p == r && count_subwords(u, v + "0") == 0 && count_subwords(u, v + "1") == 0;
}

}  // namespace oracle
