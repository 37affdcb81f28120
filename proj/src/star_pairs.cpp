#include "genpascal/star_pairs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace genpascal {

bool satisfies_star(const Word& u, const Word& v, const Modulus& m) {
  if (!u.is_canonical() || !v.is_canonical()) return false;
  if (u.empty() && v.empty()) return false;
  if (v.size() > u.size()) return false;
  if (is_subword(u, v.with(0)) || is_subword(u, v.with(1))) return false;
  return binom_words_mod(u, v, m.prime()) == m.residue();
}

namespace {

// Distinct subwords v of u starting with 1, explored through their leftmost
// embedding. v0 and v1 are both absent from u exactly when the embedding of
// v ends on the last letter of u.
void collect_star_subwords(const Word& u, Word& v, std::size_t end, const Modulus& m,
                           std::vector<Word>& out) {
  bool extended = false;
  for (int b = 0; b <= 1; ++b) {
    std::size_t next = end + 1;
    while (next < u.size() && u[next] != b) ++next;
    if (next == u.size()) continue;
    extended = true;
    v.push_back(b);
    collect_star_subwords(u, v, next, m, out);
    v.pop_back();
  }
  if (!extended && binom_words_mod(u, v, m.prime()) == m.residue()) out.push_back(v);
}

}  // namespace

std::vector<StarPair> enumerate_star_pairs(unsigned max_len, const Modulus& m, unsigned cap) {
  if (max_len > cap) {
    throw std::length_error("max_len " + std::to_string(max_len) + " exceeds cap " +
                            std::to_string(cap));
  }
  if (max_len > 62) throw std::length_error("max_len above 62 is not supported");
  std::vector<StarPair> pairs;
  std::vector<Word> found;
  for (unsigned len = 1; len <= max_len; ++len) {
    const std::uint64_t first = std::uint64_t{1} << (len - 1);
    const std::uint64_t last = std::uint64_t{1} << len;
    for (std::uint64_t value = first; value < last; ++value) {
      const Word u = rep2(value);
      Word v = Word::parse("1");
      found.clear();
      collect_star_subwords(u, v, 0, m, found);
      std::sort(found.begin(), found.end());
      for (auto& w : found) pairs.push_back({u, std::move(w), m});
    }
  }
  return pairs;
}

std::pair<StarPair, StarPair> extend_star(const StarPair& pair) {
  if (!satisfies_star(pair.u, pair.v, pair.modulus)) {
    throw std::invalid_argument("(" + pair.u.str() + ", " + pair.v.str() + ") is not a star pair");
  }
  StarPair zero{pair.u.with(0), pair.v.with(0), pair.modulus};
  StarPair one{pair.u.with(1), pair.v.with(1), pair.modulus};
  if (!satisfies_star(zero.u, zero.v, zero.modulus) || !satisfies_star(one.u, one.v, one.modulus)) {
    throw std::logic_error("star extension produced a non-star pair from (" + pair.u.str() +
                           ", " + pair.v.str() + ")");
  }
  return {std::move(zero), std::move(one)};
}

bool zero_prolongation_check(const StarPair& pair, unsigned max_w) {
  if (max_w > 24) throw std::length_error("zero_prolongation_check: max_w above 24");
  for (unsigned len = 1; len <= max_w; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word vw = pair.v;
      for (unsigned i = len; i-- > 0;) vw.push_back(static_cast<int>((bits >> i) & 1u));
      if (is_subword(pair.u, vw)) return false;
    }
  }
  return true;
}

GapFamilyMember family_gap(unsigned n, unsigned rr) {
  if (n > 8 || rr > 7) throw std::invalid_argument("family_gap requires n <= 8 and rr <= 7");
  const Word one = Word::parse("1");
  Word u = one + Word::repeat(0, 8 * n + 4 + rr) + one;
  Word v = one + Word::repeat(0, 8 * n + rr) + one;
  const bool star = satisfies_star(u, v, odd_modulus());
  return {std::move(u), std::move(v), star};
}

std::pair<Word, Word> complete_to_star(const Word& u, const Word& v, unsigned k, const Modulus& m) {
  if (u.empty() || v.empty() || !u.is_canonical() || !v.is_canonical()) {
    throw std::invalid_argument("complete_to_star requires nonempty canonical words");
  }
  const std::uint64_t p = m.prime().value();
  std::uint64_t block = 1;
  for (unsigned i = 0; i < k; ++i) {
    block *= p;
    if (block > (std::uint64_t{1} << 20)) throw std::length_error("completion block p^k too long");
  }
  if (block <= u.size()) {
    throw std::invalid_argument("complete_to_star requires p^k > |u|");
  }
  if (binom_words_mod(u, v, m.prime()) != m.residue()) {
    throw std::invalid_argument("binom(" + u.str() + ", " + v.str() + ") is not ≡ r mod p");
  }
  const Word tail = Word::repeat(0, block) + Word::parse("1");
  Word uk = u + tail;
  Word vk = v + tail;
  if (!satisfies_star(uk, vk, m)) throw std::logic_error("completion is not a star pair");
  return {std::move(uk), std::move(vk)};
}

}  // namespace genpascal
