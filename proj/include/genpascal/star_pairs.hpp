#pragma once

#include <utility>
#include <vector>

#include "genpascal/binomial.hpp"

namespace genpascal {

inline constexpr unsigned kDefaultStarLengthCap = 14;

/// A pair (u, v) of canonical words with binom(u, v) ≡ r (mod p) such that
/// neither v0 nor v1 occurs in u. Such pairs keep residue r under every
/// common extension (uw, vw).
struct StarPair {
  Word u;
  Word v;
  Modulus modulus;

  friend bool operator==(const StarPair&, const StarPair&) = default;
};

/// The extension clauses are exact: binom(u, v0) = binom(u, v1) = 0 as
/// integers, not merely modulo p.
bool satisfies_star(const Word& u, const Word& v, const Modulus& m);

/// All star pairs with |u| <= max_len, sorted by (|u|, u, |v|, v) in
/// genealogical order. Throws std::length_error if max_len > cap.
std::vector<StarPair> enumerate_star_pairs(unsigned max_len, const Modulus& m,
                                           unsigned cap = kDefaultStarLengthCap);

/// (u0, v0) and (u1, v1). Throws std::invalid_argument if the input is not a
/// star pair; both outputs are re-verified.
std::pair<StarPair, StarPair> extend_star(const StarPair& pair);

/// True iff binom(u, vw) = 0 for every nonempty w with |w| <= max_w.
bool zero_prolongation_check(const StarPair& pair, unsigned max_w);

struct GapFamilyMember {
  Word u;
  Word v;
  bool is_star;
};

/// The pair (1 0^{8n+4+rr} 1, 1 0^{8n+rr} 1) and whether it is a star pair
/// for p = 2, r = 1. Requires n <= 8, rr <= 7.
GapFamilyMember family_gap(unsigned n, unsigned rr);

/// (u 0^{p^k} 1, v 0^{p^k} 1) for a pair with binom(u, v) ≡ r (mod p).
///
/// Every occurrence of v in u, followed by i zeroes of u, contributes
/// C(p^k + i, p^k) ≡ 1 occurrences, and the zero block is too long to be
/// matched inside u. Requires u, v canonical and nonempty and p^k > |u|;
/// throws std::invalid_argument otherwise.
std::pair<Word, Word> complete_to_star(const Word& u, const Word& v, unsigned k,
                                       const Modulus& m = odd_modulus());

}  // namespace genpascal
