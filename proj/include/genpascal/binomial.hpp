#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "genpascal/word.hpp"

namespace genpascal {

/// Exact non-negative integer for unreduced word binomials.
using BigNat = boost::multiprecision::cpp_int;

/// A prime modulus, checked by trial division on construction.
class Prime {
 public:
  static constexpr std::uint32_t kMax = 1u << 16;

  /// Throws std::invalid_argument if p is not a prime below kMax.
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const { return p_; }
  operator std::uint32_t() const { return p_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// A prime p together with a nonzero residue class r, 1 <= r < p.
class Modulus {
 public:
  Modulus(Prime p, std::uint32_t r);
  Modulus(std::uint32_t p, std::uint32_t r) : Modulus(Prime(p), r) {}

  Prime prime() const { return p_; }
  std::uint32_t residue() const { return r_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Prime p_;
  std::uint32_t r_;
};

/// The default setting: odd coefficients.
inline Modulus odd_modulus() { return Modulus(2, 1); }

/// Number of occurrences of v as a scattered subword of u.
///
/// Dynamic program over prefixes of u with a rolling column over prefixes
/// of v: B[j] += [u_i = v_j] B[j-1], j descending. Words need not be
/// canonical.
BigNat binom_words(const Word& u, const Word& v);

/// binom_words(u, v) mod p without materializing the exact value.
std::uint32_t binom_words_mod(const Word& u, const Word& v, Prime p);

/// True iff v occurs in u as a scattered subword, i.e. binom(u, v) > 0.
bool is_subword(const Word& u, const Word& v);

/// C(m, n) mod p via base-p digits; C(a, b) = 0 when a < b.
std::uint32_t binom_int_lucas(std::uint64_t m, std::uint64_t n, Prime p);

/// Number of ones in the base-2 expansion of n.
unsigned sum_of_digits_base2(std::uint64_t n);

}  // namespace genpascal
