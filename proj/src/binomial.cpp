#include "genpascal/binomial.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace genpascal {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p >= kMax || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a supported prime");
  }
}

Modulus::Modulus(Prime p, std::uint32_t r) : p_(p), r_(r) {
  if (r < 1 || r >= p.value()) {
    throw std::invalid_argument("residue " + std::to_string(r) + " out of range 1.." +
                                std::to_string(p.value() - 1));
  }
}

BigNat binom_words(const Word& u, const Word& v) {
  if (v.size() > u.size()) return 0;
  std::vector<BigNat> column(v.size() + 1, BigNat(0));
  column[0] = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int a = u[i];
    // Only prefixes of v no longer than u[0..i] can gain occurrences.
    const std::size_t top = std::min(v.size(), i + 1);
    for (std::size_t j = top; j >= 1; --j) {
      if (v[j - 1] == a) column[j] += column[j - 1];
    }
  }
  return column[v.size()];
}

std::uint32_t binom_words_mod(const Word& u, const Word& v, Prime p) {
  if (v.size() > u.size()) return 0;
  const std::uint32_t mod = p.value();
  std::vector<std::uint32_t> column(v.size() + 1, 0);
  column[0] = 1 % mod;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int a = u[i];
    const std::size_t top = std::min(v.size(), i + 1);
    for (std::size_t j = top; j >= 1; --j) {
      if (v[j - 1] == a) {
        column[j] += column[j - 1];
        if (column[j] >= mod) column[j] -= mod;
      }
    }
  }
  return column[v.size()];
}

bool is_subword(const Word& u, const Word& v) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < u.size() && j < v.size(); ++i) {
    if (u[i] == v[j]) ++j;
  }
  return j == v.size();
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (e > 0) {
    if (e & 1u) result = result * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return result;
}

// C(m, n) mod p for digits m, n < p.
std::uint64_t small_binom_mod(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (n > m) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    num = num * ((m - k) % p) % p;
    den = den * ((k + 1) % p) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

std::uint32_t binom_int_lucas(std::uint64_t m, std::uint64_t n, Prime p) {
  const std::uint64_t base = p.value();
  std::uint64_t result = 1 % base;
  while ((m > 0 || n > 0) && result != 0) {
    result = result * small_binom_mod(m % base, n % base, base) % base;
    m /= base;
    n /= base;
  }
  return static_cast<std::uint32_t>(result);
}

unsigned sum_of_digits_base2(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

}  // namespace genpascal
