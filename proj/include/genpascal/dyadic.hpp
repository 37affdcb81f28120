#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace genpascal {

/// Exact rational num / 2^exp, kept canonical: num odd, or num = 0 and
/// exp = 0. Arithmetic throws std::overflow_error rather than rounding.
class Dyadic {
 public:
  static constexpr unsigned kMaxExponent = 62;

  constexpr Dyadic() = default;
  Dyadic(std::int64_t num, unsigned exp);
  static Dyadic integer(std::int64_t n) { return Dyadic(n, 0); }
  /// 2^{-e}
  static Dyadic inverse_power(unsigned e) { return Dyadic(1, e); }

  std::int64_t num() const { return num_; }
  unsigned exp() const { return exp_; }
  double to_double() const;

  /// Multiplication by 2^k, k of either sign.
  Dyadic scaled(int k) const;

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// Exact decimal expansion, e.g. "0.4375" or "-3".
  std::string to_decimal() const;

 private:
  std::int64_t num_ = 0;
  unsigned exp_ = 0;
};

inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace genpascal
