#include "genpascal/dyadic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace genpascal {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("dyadic numerator overflow");
  }
  return static_cast<std::int64_t>(value);
}

Dyadic make(Wide num, unsigned exp) {
  while (exp > 0 && num % 2 == 0) {
    num /= 2;
    --exp;
  }
  return Dyadic(narrow(num), exp);
}

}  // namespace

Dyadic::Dyadic(std::int64_t num, unsigned exp) : num_(num), exp_(exp) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
  if (exp_ > kMaxExponent) throw std::overflow_error("dyadic exponent overflow");
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_)); }

Dyadic Dyadic::scaled(int k) const {
  if (num_ == 0) return {};
  if (k <= 0) return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
  const auto up = static_cast<unsigned>(k);
  if (up <= exp_) return Dyadic(num_, exp_ - up);
  const unsigned shift = up - exp_;
  if (shift >= 63) throw std::overflow_error("dyadic numerator overflow");
  return Dyadic(narrow(static_cast<Wide>(num_) * (Wide{1} << shift)), 0);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned exp = std::max(a.exp_, b.exp_);
  const Wide lhs = static_cast<Wide>(a.num_) << (exp - a.exp_);
  const Wide rhs = static_cast<Wide>(b.num_) << (exp - b.exp_);
  return make(lhs + rhs, exp);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  const unsigned exp = a.exp_ + b.exp_;
  if (exp > Dyadic::kMaxExponent) throw std::overflow_error("dyadic exponent overflow");
  return make(static_cast<Wide>(a.num_) * b.num_, exp);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned exp = std::max(a.exp_, b.exp_);
  const Wide lhs = static_cast<Wide>(a.num_) << (exp - a.exp_);
  const Wide rhs = static_cast<Wide>(b.num_) << (exp - b.exp_);
  return lhs <=> rhs;
}

std::string Dyadic::to_decimal() const {
  std::string out;
  std::uint64_t magnitude = num_ < 0 ? 0 - static_cast<std::uint64_t>(num_) : static_cast<std::uint64_t>(num_);
  if (num_ < 0) out.push_back('-');
  const std::uint64_t whole = exp_ == 0 ? magnitude : magnitude >> exp_;
  out += std::to_string(whole);
  if (exp_ == 0) return out;
  // frac / 2^exp has exactly exp decimal digits; 4 spare bits keep frac * 10 in range.
  Wide frac = magnitude & ((std::uint64_t{1} << exp_) - 1);
  out.push_back('.');
  while (frac != 0) {
    frac *= 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(frac >> exp_)));
    frac &= (Wide{1} << exp_) - 1;
  }
  return out;
}

}  // namespace genpascal
