#include "genpascal/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace genpascal {

Word Word::parse(std::string_view text) {
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; })) {
    throw std::invalid_argument("not a binary word: '" + std::string(text) + "'");
  }
  Word w;
  w.letters_.assign(text);
  return w;
}

Word Word::repeat(int bit, std::size_t count) {
  Word w;
  w.letters_.assign(count, bit ? '1' : '0');
  return w;
}

Word& Word::push_back(int bit) {
  letters_.push_back(bit ? '1' : '0');
  return *this;
}

Word& Word::operator+=(const Word& other) {
  letters_ += other.letters_;
  return *this;
}

Word rep2(std::uint64_t n) {
  Word w;
  if (n == 0) return w;
  for (int i = std::bit_width(n) - 1; i >= 0; --i) w.push_back(static_cast<int>((n >> i) & 1u));
  return w;
}

std::uint64_t val2(const Word& w) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (value >> 63) throw std::overflow_error("val2: word value exceeds 64 bits");
    value = (value << 1) | static_cast<std::uint64_t>(w[i]);
  }
  return value;
}

}  // namespace genpascal
