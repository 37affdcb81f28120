#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace genpascal {

/// A finite word over the binary alphabet {0,1}.
///
/// Words compare in genealogical order: first by length, then
/// lexicographically with 0 < 1. For canonical words (empty or starting
/// with 1) this is the same order as the integers they encode.
class Word {
 public:
  Word() = default;

  /// Parses a string of '0'/'1' characters; throws std::invalid_argument
  /// on any other character.
  static Word parse(std::string_view text);
  static Word repeat(int bit, std::size_t count);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i] - '0'; }

  /// Empty, or starting with 1.
  bool is_canonical() const { return letters_.empty() || letters_.front() == '1'; }

  Word& push_back(int bit);
  void pop_back() { letters_.pop_back(); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  Word with(int bit) const {
    Word w = *this;
    return w.push_back(bit);
  }

  const std::string& str() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  std::string letters_;
};

/// Greedy base-2 expansion; rep2(0) is the empty word.
Word rep2(std::uint64_t n);

/// Integer value of a binary word. Leading zeroes are ignored; throws
/// std::overflow_error if the value does not fit in 64 bits.
std::uint64_t val2(const Word& w);

/// i-th word of {ε} ∪ 1{0,1}* in genealogical order.
inline Word nth_word(std::uint64_t i) { return rep2(i); }

namespace literals {
inline Word operator""_w(const char* text, std::size_t len) {
  return Word::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace genpascal
