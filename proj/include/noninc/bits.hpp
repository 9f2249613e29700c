#ifndef NONINC_BITS_HPP
#define NONINC_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace noninc {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

inline bool test_bit(std::span<const Word> row, std::size_t i) {
  return (row[i / word_bits] >> (i % word_bits)) & 1u;
}
inline void set_bit(std::span<Word> row, std::size_t i) { row[i / word_bits] |= Word{1} << (i % word_bits); }
inline void clear_bit(std::span<Word> row, std::size_t i) { row[i / word_bits] &= ~(Word{1} << (i % word_bits)); }

inline std::size_t popcount(std::span<const Word> row) {
  std::size_t n = 0;
  for (Word w : row) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return n;
}

inline std::size_t popcount_andnot(std::span<const Word> a, std::span<const Word> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return n;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

/// Bitset of `bits` ones.
inline std::vector<Word> full_bits(std::size_t bits) {
  std::vector<Word> out(words_for(bits), ~Word{0});
  if (bits % word_bits) out.back() = (Word{1} << (bits % word_bits)) - 1;
  return out;
}

template <class F>
void for_each_bit(std::span<const Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    for (Word x = row[w]; x; x &= x - 1)
      f(w * word_bits + static_cast<std::size_t>(std::countr_zero(x)));
  }
}

/// Dense row-major 0/1 matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const { return test_bit(row(r), c); }
  void set(std::size_t r, std::size_t c, bool v = true) {
    if (v)
      set_bit(row(r), c);
    else
      clear_bit(row(r), c);
  }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for_each_bit(row(r), [&](std::size_t c) { t.set(c, r); });
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace noninc

#endif  // NONINC_BITS_HPP
