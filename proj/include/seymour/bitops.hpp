#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>

namespace seymour {

inline constexpr int kWordBits = 64;

constexpr int words_for_bits(int nbits) {
  return (nbits + kWordBits - 1) / kWordBits;
}

inline bool test_bit(const std::uint64_t* words, int i) {
  return (words[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(std::uint64_t* words, int i) {
  words[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void clear_bit(std::uint64_t* words, int i) {
  words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

// Mask with bits [0, n) set in a row of `w` words.
inline void fill_prefix_mask(std::uint64_t* words, int w, int n) {
  for (int i = 0; i < w; ++i) {
    const int lo = i * kWordBits;
    if (n >= lo + kWordBits) {
      words[i] = ~std::uint64_t{0};
    } else if (n <= lo) {
      words[i] = 0;
    } else {
      words[i] = (std::uint64_t{1} << (n - lo)) - 1;
    }
  }
}

inline int popcount_words(const std::uint64_t* words, int w) {
  int c = 0;
  for (int i = 0; i < w; ++i) c += std::popcount(words[i]);
  return c;
}

// In-place transpose of a 64x64 bit matrix; bit c of a[r] is column c of row r.
inline void transpose64(std::uint64_t a[64]) {
  std::uint64_t m = 0x00000000FFFFFFFFULL;
  for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
    for (int k = 0; k < 64; k = (k + j + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

// dst(c, r) = src(r, c) for an n x n bit matrix stored as n rows of `w` words.
// Bits at positions >= n in src rows must be zero; dst gets the same padding.
inline void transpose_bits(const std::uint64_t* src, std::uint64_t* dst, int n, int w) {
  std::uint64_t block[64];
  for (int bi = 0; bi < w; ++bi) {
    const int rbase = bi * kWordBits;
    const int rmax = std::min(kWordBits, n - rbase);
    for (int bj = 0; bj < w; ++bj) {
      for (int r = 0; r < rmax; ++r) {
        block[r] = src[std::size_t(rbase + r) * w + bj];
      }
      for (int r = rmax; r < kWordBits; ++r) block[r] = 0;
      transpose64(block);
      const int cbase = bj * kWordBits;
      const int cmax = std::min(kWordBits, n - cbase);
      for (int c = 0; c < cmax; ++c) {
        dst[std::size_t(cbase + c) * w + bi] = block[c];
      }
    }
  }
}

// Visit the index of every set bit in a row, ascending.
template <typename Fn>
inline void for_each_set_bit(const std::uint64_t* words, int w, Fn&& fn) {
  for (int i = 0; i < w; ++i) {
    std::uint64_t word = words[i];
    while (word != 0) {
      const int b = std::countr_zero(word);
      fn(i * kWordBits + b);
      word &= word - 1;
    }
  }
}

}  // namespace seymour
