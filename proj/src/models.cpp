#include "seymour/models.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "seymour/bitops.hpp"

namespace seymour {

namespace {

// Writes `count` stream bits into row[] starting at bit_offset, lowest stream
// bit first.  Keeps chunk boundaries word-aligned so nothing is re-read.
void deposit_bits(std::uint64_t* row, int bit_offset, int count, BitSource& src) {
  int off = bit_offset;
  int rem = count;
  while (rem > 0) {
    const int word = off / kWordBits;
    const int shift = off % kWordBits;
    const int chunk = std::min(rem, kWordBits - shift);
    row[word] |= src.take_bits(chunk) << shift;
    off += chunk;
    rem -= chunk;
  }
}

}  // namespace

Tournament gen_tournament(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("gen_tournament: vertex count must be >= 1");
  Digraph g(n);
  const int words = g.words_per_row();
  BitSource src(rng);

  // Upper triangle straight from the stream: row u gets the bits for pairs
  // (u, u+1), ..., (u, n-1), set bit = arc u->v.
  for (int u = 0; u + 1 < n; ++u) {
    deposit_bits(g.row_mut(u), u + 1, n - 1 - u, src);
  }

  // Lower triangle is forced: v->u exactly when the pair bit for (u, v) is 0,
  // i.e. the complement of the transposed upper triangle.
  std::vector<std::uint64_t> upper(g.view().rows, g.view().rows + std::size_t(n) * words);
  std::vector<std::uint64_t> flipped(std::size_t(n) * words, 0);
  transpose_bits(upper.data(), flipped.data(), n, words);
  std::vector<std::uint64_t> mask(words);
  for (int v = 1; v < n; ++v) {
    std::fill(mask.begin(), mask.end(), 0);
    fill_prefix_mask(mask.data(), words, v);
    std::uint64_t* row = g.row_mut(v);
    const std::uint64_t* t = flipped.data() + std::size_t(v) * words;
    for (int i = 0; i < words; ++i) row[i] |= ~t[i] & mask[i];
  }
  return Tournament::from_digraph_unchecked(std::move(g));
}

Digraph gen_digraph(int n, double p, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("gen_digraph: vertex count must be >= 1");
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::invalid_argument("gen_digraph: p must lie in [0, 1/2]");
  }
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double x = rng.next_unit();
      if (x < p) {
        set_bit(g.row_mut(u), v);
      } else if (x < 2.0 * p) {
        set_bit(g.row_mut(v), u);
      }
    }
  }
  return g;
}

double parse_probability(const std::string& text) {
  const auto parse_number = [](const std::string& s) -> double {
    double value = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw std::invalid_argument("probability: cannot parse '" + s + "'");
    }
    return value;
  };
  double value = 0.0;
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    value = parse_number(text);
  } else {
    const double num = parse_number(text.substr(0, slash));
    const double den = parse_number(text.substr(slash + 1));
    if (den <= 0.0) throw std::invalid_argument("probability: denominator must be positive");
    value = num / den;
  }
  if (!(value >= 0.0 && value <= 0.5)) {
    throw std::invalid_argument("probability: must lie in [0, 1/2]");
  }
  return value;
}

}  // namespace seymour
