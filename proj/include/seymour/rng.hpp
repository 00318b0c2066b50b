#pragma once

#include <array>
#include <cstdint>

namespace seymour {

/// Counter-based pseudo-random stream (Philox4x32-10).
///
/// A stream is keyed by (master_seed, stream_id); the 128-bit counter is
/// [block_lo, block_hi, stream_lo, stream_hi], so distinct stream ids occupy
/// disjoint counter ranges and streams can be created in any order on any
/// worker with bit-identical output. All output is platform-independent.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : key_{static_cast<std::uint32_t>(master_seed),
             static_cast<std::uint32_t>(master_seed >> 32)},
        stream_id_(stream_id) {}

  std::uint64_t next_u64() {
    if (pos_ >= 4) refill();
    const std::uint64_t lo = buf_[pos_];
    const std::uint64_t hi = buf_[pos_ + 1];
    pos_ += 2;
    return lo | (hi << 32);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kBump0 = 0x9E3779B9u;
  static constexpr std::uint32_t kBump1 = 0xBB67AE85u;

  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(block_);
    std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream_id_);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream_id_ >> 32);
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{kMul0} * c0;
      const std::uint64_t p1 = std::uint64_t{kMul1} * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      c0 = hi1 ^ c1 ^ k0;
      c1 = lo1;
      c2 = hi0 ^ c3 ^ k1;
      c3 = lo0;
      k0 += kBump0;
      k1 += kBump1;
    }
    buf_ = {c0, c1, c2, c3};
    ++block_;
    pos_ = 0;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
};

/// LSB-first bit view over an RngStream word sequence.
class BitSource {
 public:
  explicit BitSource(RngStream& rng) : rng_(rng) {}

  bool next_bit() {
    if (left_ == 0) {
      word_ = rng_.next_u64();
      left_ = 64;
    }
    const bool b = word_ & 1u;
    word_ >>= 1;
    --left_;
    return b;
  }

  /// Next `count` (<= 64) stream bits, bit i of the result being the i-th.
  std::uint64_t take_bits(int count) {
    std::uint64_t out = 0;
    int got = 0;
    while (got < count) {
      if (left_ == 0) {
        word_ = rng_.next_u64();
        left_ = 64;
      }
      const int take = count - got < left_ ? count - got : left_;
      const std::uint64_t chunk =
          take == 64 ? word_ : word_ & ((std::uint64_t{1} << take) - 1);
      out |= chunk << got;
      word_ = take == 64 ? 0 : word_ >> take;
      left_ -= take;
      got += take;
    }
    return out;
  }

 private:
  RngStream& rng_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

}  // namespace seymour
