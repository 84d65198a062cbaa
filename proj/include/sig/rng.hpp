#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "sig/bits.hpp"
#include "sig/crypto.hpp"
#include "sig/error.hpp"

namespace sig {

/// Seedable random source built on std::mt19937_64, whose output sequence is
/// fixed by the standard. All derived draws are implemented here rather than
/// with <random> distributions, which are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// 32-bit draws consume each 64-bit output high half first.
  std::uint32_t next32();

  /// Uniform integer in [0, bound). bound must be positive. Bounds up to
  /// 2^32 are served from 32-bit draws.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Uniform real in [0, 1) with 53 bits of resolution.
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }
  double exponential(double mean);

  Digest random_digest();
  BitString random_bits(std::size_t length);

 private:
  std::mt19937_64 engine_;
  std::uint64_t cached_ = 0;
  bool has_cached_half_ = false;
};

inline std::uint32_t Rng::next32() {
  if (has_cached_half_) {
    has_cached_half_ = false;
    return static_cast<std::uint32_t>(cached_);
  }
  cached_ = next();
  has_cached_half_ = true;
  return static_cast<std::uint32_t>(cached_ >> 32);
}

// Lemire's multiply-and-reject method, 32- or 64-bit wide.
inline std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidParameter("uniform_below needs a positive bound");
  if (bound <= (std::uint64_t{1} << 32)) {
    std::uint64_t product = std::uint64_t{next32()} * bound;
    auto low = static_cast<std::uint32_t>(product);
    if (low < bound) {
      const auto threshold = static_cast<std::uint32_t>((std::uint64_t{1} << 32) % bound);
      while (low < threshold) {
        product = std::uint64_t{next32()} * bound;
        low = static_cast<std::uint32_t>(product);
      }
    }
    return product >> 32;
  }
  __extension__ using u128 = unsigned __int128;
  u128 product = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

/// Sub-source seed: first 8 bytes (big-endian) of SHA-256 over the
/// big-endian encodings of `master` followed by every element of `path`.
std::uint64_t derive_stream_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

}  // namespace sig
