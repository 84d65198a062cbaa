#include "sig/rng.hpp"

#include <cmath>
#include <vector>

#include "sig/error.hpp"

namespace sig {

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::exponential(double mean) { return -mean * std::log1p(-uniform01()); }

Digest Rng::random_digest() {
  Digest out;
  for (std::size_t i = 0; i < out.size(); i += 8) {
    const std::uint64_t word = next();
    for (std::size_t b = 0; b < 8; ++b) out[i + b] = static_cast<std::uint8_t>(word >> (56 - 8 * b));
  }
  return out;
}

BitString Rng::random_bits(std::size_t length) {
  BitString out(length);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i % 64 == 0) word = next();
    out.set(i, (word >> (63 - i % 64)) & 1);
  }
  return out;
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::vector<std::uint8_t> preimage;
  preimage.reserve(8 * (1 + path.size()));
  auto append = [&preimage](std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) preimage.push_back(static_cast<std::uint8_t>(v >> shift));
  };
  append(master);
  for (std::uint64_t v : path) append(v);
  const Digest digest = chain_hash(preimage);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[i];
  return seed;
}

}  // namespace sig
