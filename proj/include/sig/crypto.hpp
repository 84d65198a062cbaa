#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "sig/bits.hpp"

namespace sig {

using Digest = std::array<std::uint8_t, 32>;

/// SHA-256 of an arbitrary byte string.
Digest chain_hash(std::span<const std::uint8_t> bytes);

/// Shared one-time secret s_i = H(s_{i-1}), starting from a pre-loaded s_0.
class SecretChain {
 public:
  explicit SecretChain(const Digest& seed) : seed_(seed), secret_(seed) {}

  const Digest& seed() const noexcept { return seed_; }
  const Digest& secret() const noexcept { return secret_; }
  std::uint64_t index() const noexcept { return index_; }

  void advance();

 private:
  Digest seed_;
  Digest secret_;
  std::uint64_t index_ = 0;
};

/// Returns a copy of `chain` advanced by one step.
SecretChain advance_secret(SecretChain chain);

/// f = BE64(first 8 bytes of SHA-256(secret || BE64(slot_index))) mod frequency_count.
std::uint32_t derive_frequency(const Digest& secret, std::uint64_t slot_index,
                               std::uint32_t frequency_count);

/// Concatenation of SHA-256(secret || 0x01 || BE64(j)) for j = 0, 1, ...,
/// truncated to `length` bits, MSB-first within each byte.
BitString keystream(const Digest& secret, std::size_t length);

BitString keystream_encrypt(const BitString& message, const Digest& secret);
BitString keystream_decrypt(const BitString& ciphertext, const Digest& secret);

}  // namespace sig
