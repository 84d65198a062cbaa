#include "sig/crypto.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include <algorithm>
#include <vector>

#include "sig/error.hpp"

namespace sig {
namespace {

constexpr std::uint8_t kKeystreamTag = 0x01;

void append_be64(std::vector<std::uint8_t>& out, std::uint64_t value) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(value >> shift));
  }
}

}  // namespace

Digest chain_hash(std::span<const std::uint8_t> bytes) {
  // The one-shot SHA256() re-fetches the implementation on every call.
  static const std::unique_ptr<EVP_MD, decltype(&EVP_MD_free)> md(
      EVP_MD_fetch(nullptr, "SHA256", nullptr), &EVP_MD_free);
  thread_local const std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  Digest out;
  unsigned int length = 0;
  if (!md || !ctx || EVP_DigestInit_ex2(ctx.get(), md.get(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.data(), &length) != 1 || length != out.size()) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  return out;
}

void SecretChain::advance() {
  secret_ = chain_hash(secret_);
  ++index_;
}

SecretChain advance_secret(SecretChain chain) {
  chain.advance();
  return chain;
}

std::uint32_t derive_frequency(const Digest& secret, std::uint64_t slot_index,
                               std::uint32_t frequency_count) {
  if (frequency_count == 0) throw InvalidParameter("frequency count must be positive");
  std::array<std::uint8_t, 40> preimage{};
  std::copy(secret.begin(), secret.end(), preimage.begin());
  for (int i = 0; i < 8; ++i) preimage[32 + i] = static_cast<std::uint8_t>(slot_index >> (56 - 8 * i));
  const Digest digest = chain_hash(preimage);
  std::uint64_t prefix = 0;
  for (int i = 0; i < 8; ++i) prefix = (prefix << 8) | digest[i];
  return static_cast<std::uint32_t>(prefix % frequency_count);
}

BitString keystream(const Digest& secret, std::size_t length) {
  BitString out(length);
  std::vector<std::uint8_t> preimage(secret.begin(), secret.end());
  preimage.push_back(kKeystreamTag);
  const std::size_t prefix_size = preimage.size();
  std::size_t produced = 0;
  for (std::uint64_t block = 0; produced < length; ++block) {
    preimage.resize(prefix_size);
    append_be64(preimage, block);
    const Digest digest = chain_hash(preimage);
    for (std::uint8_t byte : digest) {
      for (int shift = 7; shift >= 0 && produced < length; --shift) {
        out.set(produced++, (byte >> shift) & 1);
      }
    }
  }
  return out;
}

BitString keystream_encrypt(const BitString& message, const Digest& secret) {
  return message ^ keystream(secret, message.size());
}

BitString keystream_decrypt(const BitString& ciphertext, const Digest& secret) {
  return keystream_encrypt(ciphertext, secret);
}

}  // namespace sig
