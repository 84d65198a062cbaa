#pragma once

#include <cstddef>

#include "sig/bits.hpp"

namespace sig {

/// Repetition code over the inverted Z-channel: every bit is repeated n times,
/// with n equal to the minimum asymmetric distance, so up to n - 1 0->1
/// crossovers per codeword are corrected.
class EccConfig {
 public:
  explicit EccConfig(std::size_t codeword_length);

  std::size_t codeword_length() const noexcept { return n_; }
  std::size_t correctable_errors() const noexcept { return n_ - 1; }
  std::size_t encoded_length(std::size_t message_length) const noexcept {
    return n_ * message_length;
  }

 private:
  std::size_t n_;
};

BitString encode(const BitString& message, const EccConfig& config);

/// A codeword decodes to 1 only if every received bit is 1.
BitString decode(const BitString& received, const EccConfig& config);

/// Number of positions where x is 0 and y is 1.
std::size_t asymmetric_distance(const BitString& x, const BitString& y);

}  // namespace sig
