#include "sig/ecc.hpp"

#include "sig/error.hpp"

namespace sig {

EccConfig::EccConfig(std::size_t codeword_length) : n_(codeword_length) {
  if (n_ == 0) throw InvalidParameter("codeword length must be at least 1");
}

BitString encode(const BitString& message, const EccConfig& config) {
  if (message.empty()) throw InvalidParameter("cannot encode an empty message");
  const std::size_t n = config.codeword_length();
  BitString out(config.encoded_length(message.size()));
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (!message[i]) continue;
    for (std::size_t k = 0; k < n; ++k) out.set(i * n + k, true);
  }
  return out;
}

BitString decode(const BitString& received, const EccConfig& config) {
  const std::size_t n = config.codeword_length();
  if (received.size() % n != 0) {
    throw InvalidParameter("received length " + std::to_string(received.size()) +
                           " is not a multiple of codeword length " + std::to_string(n));
  }
  BitString out(received.size() / n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool all_ones = true;
    for (std::size_t k = 0; k < n && all_ones; ++k) all_ones = received[i * n + k];
    out.set(i, all_ones);
  }
  return out;
}

std::size_t asymmetric_distance(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw InvalidParameter("asymmetric distance needs equal lengths");
  std::size_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) count += (!x[i] && y[i]) ? 1 : 0;
  return count;
}

}  // namespace sig
