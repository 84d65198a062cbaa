#include "sig/analysis.hpp"

#include <cmath>
#include <string>

#include "sig/error.hpp"

namespace sig {
namespace {

void check_jam_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("jam probability must lie in [0, 1]");
}

void check_positive(std::size_t value, const char* name) {
  if (value == 0) throw InvalidParameter(std::string(name) + " must be at least 1");
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidParameter("epsilon must lie in (0, 1)");
}

}  // namespace

double jam_power_of(double jam_prob, std::size_t codeword_length) {
  check_jam_prob(jam_prob);
  check_positive(codeword_length, "codeword length");
  if (jam_prob == 0.0) return 0.0;
  return std::exp(static_cast<double>(codeword_length) * std::log(jam_prob));
}

double codeword_delivery_prob(double jam_prob, std::size_t codeword_length) {
  return 1.0 - jam_power_of(jam_prob, codeword_length);
}

double message_delivery_prob(double jam_prob, std::size_t codeword_length,
                             std::size_t message_length) {
  check_positive(message_length, "message length");
  const double survive = codeword_delivery_prob(jam_prob, codeword_length);
  return std::pow(survive, static_cast<double>(message_length) / 2.0);
}

double message_delivery_lower_bound(double jam_prob, std::size_t codeword_length,
                                    std::size_t message_length) {
  check_positive(message_length, "message length");
  return std::exp(-jam_power_of(jam_prob, codeword_length) * static_cast<double>(message_length));
}

double message_delivery_prob_exact(double jam_prob, std::size_t codeword_length,
                                   std::size_t message_length) {
  check_positive(message_length, "message length");
  const double half_power = jam_power_of(jam_prob, codeword_length) / 2.0;
  return std::pow(1.0 - half_power, static_cast<double>(message_length));
}

double max_jamming_resiliency(double epsilon, std::size_t message_length,
                              std::size_t codeword_length) {
  check_epsilon(epsilon);
  check_positive(message_length, "message length");
  check_positive(codeword_length, "codeword length");
  const double target = -std::log1p(-epsilon) / static_cast<double>(message_length);
  return std::exp(std::log(target) / static_cast<double>(codeword_length));
}

double codeword_length_continuous(double jam_prob, double epsilon, std::size_t message_length) {
  check_epsilon(epsilon);
  check_positive(message_length, "message length");
  if (!(jam_prob > 0.0 && jam_prob < 1.0)) {
    throw InvalidParameter("continuous codeword length needs jam probability in (0, 1)");
  }
  const double target = -std::log1p(-epsilon) / static_cast<double>(message_length);
  return std::log(target) / std::log(jam_prob);
}

std::optional<std::size_t> required_codeword_length(double jam_prob, double epsilon,
                                                    std::size_t message_length) {
  check_jam_prob(jam_prob);
  check_epsilon(epsilon);
  check_positive(message_length, "message length");
  if (jam_prob == 0.0) return 1;
  if (jam_prob == 1.0) return std::nullopt;
  const double n = codeword_length_continuous(jam_prob, epsilon, message_length);
  if (n <= 1.0) return 1;
  return static_cast<std::size_t>(std::ceil(n));
}

}  // namespace sig
