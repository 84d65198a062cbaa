#pragma once

#include <cstddef>
#include <optional>

namespace sig {

/// p_a^n, computed as exp(n ln p_a) with p_a = 0 special-cased.
double jam_power_of(double jam_prob, std::size_t codeword_length);

/// Probability that a zero codeword survives: 1 - p_a^n.
double codeword_delivery_prob(double jam_prob, std::size_t codeword_length);

/// Half-zeros approximation (1 - p_a^n)^(L_m / 2).
double message_delivery_prob(double jam_prob, std::size_t codeword_length,
                             std::size_t message_length);

/// exp(-p_a^n L_m). Bounds message_delivery_prob from below while
/// p_a^n <= ~0.797.
double message_delivery_lower_bound(double jam_prob, std::size_t codeword_length,
                                    std::size_t message_length);

/// E[(1 - p_a^n)^Z] for Z ~ Binomial(L_m, 1/2), i.e. (1 - p_a^n / 2)^L_m.
double message_delivery_prob_exact(double jam_prob, std::size_t codeword_length,
                                   std::size_t message_length);

/// Largest p_a at which delivery probability stays at 1 - epsilon:
/// (-ln(1 - epsilon) / L_m)^(1/n).
double max_jamming_resiliency(double epsilon, std::size_t message_length,
                              std::size_t codeword_length);

/// Real-valued codeword length ln(-ln(1 - epsilon) / L_m) / ln(p_a).
/// Requires p_a in (0, 1).
double codeword_length_continuous(double jam_prob, double epsilon, std::size_t message_length);

/// Smallest integral n meeting the target; 1 when p_a = 0, nullopt when p_a = 1.
std::optional<std::size_t> required_codeword_length(double jam_prob, double epsilon,
                                                    std::size_t message_length);

}  // namespace sig
