#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sig/bits.hpp"
#include "sig/channel.hpp"
#include "sig/protocol.hpp"

namespace sig {

struct ExperimentConfig {
  std::uint32_t frequency_count = 124;
  std::vector<std::uint32_t> jammed_counts;
  std::vector<std::size_t> codeword_lengths;
  std::vector<std::size_t> message_lengths;
  std::size_t trials = 10000;
  std::size_t batches = 100;
  std::uint64_t master_seed = 1;
  EnergyMode energy_mode = EnergyMode::binary;
  std::string output_path = "sweep.csv";
  unsigned threads = 1;

  void validate() const;
};

/// YAML mapping with the field names above.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct SweepPoint {
  std::uint32_t frequency_count = 0;
  std::uint32_t jammed_count = 0;
  double p_a = 0.0;
  std::size_t n = 0;
  std::size_t L_m = 0;
  std::size_t trials = 0;
  double delivery_rate = 0.0;
  double q05 = 0.0;
  double q50 = 0.0;
  double q95 = 0.0;
  double theory = 0.0;
  double theory_exact = 0.0;
  std::uint64_t seed = 0;
};

/// Linear-interpolation quantile (Hyndman-Fan type 7) of unsorted samples.
double quantile(std::vector<double> samples, double q);

/// Runs `trials` exchanges per (A, n, L_m) point, message lengths outermost
/// and jammed counts innermost. Trial k of a point draws its chain seed,
/// message and channel randomness from
/// derive_stream_seed(master_seed, {A, n, L_m, k}).
std::vector<SweepPoint> monte_carlo(const ExperimentConfig& config);

void write_csv(std::ostream& out, std::span<const SweepPoint> points);

/// Delivery rate of `trials` full-protocol exchanges whose ciphertext is
/// forced to `encrypted` (the plaintext is chosen as its decryption).
double monte_carlo_fixed_ciphertext(std::uint32_t frequency_count, std::uint32_t jammed_count,
                                    std::size_t codeword_length, const BitString& encrypted,
                                    std::size_t trials, std::uint64_t seed);

inline constexpr std::size_t kOracleMaxZeroSlots = 20;

/// Exact delivery probability of `encrypted` by enumerating every subset of
/// its silent slots as the flipped set. Throws InfeasibleProblem when the
/// encoding has more than kOracleMaxZeroSlots silent slots.
double exhaustive_oracle(std::uint32_t frequency_count, std::uint32_t jammed_count,
                         std::size_t codeword_length, const BitString& encrypted);

struct TraceRequest {
  std::size_t message_length = 8;
  std::size_t codeword_length = 8;
  std::uint32_t frequency_count = 5;
  std::uint32_t jammed_count = 1;
  std::uint64_t seed = 1;
};

/// Draws the chain seed and message from `request.seed` and runs one exchange.
ExchangeTrace run_trace(const TraceRequest& request);

std::string render_trace_text(const TraceRequest& request, const ExchangeTrace& trace);
std::string render_trace_json(const TraceRequest& request, const ExchangeTrace& trace);

}  // namespace sig
