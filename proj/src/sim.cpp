#include "sig/sim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>

#include "sig/analysis.hpp"
#include "sig/ecc.hpp"
#include "sig/error.hpp"

namespace sig {
namespace {

// Evaluates trial(k) for k in [0, count) and returns the outcomes indexed by
// k, so the result does not depend on scheduling.
template <typename Trial>
std::vector<std::uint8_t> run_trials(std::size_t count, unsigned threads, const Trial& trial) {
  std::vector<std::uint8_t> outcomes(count, 0);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) outcomes[k] = trial(k) ? 1 : 0;
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) outcomes[k] = trial(k) ? 1 : 0;
    });
  }
  return outcomes;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (frequency_count == 0) throw InvalidParameter("frequency_count must be positive");
  if (jammed_counts.empty() || codeword_lengths.empty() || message_lengths.empty()) {
    throw InvalidParameter("jammed_counts, codeword_lengths and message_lengths must be non-empty");
  }
  for (auto a : jammed_counts) {
    if (a > frequency_count) {
      throw InvalidParameter("jammed count " + std::to_string(a) + " exceeds frequency_count " +
                             std::to_string(frequency_count));
    }
  }
  for (auto n : codeword_lengths) {
    if (n == 0) throw InvalidParameter("codeword lengths must be positive");
  }
  for (auto l : message_lengths) {
    if (l == 0) throw InvalidParameter("message lengths must be positive");
  }
  if (trials == 0 || batches == 0) throw InvalidParameter("trials and batches must be positive");
  if (trials % batches != 0) throw InvalidParameter("trials must be divisible by batches");
}

double quantile(std::vector<double> samples, double q) {
  if (samples.empty()) throw InvalidParameter("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidParameter("quantile level must lie in [0, 1]");
  std::sort(samples.begin(), samples.end());
  const double pos = q * static_cast<double>(samples.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, samples.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return samples[lo] + frac * (samples[hi] - samples[lo]);
}

std::vector<SweepPoint> monte_carlo(const ExperimentConfig& config) {
  config.validate();
  std::vector<SweepPoint> points;
  for (std::size_t message_length : config.message_lengths) {
    for (std::size_t n : config.codeword_lengths) {
      const EccConfig ecc(n);
      for (std::uint32_t jammed : config.jammed_counts) {
        ChannelConfig channel;
        channel.frequency_count = config.frequency_count;
        channel.proactive_jammed_count = jammed;
        channel.energy_mode = config.energy_mode;

        const auto outcomes = run_trials(config.trials, config.threads, [&](std::size_t k) {
          Rng rng(derive_stream_seed(config.master_seed, {jammed, n, message_length, k}));
          const Digest seed = rng.random_digest();
          BitString message = rng.random_bits(message_length);
          const Dictionary dictionary{message};
          return run_exchange(message, seed, channel, ecc, dictionary, rng).delivered;
        });

        const std::size_t per_batch = config.trials / config.batches;
        std::vector<double> batch_rates;
        batch_rates.reserve(config.batches);
        std::size_t delivered = 0;
        for (std::size_t b = 0; b < config.batches; ++b) {
          std::size_t hits = 0;
          for (std::size_t k = b * per_batch; k < (b + 1) * per_batch; ++k) hits += outcomes[k];
          delivered += hits;
          batch_rates.push_back(static_cast<double>(hits) / static_cast<double>(per_batch));
        }

        SweepPoint point;
        point.frequency_count = config.frequency_count;
        point.jammed_count = jammed;
        point.p_a = channel.jam_probability();
        point.n = n;
        point.L_m = message_length;
        point.trials = config.trials;
        point.delivery_rate = static_cast<double>(delivered) / static_cast<double>(config.trials);
        point.q05 = quantile(batch_rates, 0.05);
        point.q50 = quantile(batch_rates, 0.50);
        point.q95 = quantile(batch_rates, 0.95);
        point.theory = message_delivery_prob(point.p_a, n, message_length);
        point.theory_exact = message_delivery_prob_exact(point.p_a, n, message_length);
        point.seed = config.master_seed;
        points.push_back(point);
      }
    }
  }
  return points;
}

void write_csv(std::ostream& out, std::span<const SweepPoint> points) {
  out << "F,A,p_a,n,L_m,trials,delivery_rate,q05,q50,q95,theory,theory_exact,seed\n";
  for (const SweepPoint& p : points) {
    out << p.frequency_count << ',' << p.jammed_count << ',' << format_real(p.p_a) << ',' << p.n
        << ',' << p.L_m << ',' << p.trials << ',' << format_real(p.delivery_rate) << ','
        << format_real(p.q05) << ',' << format_real(p.q50) << ',' << format_real(p.q95) << ','
        << format_real(p.theory) << ',' << format_real(p.theory_exact) << ',' << p.seed << '\n';
  }
}

double monte_carlo_fixed_ciphertext(std::uint32_t frequency_count, std::uint32_t jammed_count,
                                    std::size_t codeword_length, const BitString& encrypted,
                                    std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidParameter("trials must be positive");
  ChannelConfig channel;
  channel.frequency_count = frequency_count;
  channel.proactive_jammed_count = jammed_count;
  channel.validate();
  const EccConfig ecc(codeword_length);

  std::size_t delivered = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    Rng rng(derive_stream_seed(seed, {k}));
    const Digest chain_seed = rng.random_digest();
    const SecretChain first = advance_secret(SecretChain(chain_seed));
    BitString message = keystream_decrypt(encrypted, first.secret());
    const Dictionary dictionary{message};
    delivered += run_exchange(message, chain_seed, channel, ecc, dictionary, rng).delivered ? 1 : 0;
  }
  return static_cast<double>(delivered) / static_cast<double>(trials);
}

double exhaustive_oracle(std::uint32_t frequency_count, std::uint32_t jammed_count,
                         std::size_t codeword_length, const BitString& encrypted) {
  if (frequency_count == 0) throw InvalidParameter("frequency count must be positive");
  if (jammed_count > frequency_count) throw InvalidParameter("jammed count exceeds frequency count");
  const EccConfig ecc(codeword_length);
  const BitString sent = encode(encrypted, ecc);

  std::vector<std::size_t> silent;
  for (std::size_t i = 0; i < sent.size(); ++i) {
    if (!sent[i]) silent.push_back(i);
  }
  const std::size_t z = silent.size();
  if (z > kOracleMaxZeroSlots) {
    throw InfeasibleProblem("exhaustive oracle limited to " + std::to_string(kOracleMaxZeroSlots) +
                            " silent slots, instance has " + std::to_string(z));
  }

  const double p = static_cast<double>(jammed_count) / frequency_count;
  std::vector<double> weight_by_flips(z + 1);
  for (std::size_t k = 0; k <= z; ++k) {
    weight_by_flips[k] = std::pow(p, static_cast<double>(k)) * std::pow(1.0 - p, static_cast<double>(z - k));
  }

  double total = 0.0;
  const std::uint64_t patterns = std::uint64_t{1} << z;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    BitString received = sent;
    for (std::size_t b = 0; b < z; ++b) {
      if ((mask >> b) & 1) received.set(silent[b], true);
    }
    if (decode(received, ecc) == encrypted) {
      total += weight_by_flips[static_cast<std::size_t>(std::popcount(mask))];
    }
  }
  return total;
}

}  // namespace sig
