#include "sig/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sig/error.hpp"

namespace sig {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

// Partial Fisher-Yates: after the call the first `jammed_count` entries of
// `scratch` hold the selection in draw order.
void shuffle_prefix(Rng& rng, std::uint32_t frequency_count, std::uint32_t jammed_count,
                    std::vector<std::uint32_t>& scratch) {
  if (jammed_count > frequency_count) {
    throw InvalidParameter("cannot jam " + std::to_string(jammed_count) + " of " +
                           std::to_string(frequency_count) + " frequencies");
  }
  scratch.resize(frequency_count);
  std::iota(scratch.begin(), scratch.end(), 0u);
  for (std::uint32_t k = 0; k < jammed_count; ++k) {
    const auto j = k + static_cast<std::uint32_t>(rng.uniform_below(frequency_count - k));
    std::swap(scratch[k], scratch[j]);
  }
}

}  // namespace

EnergyMode parse_energy_mode(std::string_view name) {
  if (name == "binary") return EnergyMode::binary;
  if (name == "analog") return EnergyMode::analog;
  throw InvalidParameter("unknown energy mode '" + std::string(name) + "'");
}

std::string_view to_string(EnergyMode mode) {
  return mode == EnergyMode::binary ? "binary" : "analog";
}

void ChannelConfig::validate() const {
  if (frequency_count == 0) throw InvalidParameter("frequency count must be positive");
  if (proactive_jammed_count > frequency_count) {
    throw InvalidParameter("jammed count exceeds frequency count");
  }
  if (!is_probability(reactive_success_prob)) {
    throw InvalidParameter("reactive_success_prob must lie in [0, 1]");
  }
  if (!is_probability(one_to_zero_prob)) throw InvalidParameter("one_to_zero_prob must lie in [0, 1]");
  if (energy_mode == EnergyMode::analog &&
      !(noise_floor_power < tau && tau <= std::min(signal_power, jam_power))) {
    throw InvalidParameter("analog mode needs noise_floor_power < tau <= min(signal_power, jam_power)");
  }
}

std::vector<std::uint32_t> jam_selection(Rng& rng, std::uint32_t frequency_count,
                                         std::uint32_t jammed_count) {
  std::vector<std::uint32_t> scratch;
  shuffle_prefix(rng, frequency_count, jammed_count, scratch);
  scratch.resize(jammed_count);
  return scratch;
}

SlotOutcome resolve_slot(const ChannelConfig& config, std::uint64_t slot_index,
                         std::uint32_t frequency, bool tx_active, Rng& rng) {
  if (frequency >= config.frequency_count) {
    throw InvalidParameter("frequency " + std::to_string(frequency) + " outside [0, " +
                           std::to_string(config.frequency_count) + ")");
  }
  SlotOutcome out;
  out.slot_index = slot_index;
  out.frequency = frequency;
  out.tx_active = tx_active;

  if (tx_active) {
    out.reactively_jammed = rng.bernoulli(config.reactive_success_prob);
    out.direct_reception = !out.reactively_jammed;
  } else {
    thread_local std::vector<std::uint32_t> scratch;
    const std::uint32_t a = config.proactive_jammed_count;
    shuffle_prefix(rng, config.frequency_count, a, scratch);
    out.proactively_jammed =
        std::find(scratch.begin(), scratch.begin() + a, frequency) != scratch.begin() + a;
  }

  const bool jammed = out.reactively_jammed || out.proactively_jammed;
  const bool energized = tx_active || jammed;
  const bool forced_low = energized && config.one_to_zero_prob > 0.0 &&
                          rng.bernoulli(config.one_to_zero_prob);

  if (config.energy_mode == EnergyMode::binary) {
    out.rss = (energized && !forced_low) ? 1.0 : 0.0;
  } else {
    const double noise = rng.exponential(config.noise_floor_power);
    if (forced_low) {
      out.rss = std::min(noise, std::nextafter(config.tau, 0.0));
    } else {
      out.rss = noise + (tx_active ? config.signal_power : 0.0) + (jammed ? config.jam_power : 0.0);
    }
  }
  out.energy_above_tau = sense_energy(out, config.decision_threshold());
  return out;
}

}  // namespace sig
