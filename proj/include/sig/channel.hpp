#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sig/rng.hpp"

namespace sig {

enum class EnergyMode { binary, analog };

EnergyMode parse_energy_mode(std::string_view name);
std::string_view to_string(EnergyMode mode);

struct ChannelConfig {
  std::uint32_t frequency_count = 124;
  std::uint32_t proactive_jammed_count = 0;
  double reactive_success_prob = 1.0;
  double one_to_zero_prob = 0.0;
  EnergyMode energy_mode = EnergyMode::binary;

  // Analog mode only; linear energy units.
  double noise_floor_power = 0.1;  // mean of the exponential noise floor
  double signal_power = 100.0;
  double jam_power = 100.0;
  double tau = 1.0;

  /// p_a = A / F.
  double jam_probability() const noexcept {
    return static_cast<double>(proactive_jammed_count) / frequency_count;
  }

  /// Energy level the receiver compares against: tau in analog mode, 0.5 on
  /// the {0, 1} scale of binary mode.
  double decision_threshold() const noexcept {
    return energy_mode == EnergyMode::binary ? 0.5 : tau;
  }

  void validate() const;
};

struct SlotOutcome {
  std::uint64_t slot_index = 0;
  std::uint32_t frequency = 0;
  bool tx_active = false;
  bool reactively_jammed = false;
  bool proactively_jammed = false;
  double rss = 0.0;
  bool energy_above_tau = false;
  bool direct_reception = false;
};

/// Uniform random A-subset of [0, F), in draw order (partial Fisher-Yates).
std::vector<std::uint32_t> jam_selection(Rng& rng, std::uint32_t frequency_count,
                                         std::uint32_t jammed_count);

/// Resolves one slot against the combined reactive/proactive jammer.
/// Active slots are jammed reactively; silent slots are hit only if their
/// frequency falls in that slot's fresh proactive selection.
SlotOutcome resolve_slot(const ChannelConfig& config, std::uint64_t slot_index,
                         std::uint32_t frequency, bool tx_active, Rng& rng);

inline bool sense_energy(const SlotOutcome& outcome, double tau) noexcept {
  return outcome.rss >= tau;
}

}  // namespace sig
