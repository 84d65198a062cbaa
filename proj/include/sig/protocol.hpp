#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "sig/bits.hpp"
#include "sig/channel.hpp"
#include "sig/crypto.hpp"
#include "sig/ecc.hpp"
#include "sig/rng.hpp"

namespace sig {

/// Shared set of valid messages; membership is the receiver's integrity check.
class Dictionary {
 public:
  Dictionary() = default;
  Dictionary(std::initializer_list<BitString> members) : members_(members) {}

  /// One lowercase hex message per line; blank lines and '#' lines skipped.
  /// All entries must have the same length.
  static Dictionary parse(std::istream& in);
  static Dictionary load(const std::filesystem::path& path);

  void insert(BitString message) { members_.insert(std::move(message)); }
  bool contains(const BitString& message) const { return members_.contains(message); }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  std::set<BitString> members_;
};

struct PlannedSlot {
  std::uint64_t slot_index = 0;
  std::uint32_t frequency = 0;
  bool tx_active = false;
};

struct TransmitPlan {
  BitString encrypted;  // m_e
  BitString encoded;    // m_ec
  std::vector<PlannedSlot> slots;
};

struct ExchangeResult {
  bool delivered = false;
  bool via_direct_reception = false;
  std::size_t slots_used = 0;
  std::size_t bit_errors_pre_decode = 0;
  BitString received_encoded;  // m'_ec, only the slots actually sensed
  std::optional<BitString> recovered;
};

/// Transmitter: advances `chain` once, encrypts and encodes `message`, and
/// schedules one slot per encoded bit (active iff the bit is 1).
TransmitPlan transmit_plan(const BitString& message, SecretChain& chain, const EccConfig& ecc,
                           std::uint32_t frequency_count);

/// Receiver: advances `chain` once, then walks the slots. A slot flagged
/// direct_reception on the receiver's own hop frequency delivers
/// `on_air_payload` directly if it decrypts into the dictionary; otherwise the
/// sensed energy becomes the next bit of m'_ec. After the last slot m'_ec is
/// decoded, decrypted, and checked against the dictionary.
ExchangeResult receive_message(std::span<const SlotOutcome> slots,
                               const std::optional<BitString>& on_air_payload,
                               SecretChain& chain, const EccConfig& ecc,
                               std::uint32_t frequency_count, const Dictionary& dictionary,
                               double tau);

struct ExchangeTrace {
  TransmitPlan plan;
  std::vector<SlotOutcome> outcomes;
  ExchangeResult result;
};

/// One full transmission of `message` from two chains seeded with `seed`.
ExchangeTrace trace_exchange(const BitString& message, const Digest& seed,
                             const ChannelConfig& channel, const EccConfig& ecc,
                             const Dictionary& dictionary, Rng& rng);

ExchangeResult run_exchange(const BitString& message, const Digest& seed,
                            const ChannelConfig& channel, const EccConfig& ecc,
                            const Dictionary& dictionary, Rng& rng);

}  // namespace sig
