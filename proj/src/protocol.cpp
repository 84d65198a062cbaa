#include "sig/protocol.hpp"

#include <fstream>
#include <istream>
#include <string>

#include "sig/error.hpp"

namespace sig {

Dictionary Dictionary::parse(std::istream& in) {
  Dictionary dict;
  std::optional<std::size_t> length;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') continue;
    auto message = BitString::from_hex(line);
    if (length && *length != message.size()) {
      throw InvalidParameter("dictionary line " + std::to_string(line_no) + " has " +
                             std::to_string(message.size()) + " bits, expected " +
                             std::to_string(*length));
    }
    length = message.size();
    dict.insert(std::move(message));
  }
  return dict;
}

Dictionary Dictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open dictionary file " + path.string());
  return parse(in);
}

TransmitPlan transmit_plan(const BitString& message, SecretChain& chain, const EccConfig& ecc,
                           std::uint32_t frequency_count) {
  if (frequency_count == 0) throw InvalidParameter("frequency count must be positive");
  chain.advance();
  TransmitPlan plan;
  plan.encrypted = keystream_encrypt(message, chain.secret());
  plan.encoded = encode(plan.encrypted, ecc);
  plan.slots.reserve(plan.encoded.size());
  for (std::size_t i = 0; i < plan.encoded.size(); ++i) {
    plan.slots.push_back({i, derive_frequency(chain.secret(), i, frequency_count), plan.encoded[i]});
  }
  return plan;
}

ExchangeResult receive_message(std::span<const SlotOutcome> slots,
                               const std::optional<BitString>& on_air_payload,
                               SecretChain& chain, const EccConfig& ecc,
                               std::uint32_t frequency_count, const Dictionary& dictionary,
                               double tau) {
  chain.advance();
  const Digest& secret = chain.secret();
  ExchangeResult result;
  for (const SlotOutcome& slot : slots) {
    ++result.slots_used;
    const std::uint32_t listening = derive_frequency(secret, slot.slot_index, frequency_count);
    if (slot.direct_reception && on_air_payload && slot.frequency == listening) {
      BitString candidate = keystream_decrypt(*on_air_payload, secret);
      if (dictionary.contains(candidate)) {
        result.delivered = true;
        result.via_direct_reception = true;
        result.recovered = std::move(candidate);
        return result;
      }
    }
    result.received_encoded.push_back(sense_energy(slot, tau));
  }

  const BitString decoded = decode(result.received_encoded, ecc);
  BitString candidate = keystream_decrypt(decoded, secret);
  if (dictionary.contains(candidate)) {
    result.delivered = true;
    result.recovered = std::move(candidate);
  }
  return result;
}

ExchangeTrace trace_exchange(const BitString& message, const Digest& seed,
                             const ChannelConfig& channel, const EccConfig& ecc,
                             const Dictionary& dictionary, Rng& rng) {
  channel.validate();
  SecretChain transmitter(seed);
  SecretChain receiver(seed);

  ExchangeTrace trace;
  trace.plan = transmit_plan(message, transmitter, ecc, channel.frequency_count);
  trace.outcomes.reserve(trace.plan.slots.size());
  for (const PlannedSlot& slot : trace.plan.slots) {
    trace.outcomes.push_back(
        resolve_slot(channel, slot.slot_index, slot.frequency, slot.tx_active, rng));
  }
  trace.result = receive_message(trace.outcomes, trace.plan.encrypted, receiver, ecc,
                                 channel.frequency_count, dictionary,
                                 channel.decision_threshold());

  const std::size_t sensed = trace.result.received_encoded.size();
  for (std::size_t i = 0; i < sensed; ++i) {
    if (!trace.plan.encoded[i] && trace.result.received_encoded[i]) {
      ++trace.result.bit_errors_pre_decode;
    }
  }
  return trace;
}

ExchangeResult run_exchange(const BitString& message, const Digest& seed,
                            const ChannelConfig& channel, const EccConfig& ecc,
                            const Dictionary& dictionary, Rng& rng) {
  return trace_exchange(message, seed, channel, ecc, dictionary, rng).result;
}

}  // namespace sig
