#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "sig/error.hpp"
#include "sig/sim.hpp"

namespace sig {
namespace {

ChannelConfig trace_channel(const TraceRequest& request) {
  ChannelConfig channel;
  channel.frequency_count = request.frequency_count;
  channel.proactive_jammed_count = request.jammed_count;
  return channel;
}

const char* verdict(const ExchangeResult& result) {
  if (!result.delivered) return "error";
  return result.via_direct_reception ? "delivered-direct" : "delivered";
}

}  // namespace

ExchangeTrace run_trace(const TraceRequest& request) {
  if (request.message_length == 0) throw InvalidParameter("message length must be positive");
  const ChannelConfig channel = trace_channel(request);
  channel.validate();
  Rng rng(request.seed);
  const Digest seed = rng.random_digest();
  BitString message = rng.random_bits(request.message_length);
  const Dictionary dictionary{message};
  return trace_exchange(message, seed, channel, EccConfig(request.codeword_length), dictionary, rng);
}

std::string render_trace_text(const TraceRequest& request, const ExchangeTrace& trace) {
  std::ostringstream out;
  const auto& result = trace.result;
  out << "# L_m=" << request.message_length << " n=" << request.codeword_length
      << " F=" << request.frequency_count << " A=" << request.jammed_count
      << " seed=" << request.seed << '\n';
  out << "slot freq  tx      reactive proactive sensed\n";
  for (std::size_t i = 0; i < result.slots_used; ++i) {
    const SlotOutcome& s = trace.outcomes[i];
    out << std::setw(4) << s.slot_index << ' ' << std::setw(4) << s.frequency << "  "
        << std::left << std::setw(7) << (s.tx_active ? "active" : "silent") << ' ' << std::setw(8)
        << (s.reactively_jammed ? "jammed" : "-") << ' ' << std::setw(9)
        << (s.proactively_jammed ? "jammed" : "-") << ' ' << std::right;
    if (i < result.received_encoded.size()) {
      out << result.received_encoded[i];
    } else {
      out << "rx";
    }
    out << '\n';
  }
  out << "m_e   " << trace.plan.encrypted.to_binary() << '\n';
  out << "m_ec  " << trace.plan.encoded.to_binary() << '\n';
  out << "m'_ec " << result.received_encoded.to_binary() << '\n';
  out << "bit_errors_pre_decode " << result.bit_errors_pre_decode << '\n';
  out << "slots_used " << result.slots_used << '\n';
  out << "verdict " << verdict(result) << '\n';
  return out.str();
}

std::string render_trace_json(const TraceRequest& request, const ExchangeTrace& trace) {
  const auto& result = trace.result;
  nlohmann::ordered_json doc;
  doc["message_length"] = request.message_length;
  doc["codeword_length"] = request.codeword_length;
  doc["frequency_count"] = request.frequency_count;
  doc["jammed_count"] = request.jammed_count;
  doc["seed"] = request.seed;
  auto slots = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.slots_used; ++i) {
    const SlotOutcome& s = trace.outcomes[i];
    nlohmann::ordered_json slot;
    slot["slot"] = s.slot_index;
    slot["frequency"] = s.frequency;
    slot["tx_active"] = s.tx_active;
    slot["reactively_jammed"] = s.reactively_jammed;
    slot["proactively_jammed"] = s.proactively_jammed;
    slot["rss"] = s.rss;
    slot["direct_reception"] = s.direct_reception;
    if (i < result.received_encoded.size()) {
      slot["sensed"] = result.received_encoded[i] ? 1 : 0;
    } else {
      slot["sensed"] = nullptr;
    }
    slots.push_back(std::move(slot));
  }
  doc["slots"] = std::move(slots);
  doc["encrypted"] = trace.plan.encrypted.to_binary();
  doc["encoded"] = trace.plan.encoded.to_binary();
  doc["received_encoded"] = result.received_encoded.to_binary();
  doc["bit_errors_pre_decode"] = result.bit_errors_pre_decode;
  doc["slots_used"] = result.slots_used;
  doc["delivered"] = result.delivered;
  doc["via_direct_reception"] = result.via_direct_reception;
  doc["verdict"] = verdict(result);
  return doc.dump(2) + "\n";
}

}  // namespace sig
