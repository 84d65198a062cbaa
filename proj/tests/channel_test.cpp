#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "sig/channel.hpp"
#include "sig/error.hpp"

using sig::ChannelConfig;
using sig::EnergyMode;

TEST_CASE("jam selection sizes") {
  sig::Rng rng(1);
  CHECK(sig::jam_selection(rng, 124, 0).empty());
  auto all = sig::jam_selection(rng, 124, 124);
  std::sort(all.begin(), all.end());
  for (std::uint32_t f = 0; f < 124; ++f) REQUIRE(all[f] == f);
  const auto some = sig::jam_selection(rng, 124, 31);
  CHECK(std::set<std::uint32_t>(some.begin(), some.end()).size() == 31);
  CHECK_THROWS_AS(sig::jam_selection(rng, 5, 6), sig::InvalidParameter);;
}

TEST_CASE("each frequency is jammed at rate A/F") {
  sig::Rng rng(2);
  constexpr int kDraws = 100000;
  std::vector<int> hits(124, 0);
  for (int d = 0; d < kDraws; ++d) {
    for (auto f : sig::jam_selection(rng, 124, 31)) ++hits[f];
  }
  for (int h : hits) CHECK(std::abs(static_cast<double>(h) / kDraws - 0.25) < 0.01);
}

TEST_CASE("active slots are always reactively jammed by default") {
  ChannelConfig config;
  sig::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto out = sig::resolve_slot(config, i, i % 124, true, rng);
    REQUIRE(out.tx_active);
    REQUIRE(out.reactively_jammed);
    REQUIRE(out.energy_above_tau);
    REQUIRE_FALSE(out.direct_reception);
    REQUIRE_FALSE(out.proactively_jammed);
  }
}

TEST_CASE("empty unjammed spectrum senses nothing") {
  ChannelConfig config;
  config.proactive_jammed_count = 0;
  sig::Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const auto out = sig::resolve_slot(config, i, i % 124, false, rng);
    REQUIRE_FALSE(out.energy_above_tau);
    REQUIRE(out.rss == 0.0);
  }
  CHECK_THROWS_AS(sig::resolve_slot(config, 0, 124, false, rng), sig::InvalidParameter);;
}

TEST_CASE("silent slot flip rate converges to A/F") {
  ChannelConfig config;
  config.frequency_count = 5;
  config.proactive_jammed_count = 1;
  sig::Rng rng(5);
  constexpr int kSlots = 100000;
  int flips = 0;
  for (int i = 0; i < kSlots; ++i) {
    const auto out = sig::resolve_slot(config, i, static_cast<std::uint32_t>(i % 5), false, rng);
    REQUIRE(out.energy_above_tau == out.proactively_jammed);
    flips += out.energy_above_tau;
  }
  const double rate = static_cast<double>(flips) / kSlots;
  CHECK(std::abs(rate - 0.2) < 0.005);
  CHECK(std::abs(rate - 0.2) < 3.0 * std::sqrt(0.2 * 0.8 / kSlots));
}

TEST_CASE("jam indicators in consecutive slots are uncorrelated") {
  ChannelConfig config;
  config.proactive_jammed_count = 62;
  sig::Rng rng(6);
  constexpr int kPairs = 100000;
  std::vector<double> x(kPairs + 1);
  for (int i = 0; i <= kPairs; ++i) x[i] = sig::resolve_slot(config, i, 7, false, rng).proactively_jammed;
  double mx = 0, my = 0;
  for (int i = 0; i < kPairs; ++i) {
    mx += x[i];
    my += x[i + 1];
  }
  mx /= kPairs;
  my /= kPairs;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < kPairs; ++i) {
    sxy += (x[i] - mx) * (x[i + 1] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (x[i + 1] - my) * (x[i + 1] - my);
  }
  CHECK(std::abs(sxy / std::sqrt(sxx * syy)) < 0.01);
}

TEST_CASE("no reactive jamming and no proactive jamming is a perfect link") {
  ChannelConfig config;
  config.reactive_success_prob = 0.0;
  sig::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const bool active = i % 2 == 0;
    const auto out = sig::resolve_slot(config, i, 3, active, rng);
    REQUIRE(out.direct_reception == active);
    REQUIRE(out.energy_above_tau == active);
    REQUIRE_FALSE(out.reactively_jammed);
  }
}

TEST_CASE("one_to_zero knob forces energized slots low") {
  ChannelConfig config;
  config.one_to_zero_prob = 1.0;
  config.proactive_jammed_count = 124;
  sig::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    REQUIRE_FALSE(sig::resolve_slot(config, i, 0, true, rng).energy_above_tau);
    const auto silent = sig::resolve_slot(config, i, 0, false, rng);
    REQUIRE(silent.proactively_jammed);
    REQUIRE_FALSE(silent.energy_above_tau);
  }
}

TEST_CASE("sense_energy compares rss against tau") {
  sig::SlotOutcome out;
  out.rss = 0.0;
  CHECK_FALSE(sig::sense_energy(out, 0.5));
  out.rss = 1.0;
  CHECK(sig::sense_energy(out, 0.5));
}

TEST_CASE("analog mode detects jamming above the noise floor") {
  ChannelConfig config;
  config.energy_mode = EnergyMode::analog;
  config.proactive_jammed_count = 124;
  config.validate();
  sig::Rng rng(9);
  int detected = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto out = sig::resolve_slot(config, i, 1, false, rng);
    REQUIRE(out.proactively_jammed);
    detected += sig::sense_energy(out, config.tau);
  }
  CHECK(detected == 1000);

  config.proactive_jammed_count = 0;
  int false_alarms = 0;
  for (int i = 0; i < 1000; ++i) false_alarms += sig::resolve_slot(config, i, 1, false, rng).energy_above_tau;
  CHECK(false_alarms <= 2);
}

TEST_CASE("channel config validation") {
  ChannelConfig config;
  config.proactive_jammed_count = 125;
  CHECK_THROWS_AS(config.validate(), sig::InvalidParameter);;
  config.proactive_jammed_count = 10;
  config.reactive_success_prob = 1.5;
  CHECK_THROWS_AS(config.validate(), sig::InvalidParameter);;
  config.reactive_success_prob = 1.0;
  config.energy_mode = EnergyMode::analog;
  config.tau = 0.05;
  CHECK_THROWS_AS(config.validate(), sig::InvalidParameter);;
  config.tau = 1.0;
  CHECK_NOTHROW(config.validate());
  CHECK(config.jam_probability() == doctest::Approx(10.0 / 124));
  CHECK(sig::parse_energy_mode("analog") == EnergyMode::analog);
  CHECK_THROWS_AS(sig::parse_energy_mode("loud"), sig::InvalidParameter);;
}
