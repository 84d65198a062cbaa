#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sig/analysis.hpp"
#include "sig/error.hpp"
#include "sig/sim.hpp"

using sig::BitString;
using sig::ExperimentConfig;

namespace {

ExperimentConfig small_config(std::uint32_t jammed, std::size_t trials) {
  ExperimentConfig config;
  config.jammed_counts = {jammed};
  config.codeword_lengths = {8};
  config.message_lengths = {128};
  config.trials = trials;
  config.batches = 10;
  config.master_seed = 2024;
  return config;
}

}  // namespace

TEST_CASE("type-7 quantiles") {
  CHECK(sig::quantile({3.0, 1.0, 2.0}, 0.5) == 2.0);
  CHECK(sig::quantile({1.0, 2.0, 3.0, 4.0}, 0.5) == 2.5);
  CHECK(sig::quantile({0.0, 10.0}, 0.05) == doctest::Approx(0.5));
  CHECK(sig::quantile({5.0}, 0.95) == 5.0);
  CHECK_THROWS_AS((sig::quantile({}, 0.5)), sig::InvalidParameter);
}

TEST_CASE("sweep extremes") {
  const auto clean = sig::monte_carlo(small_config(0, 100));
  REQUIRE(clean.size() == 1);
  CHECK(clean[0].delivery_rate == 1.0);
  CHECK(clean[0].q05 == 1.0);
  const auto jammed = sig::monte_carlo(small_config(124, 100));
  CHECK(jammed[0].delivery_rate == 0.0);
  CHECK(jammed[0].p_a == 1.0);
}

TEST_CASE("sweep point attaches theory and orders quantiles") {
  auto config = small_config(40, 1000);
  config.jammed_counts = {30, 40, 50};
  const auto points = sig::monte_carlo(config);
  REQUIRE(points.size() == 3);
  for (const auto& p : points) {
    CHECK(p.q05 <= p.q50);
    CHECK(p.q50 <= p.q95);
    CHECK(p.theory == sig::message_delivery_prob(p.p_a, 8, 128));
    CHECK(p.theory_exact == sig::message_delivery_prob_exact(p.p_a, 8, 128));
    CHECK(p.trials == 1000);
    CHECK(p.seed == 2024);
  }
  CHECK(points[0].jammed_count == 30);
  CHECK(points[2].jammed_count == 50);
}

TEST_CASE("sweep near the n = 16 resiliency bound") {
  ExperimentConfig config;
  config.jammed_counts = {68};
  config.codeword_lengths = {16};
  config.message_lengths = {128};
  config.trials = 10000;
  config.batches = 100;
  config.master_seed = 8;
  const auto p = sig::monte_carlo(config).front();
  // (1 - (68/124)^16)^64
  const double expected = 0.9957277095590082;
  CHECK(std::abs(p.delivery_rate - expected) <= 3 * std::sqrt(expected * (1 - expected) / 10000));
}

TEST_CASE("threaded and sequential sweeps agree") {
  auto config = small_config(45, 400);
  const auto sequential = sig::monte_carlo(config);
  config.threads = 4;
  const auto threaded = sig::monte_carlo(config);
  std::ostringstream a, b;
  sig::write_csv(a, sequential);
  sig::write_csv(b, threaded);
  CHECK(a.str() == b.str());
}

TEST_CASE("csv header and determinism") {
  const auto config = small_config(50, 200);
  std::ostringstream a, b;
  sig::write_csv(a, sig::monte_carlo(config));
  sig::write_csv(b, sig::monte_carlo(config));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("F,A,p_a,n,L_m,trials,delivery_rate,q05,q50,q95,theory,theory_exact,seed\n", 0) == 0);
}

TEST_CASE("invalid sweeps are rejected before work") {
  auto config = small_config(10, 100);
  config.batches = 7;
  CHECK_THROWS_AS(sig::monte_carlo(config), sig::InvalidParameter);;
  config = small_config(125, 100);
  CHECK_THROWS_AS(sig::monte_carlo(config), sig::InvalidParameter);;
  config = small_config(10, 100);
  config.codeword_lengths.clear();
  CHECK_THROWS_AS(sig::monte_carlo(config), sig::InvalidParameter);;
}

TEST_CASE("experiment config parsing") {
  const auto config = sig::parse_experiment_config(R"(
# sweep
frequency_count: 124
jammed_counts: [0, 62, 124]
codeword_lengths: [8, 16]
message_lengths: 128
trials: 1000
batches: 10
master_seed: 99
energy_mode: binary
output_path: out.csv
)");
  CHECK(config.jammed_counts == std::vector<std::uint32_t>{0, 62, 124});
  CHECK(config.codeword_lengths == std::vector<std::size_t>{8, 16});
  CHECK(config.message_lengths == std::vector<std::size_t>{128});
  CHECK(config.master_seed == 99);
  CHECK(config.output_path == "out.csv");
  CHECK_THROWS_AS(sig::parse_experiment_config("jammed_counts: [1]\nbogus: 3\n"), sig::InvalidParameter);;
  CHECK_THROWS_AS(sig::parse_experiment_config("jammed_counts: [1\n"), sig::InvalidParameter);;
  CHECK_THROWS_AS(sig::parse_experiment_config("- 1\n- 2\n"), sig::InvalidParameter);;
}

TEST_CASE("exhaustive oracle small instances") {
  CHECK(sig::exhaustive_oracle(124, 62, 3, BitString{1, 1}) == 1.0);
  CHECK(sig::exhaustive_oracle(4, 2, 2, BitString{0}) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(sig::exhaustive_oracle(4, 1, 2, BitString{0, 1, 0, 0}) ==
        doctest::Approx(0.823974609375).epsilon(1e-14));
  CHECK(sig::exhaustive_oracle(5, 0, 4, BitString{0, 0, 0}) == 1.0);
  CHECK(sig::exhaustive_oracle(5, 5, 4, BitString{0, 1}) == 0.0);
  CHECK_THROWS_AS((sig::exhaustive_oracle(5, 1, 7, BitString{0, 0, 0})), sig::InfeasibleProblem);
  CHECK_NOTHROW((sig::exhaustive_oracle(5, 1, 5, BitString{0, 0, 0, 0})));
}

TEST_CASE("fixed-ciphertext Monte Carlo tracks the oracle") {
  const BitString encrypted{0, 1, 0, 0};
  const double exact = sig::exhaustive_oracle(10, 5, 2, encrypted);
  const double rate = sig::monte_carlo_fixed_ciphertext(10, 5, 2, encrypted, 5000, 3);
  CHECK(std::abs(rate - exact) <= 3 * std::sqrt(exact * (1 - exact) / 5000));
}

TEST_CASE("trace of the toy configuration") {
  sig::TraceRequest request;  // L_m = 8, n = 8, F = 5, A = 1
  request.seed = 4;
  const auto trace = sig::run_trace(request);
  REQUIRE(trace.outcomes.size() == 64);
  for (const auto& s : trace.outcomes) {
    if (s.tx_active) REQUIRE(s.reactively_jammed);
    REQUIRE(s.frequency < 5);
  }
  const auto text = sig::render_trace_text(request, trace);
  CHECK(text == sig::render_trace_text(request, sig::run_trace(request)));
  CHECK(sig::render_trace_json(request, trace) == sig::render_trace_json(request, sig::run_trace(request)));
  CHECK(text.find("verdict ") != std::string::npos);

  request.jammed_count = 0;
  const auto clean = sig::run_trace(request);
  for (const auto& s : clean.outcomes) REQUIRE_FALSE(s.proactively_jammed);
  CHECK(sig::render_trace_json(request, clean).find("\"proactively_jammed\": true") == std::string::npos);
  CHECK(clean.result.delivered);
}
