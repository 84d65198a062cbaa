// Command-line front end for the silent-slot anti-jamming simulator.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sig/analysis.hpp"
#include "sig/error.hpp"
#include "sig/sim.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

using nlohmann::ordered_json;

sig::BitString parse_message(const std::string& text) {
  if (text.rfind("0b", 0) == 0) return sig::BitString::from_binary(text.substr(2));
  return sig::BitString::from_hex(text);
}

void print(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Silent-slot anti-jamming protocol simulator and analysis tool"};
  app.require_subcommand(1);

  double theory_pa = 0.0;
  std::size_t theory_n = 0;
  std::size_t theory_lm = 0;
  auto* theory = app.add_subcommand("theory", "Closed-form delivery probabilities as JSON");
  theory->add_option("--pa", theory_pa, "Proactive jamming probability A/F")->required();
  theory->add_option("--n", theory_n, "Codeword length")->required();
  theory->add_option("--lm", theory_lm, "Message length in bits")->required();

  double bound_epsilon = 0.0;
  std::size_t bound_lm = 0;
  std::optional<std::size_t> bound_n;
  std::optional<double> bound_pa;
  auto* bound = app.add_subcommand("bound", "Maximum tolerable p_a, or codeword length needed for p_a");
  bound->add_option("--epsilon", bound_epsilon, "Tolerated failure probability")->required();
  bound->add_option("--lm", bound_lm, "Message length in bits")->required();
  auto* n_opt = bound->add_option("--n", bound_n, "Codeword length (gives max p_a)");
  auto* pa_opt = bound->add_option("--pa", bound_pa, "Jamming probability (gives required n)");
  n_opt->excludes(pa_opt);
  pa_opt->excludes(n_opt);

  std::string config_path;
  std::optional<std::string> output_override;
  std::optional<unsigned> threads_override;
  auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo sweep and write CSV");
  simulate->add_option("--config", config_path, "Experiment config (YAML)")->required();
  simulate->add_option("--output", output_override, "Override output_path from the config");
  simulate->add_option("--threads", threads_override, "Override worker thread count");

  sig::TraceRequest trace_request;
  bool trace_json = false;
  auto* trace = app.add_subcommand("trace", "Slot-by-slot log of one exchange");
  trace->add_option("--lm", trace_request.message_length, "Message length in bits")->required();
  trace->add_option("--n", trace_request.codeword_length, "Codeword length")->required();
  trace->add_option("--freqs", trace_request.frequency_count, "Number of frequencies F")->required();
  trace->add_option("--jammed", trace_request.jammed_count, "Proactively jammed frequencies A")->required();
  trace->add_option("--seed", trace_request.seed, "Seed for message, secret and channel")->required();
  trace->add_flag("--json", trace_json, "Emit JSON instead of a text table");

  std::uint32_t oracle_freqs = 0;
  std::uint32_t oracle_jammed = 0;
  std::size_t oracle_n = 0;
  std::string oracle_message;
  auto* oracle = app.add_subcommand("oracle", "Exact delivery probability by exhaustive enumeration");
  oracle->add_option("--freqs", oracle_freqs, "Number of frequencies F")->required();
  oracle->add_option("--jammed", oracle_jammed, "Proactively jammed frequencies A")->required();
  oracle->add_option("--n", oracle_n, "Codeword length")->required();
  oracle->add_option("--message", oracle_message, "Encrypted bit-string as hex, or 0b-prefixed binary")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*theory) {
      ordered_json doc;
      doc["p_a"] = theory_pa;
      doc["n"] = theory_n;
      doc["L_m"] = theory_lm;
      doc["codeword_delivery_prob"] = sig::codeword_delivery_prob(theory_pa, theory_n);
      doc["message_delivery_prob"] = sig::message_delivery_prob(theory_pa, theory_n, theory_lm);
      doc["lower_bound"] = sig::message_delivery_lower_bound(theory_pa, theory_n, theory_lm);
      doc["message_delivery_prob_exact"] =
          sig::message_delivery_prob_exact(theory_pa, theory_n, theory_lm);
      doc["encoded_length"] = theory_n * theory_lm;
      print(doc);
    } else if (*bound) {
      ordered_json doc;
      doc["epsilon"] = bound_epsilon;
      doc["L_m"] = bound_lm;
      if (bound_n) {
        doc["n"] = *bound_n;
        doc["max_jamming_resiliency"] = sig::max_jamming_resiliency(bound_epsilon, bound_lm, *bound_n);
      } else if (bound_pa) {
        doc["p_a"] = *bound_pa;
        const auto n = sig::required_codeword_length(*bound_pa, bound_epsilon, bound_lm);
        doc["satisfiable"] = n.has_value();
        doc["required_codeword_length"] = n ? ordered_json(*n) : ordered_json(nullptr);
        if (*bound_pa > 0.0 && *bound_pa < 1.0) {
          doc["continuous"] = sig::codeword_length_continuous(*bound_pa, bound_epsilon, bound_lm);
        } else {
          doc["continuous"] = nullptr;
        }
      } else {
        throw sig::InvalidParameter("bound needs one of --n or --pa");
      }
      print(doc);
    } else if (*simulate) {
      auto config = sig::load_experiment_config(config_path);
      if (output_override) config.output_path = *output_override;
      if (threads_override) config.threads = *threads_override;
      const auto points = sig::monte_carlo(config);
      std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
      if (!out) throw sig::InvalidParameter("cannot write " + config.output_path);
      sig::write_csv(out, points);
      std::cerr << "wrote " << points.size() << " sweep points to " << config.output_path << '\n';
    } else if (*trace) {
      const auto result = sig::run_trace(trace_request);
      std::cout << (trace_json ? sig::render_trace_json(trace_request, result)
                               : sig::render_trace_text(trace_request, result));
    } else if (*oracle) {
      const auto message = parse_message(oracle_message);
      if (message.empty()) throw sig::InvalidParameter("message must not be empty");
      const double probability = sig::exhaustive_oracle(oracle_freqs, oracle_jammed, oracle_n, message);
      const double p = static_cast<double>(oracle_jammed) / oracle_freqs;
      ordered_json doc;
      doc["F"] = oracle_freqs;
      doc["A"] = oracle_jammed;
      doc["n"] = oracle_n;
      doc["message"] = message.to_binary();
      doc["zero_bits"] = message.count_zeros();
      doc["probability"] = probability;
      doc["product_formula"] =
          std::pow(sig::codeword_delivery_prob(p, oracle_n), static_cast<double>(message.count_zeros()));
      print(doc);
    }
  } catch (const sig::InfeasibleProblem& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const sig::InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
