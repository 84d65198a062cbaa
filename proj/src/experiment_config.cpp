#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "sig/error.hpp"
#include "sig/sim.hpp"

namespace sig {
namespace {

const std::set<std::string> kKnownKeys = {
    "frequency_count", "jammed_counts", "codeword_lengths", "message_lengths", "trials",
    "batches",         "master_seed",   "energy_mode",      "output_path",     "threads"};

template <typename T>
std::vector<T> read_list(const YAML::Node& node, const char* key) {
  std::vector<T> out;
  if (node.IsScalar()) {
    out.push_back(node.as<T>());
  } else if (node.IsSequence()) {
    for (const auto& item : node) out.push_back(item.as<T>());
  } else {
    throw InvalidParameter(std::string(key) + " must be a scalar or a list");
  }
  return out;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig config;
  try {
    const YAML::Node root = YAML::Load(std::string(text));
    if (!root.IsMap()) throw InvalidParameter("experiment config must be a key/value mapping");
    for (const auto& entry : root) {
      const auto key = entry.first.as<std::string>();
      if (!kKnownKeys.contains(key)) throw InvalidParameter("unknown config key '" + key + "'");
    }
    if (auto v = root["frequency_count"]) config.frequency_count = v.as<std::uint32_t>();
    if (auto v = root["jammed_counts"]) config.jammed_counts = read_list<std::uint32_t>(v, "jammed_counts");
    if (auto v = root["codeword_lengths"]) {
      config.codeword_lengths = read_list<std::size_t>(v, "codeword_lengths");
    }
    if (auto v = root["message_lengths"]) {
      config.message_lengths = read_list<std::size_t>(v, "message_lengths");
    }
    if (auto v = root["trials"]) config.trials = v.as<std::size_t>();
    if (auto v = root["batches"]) config.batches = v.as<std::size_t>();
    if (auto v = root["master_seed"]) config.master_seed = v.as<std::uint64_t>();
    if (auto v = root["energy_mode"]) config.energy_mode = parse_energy_mode(v.as<std::string>());
    if (auto v = root["output_path"]) config.output_path = v.as<std::string>();
    if (auto v = root["threads"]) config.threads = v.as<unsigned>();
  } catch (const YAML::Exception& e) {
    throw InvalidParameter(std::string("malformed experiment config: ") + e.what());
  }
  config.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_experiment_config(text.str());
}

}  // namespace sig
