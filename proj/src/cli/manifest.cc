#include "tweetcraft/cli/manifest.h"

#include <fstream>

#include "tweetcraft/common/codec.h"
#include "tweetcraft/common/error.h"
#include "tweetcraft/features/schema.h"

namespace tweetcraft::cli {

using nlohmann::ordered_json;

Manifest::Manifest(std::string command, std::uint64_t seed, ordered_json config)
    : command_(std::move(command)), seed_(seed), config_(std::move(config)) {}

void Manifest::add_input(const std::string& role, const std::filesystem::path& path) {
  inputs_.push_back({role, path.generic_string(), sha256_file(path)});
}

void Manifest::add_output(const std::filesystem::path& run_dir, const std::string& name) {
  outputs_.push_back({name, name, sha256_file(run_dir / name)});
}

ordered_json Manifest::to_json() const {
  ordered_json inputs = ordered_json::array(), outputs = ordered_json::array();
  for (const auto& e : inputs_) inputs.push_back({{"role", e.key}, {"path", e.path}, {"sha256", e.sha256}});
  for (const auto& e : outputs_) outputs.push_back({{"name", e.path}, {"sha256", e.sha256}});
  return ordered_json{{"command", command_},
                      {"tool_version", kToolVersion},
                      {"feature_schema", features::FeatureSchema::decoration().version()},
                      {"seed", seed_},
                      {"config", config_},
                      {"inputs", inputs},
                      {"outputs", outputs}};
}

void Manifest::write(const std::filesystem::path& run_dir) const {
  std::ofstream out(run_dir / "manifest.json", std::ios::binary);
  if (!out) throw RuntimeFailure("cannot write manifest in " + run_dir.string());
  out << to_json().dump(2) << '\n';
}

}  // namespace tweetcraft::cli
