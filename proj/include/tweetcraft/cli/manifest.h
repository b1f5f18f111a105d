#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace tweetcraft::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Self-description of a run directory. Holds no timestamps or absolute
// output paths, so equal runs produce byte-identical manifests.
class Manifest {
 public:
  Manifest(std::string command, std::uint64_t seed, nlohmann::ordered_json config);

  void add_input(const std::string& role, const std::filesystem::path& path);
  // `name` is relative to the run directory.
  void add_output(const std::filesystem::path& run_dir, const std::string& name);

  nlohmann::ordered_json to_json() const;
  // Writes manifest.json into `run_dir`.
  void write(const std::filesystem::path& run_dir) const;

 private:
  struct Entry {
    std::string key;
    std::string path;
    std::string sha256;
  };
  std::string command_;
  std::uint64_t seed_;
  nlohmann::ordered_json config_;
  std::vector<Entry> inputs_, outputs_;
};

}  // namespace tweetcraft::cli
