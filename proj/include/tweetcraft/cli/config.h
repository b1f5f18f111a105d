#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "tweetcraft/eval/classifier.h"
#include "tweetcraft/eval/cross_validation.h"
#include "tweetcraft/eval/synthetic.h"
#include "tweetcraft/features/schema.h"
#include "tweetcraft/influence/grouping.h"

namespace tweetcraft::cli {

// Resolved settings for one run: TOML file first, then command-line flags.
struct RunConfig {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::filesystem::path out = "run";

  struct Paths {
    std::filesystem::path corpus, lexicon, vectors, annotated, nlp_model, labels, model, input;
  } paths;

  influence::GroupingOptions grouping{.method = influence::GroupMethod::sim_emb, .k = 5, .kmeans_restarts = 10};
  eval::ClassifierConfig classifier;
  std::vector<features::Family> families{features::kAllFamilies.begin(), features::kAllFamilies.end()};
  std::vector<eval::FeatureModel> eval_models{eval::FeatureModel::decoration, eval::FeatureModel::ngram};
  std::size_t folds = 5;

  int tagger_epochs = 8;
  int parser_epochs = 10;

  eval::SyntheticSpec synth;
  std::size_t annotated_sample = 600;

  std::string serve_addr = "127.0.0.1:8080";
  std::filesystem::path static_dir;
  std::string log_level = "info";

  // Stable JSON rendering, recorded in manifests.
  nlohmann::ordered_json to_json() const;
  // TOML rendering that load_config reads back to the same settings.
  std::string to_toml() const;
};

// Throws ValidationError on unreadable TOML, unknown keys or bad values.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view toml_text, const std::string& source = "config");

// "a,b,c" -> families; throws ValidationError naming an unknown family.
std::vector<features::Family> parse_family_list(std::string_view list);

}  // namespace tweetcraft::cli
