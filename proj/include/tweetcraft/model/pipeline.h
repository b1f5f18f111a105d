#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "tweetcraft/corpus/lexicon.h"
#include "tweetcraft/eval/classifier.h"
#include "tweetcraft/eval/dataset.h"
#include "tweetcraft/features/decoration.h"
#include "tweetcraft/ml/standardizer.h"
#include "tweetcraft/text/annotator.h"

namespace tweetcraft::model {

inline constexpr const char* kPipelineVersion = "tweetcraft-pipeline-v1";

struct PipelineConfig {
  eval::ClassifierConfig classifier;
  std::vector<features::Family> families{features::kAllFamilies.begin(), features::kAllFamilies.end()};
};

struct Prediction {
  int label = 0;          // 1 positive
  double score = 0.0;     // display value in [0, 1]
  double decision = 0.0;  // raw margin (SVM) or logit (MaxEnt)
  features::DecorationVector decoration{};  // unmasked, unstandardized
};

// Everything needed to go from raw record to label: annotator, lexicon,
// standardizer and classifier. Immutable after construction, so one instance
// can be shared between threads.
class TrainedPipeline {
 public:
  static TrainedPipeline train(const eval::Dataset& ds, text::Annotator annotator, corpus::SentimentLexicon lexicon,
                               const PipelineConfig& config);

  Prediction predict(const corpus::TweetRecord& record, Diagnostics* diagnostics = nullptr) const;
  Prediction predict_decoration(const features::DecorationVector& decoration) const;

  // First 16 hex digits of the SHA-256 of the serialized model.
  const std::string& model_id() const { return model_id_; }
  const std::vector<features::Family>& families() const { return families_; }
  eval::ClassifierKind classifier_kind() const { return classifier_.kind; }
  const nlohmann::json& training_metrics() const { return training_metrics_; }
  void set_training_metrics(nlohmann::json metrics);

  nlohmann::json to_json() const;
  static TrainedPipeline from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  // Throws ValidationError for a malformed file, RuntimeFailure if unreadable.
  static TrainedPipeline load(const std::filesystem::path& path);

 private:
  TrainedPipeline(text::Annotator annotator) : annotator_(std::move(annotator)) {}
  nlohmann::json body() const;
  void refresh_id();

  text::Annotator annotator_;
  corpus::SentimentLexicon lexicon_;
  ml::Standardizer standardizer_;
  eval::TrainedClassifier classifier_;
  std::vector<features::Family> families_;
  double decision_min_ = 0.0, decision_max_ = 0.0;
  nlohmann::json training_metrics_ = nlohmann::json::object();
  std::string model_id_;
};

}  // namespace tweetcraft::model
