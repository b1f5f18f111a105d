#include "tweetcraft/model/pipeline.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "tweetcraft/common/codec.h"
#include "tweetcraft/eval/cross_validation.h"
#include "tweetcraft/ml/persist.h"

namespace tweetcraft::model {

using nlohmann::json;

TrainedPipeline TrainedPipeline::train(const eval::Dataset& ds, text::Annotator annotator,
                                       corpus::SentimentLexicon lexicon, const PipelineConfig& config) {
  if (ds.size() < 2) throw ValidationError("training needs at least two labeled examples");
  TrainedPipeline p(std::move(annotator));
  p.lexicon_ = std::move(lexicon);
  p.families_ = config.families;

  std::vector<std::size_t> rows(ds.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  Matrix X = eval::decoration_matrix(ds, rows, p.families_);
  p.standardizer_ = ml::standardize_fit(X, features::FeatureSchema::decoration().continuous_mask());
  X = p.standardizer_.apply(X);
  auto y = ds.labels();
  p.classifier_ = eval::train_classifier(X, y, config.classifier);

  p.decision_min_ = std::numeric_limits<double>::infinity();
  p.decision_max_ = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < X.rows(); ++r) {
    double d = p.classifier_.decision(X.row(r));
    p.decision_min_ = std::min(p.decision_min_, d);
    p.decision_max_ = std::max(p.decision_max_, d);
  }
  p.refresh_id();
  return p;
}

Prediction TrainedPipeline::predict_decoration(const features::DecorationVector& decoration) const {
  Prediction out;
  out.decoration = decoration;
  auto x = decoration;
  features::mask_families(x, families_);
  standardizer_.apply_inplace(x);
  out.decision = classifier_.decision(x);
  out.label = out.decision >= 0.0 ? 1 : 0;
  if (classifier_.kind == eval::ClassifierKind::maxent) {
    out.score = ml::sigmoid(out.decision);
  } else if (decision_max_ > decision_min_) {
    // Display transform only: min-max over the training margins.
    out.score = std::clamp((out.decision - decision_min_) / (decision_max_ - decision_min_), 0.0, 1.0);
  } else {
    out.score = 0.5;
  }
  return out;
}

Prediction TrainedPipeline::predict(const corpus::TweetRecord& record, Diagnostics* diagnostics) const {
  return predict_decoration(features::extract_decoration(record, annotator_, lexicon_, diagnostics));
}

void TrainedPipeline::set_training_metrics(json metrics) {
  training_metrics_ = std::move(metrics);
  refresh_id();
}

json TrainedPipeline::body() const {
  std::map<std::string, double> lex(lexicon_.entries().begin(), lexicon_.entries().end());
  json lexicon = json::object();
  for (const auto& [w, s] : lex) lexicon[w] = s;
  json families = json::array();
  for (auto f : families_) families.push_back(features::to_string(f));
  return json{{"schema_version", kPipelineVersion},
              {"feature_schema", features::FeatureSchema::decoration().version()},
              {"families", families},
              {"annotator", annotator_.to_json()},
              {"lexicon", lexicon},
              {"standardizer", ml::to_envelope(standardizer_).to_json()},
              {"classifier", classifier_.to_envelope().to_json()},
              {"decision_range", encode_doubles(std::vector<double>{decision_min_, decision_max_})},
              {"training_metrics", training_metrics_}};
}

void TrainedPipeline::refresh_id() { model_id_ = sha256_hex(body().dump()).substr(0, 16); }

json TrainedPipeline::to_json() const {
  json j = body();
  j["model_id"] = model_id_;
  return j;
}

TrainedPipeline TrainedPipeline::from_json(const json& j) {
  try {
    if (j.at("schema_version").get<std::string>() != kPipelineVersion) {
      throw ValidationError("unsupported pipeline version " + j.at("schema_version").dump());
    }
    if (j.at("feature_schema").get<std::string>() != features::FeatureSchema::decoration().version()) {
      throw ValidationError("model was trained on feature schema " + j.at("feature_schema").dump());
    }
    TrainedPipeline p(text::Annotator::from_json(j.at("annotator")));
    for (const auto& [w, s] : j.at("lexicon").items()) p.lexicon_.set(w, s.get<double>());
    for (const auto& f : j.at("families")) {
      auto fam = features::parse_family(f.get<std::string>());
      if (!fam) throw ValidationError("unknown feature family " + f.dump());
      p.families_.push_back(*fam);
    }
    p.standardizer_ = ml::standardizer_from_envelope(ml::ModelEnvelope::from_json(j.at("standardizer")));
    p.classifier_ = eval::TrainedClassifier::from_envelope(ml::ModelEnvelope::from_json(j.at("classifier")));
    auto range = decode_doubles(j.at("decision_range").get<std::string>());
    if (range.size() != 2) throw ValidationError("decision_range must hold two values");
    p.decision_min_ = range[0];
    p.decision_max_ = range[1];
    p.training_metrics_ = j.at("training_metrics");
    p.refresh_id();
    if (auto it = j.find("model_id"); it != j.end() && it->get<std::string>() != p.model_id_) {
      throw ValidationError("model_id does not match the model contents");
    }
    return p;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed model file: ") + e.what());
  }
}

void TrainedPipeline::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeFailure("cannot write " + path.string());
  out << to_json().dump() << '\n';
}

TrainedPipeline TrainedPipeline::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeFailure("cannot open model " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("model file " + path.string() + " is not JSON: " + e.what());
  }
  return from_json(j);
}

}  // namespace tweetcraft::model
