#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tweetcraft/ml/logistic.h"
#include "tweetcraft/ml/standardizer.h"
#include "tweetcraft/ml/svm.h"

namespace tweetcraft::ml {

inline constexpr const char* kEnvelopeVersion = "tweetcraft-model-v1";

// Versioned JSON envelope. Arrays travel as base64 little-endian float64 so
// that a save/load round trip is bit-exact.
struct ModelEnvelope {
  std::string model_type;
  nlohmann::json hyperparameters = nlohmann::json::object();
  std::map<std::string, std::vector<double>> arrays;

  nlohmann::json to_json() const;
  // Throws ValidationError on a wrong schema version or malformed field.
  static ModelEnvelope from_json(const nlohmann::json& j);

  const std::vector<double>& array(const std::string& name) const;
};

ModelEnvelope to_envelope(const LogisticModel& m);
LogisticModel logistic_from_envelope(const ModelEnvelope& e);

ModelEnvelope to_envelope(const SvmModel& m);
SvmModel svm_from_envelope(const ModelEnvelope& e);

ModelEnvelope to_envelope(const Standardizer& s);
Standardizer standardizer_from_envelope(const ModelEnvelope& e);

}  // namespace tweetcraft::ml
