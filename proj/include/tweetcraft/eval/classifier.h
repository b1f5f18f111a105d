#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tweetcraft/common/matrix.h"
#include "tweetcraft/ml/logistic.h"
#include "tweetcraft/ml/persist.h"
#include "tweetcraft/ml/svm.h"

namespace tweetcraft::eval {

enum class ClassifierKind { maxent, svm_linear, svm_rbf };

std::string_view to_string(ClassifierKind kind);
// Accepts "maxent", "svm-linear", "svm-rbf" (underscores too).
std::optional<ClassifierKind> parse_classifier(std::string_view name);

struct ClassifierConfig {
  ClassifierKind kind = ClassifierKind::svm_rbf;
  double C = 1.0;
  double gamma = 0.0;  // non-positive: 1 / d
  double svm_tol = 1e-3;
  ml::LogisticOptions logistic;
};

// A trained dense binary classifier. decision() >= 0 means positive.
struct TrainedClassifier {
  ClassifierKind kind = ClassifierKind::svm_rbf;
  std::optional<ml::LogisticModel> logistic;
  std::optional<ml::SvmModel> svm;

  double decision(std::span<const double> x) const;
  int predict(std::span<const double> x) const { return decision(x) >= 0.0 ? 1 : 0; }

  ml::ModelEnvelope to_envelope() const;
  static TrainedClassifier from_envelope(const ml::ModelEnvelope& e);
};

// Labels are 0/1.
TrainedClassifier train_classifier(const Matrix& X, std::span<const int> y, const ClassifierConfig& config);

}  // namespace tweetcraft::eval
