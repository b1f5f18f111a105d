#include "tweetcraft/eval/classifier.h"

#include "tweetcraft/common/error.h"

namespace tweetcraft::eval {

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::maxent: return "maxent";
    case ClassifierKind::svm_linear: return "svm-linear";
    case ClassifierKind::svm_rbf: return "svm-rbf";
  }
  return "?";
}

std::optional<ClassifierKind> parse_classifier(std::string_view name) {
  if (name == "maxent") return ClassifierKind::maxent;
  if (name == "svm-linear" || name == "svm_linear") return ClassifierKind::svm_linear;
  if (name == "svm-rbf" || name == "svm_rbf") return ClassifierKind::svm_rbf;
  return std::nullopt;
}

double TrainedClassifier::decision(std::span<const double> x) const {
  if (logistic) return logistic->decision(x);
  return svm->margin(x);
}

ml::ModelEnvelope TrainedClassifier::to_envelope() const {
  auto e = logistic ? ml::to_envelope(*logistic) : ml::to_envelope(*svm);
  e.hyperparameters["classifier"] = to_string(kind);
  return e;
}

TrainedClassifier TrainedClassifier::from_envelope(const ml::ModelEnvelope& e) {
  TrainedClassifier c;
  auto kind = parse_classifier(e.hyperparameters.value("classifier", ""));
  if (!kind) throw ValidationError("model envelope names no known classifier");
  c.kind = *kind;
  if (c.kind == ClassifierKind::maxent) c.logistic = ml::logistic_from_envelope(e);
  else c.svm = ml::svm_from_envelope(e);
  return c;
}

TrainedClassifier train_classifier(const Matrix& X, std::span<const int> y, const ClassifierConfig& config) {
  TrainedClassifier c;
  c.kind = config.kind;
  if (config.kind == ClassifierKind::maxent) {
    c.logistic = ml::logreg_fit(X, y, config.logistic);
    return c;
  }
  std::vector<int> signed_y;
  signed_y.reserve(y.size());
  for (int v : y) signed_y.push_back(v ? 1 : -1);
  ml::SvmOptions opt;
  opt.C = config.C;
  opt.tol = config.svm_tol;
  opt.kernel.type = config.kind == ClassifierKind::svm_linear ? ml::KernelType::linear : ml::KernelType::rbf;
  opt.kernel.gamma = config.gamma;
  c.svm = ml::svm_fit_smo(X, signed_y, opt).model;
  return c;
}

}  // namespace tweetcraft::eval
