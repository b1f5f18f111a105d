#include "tweetcraft/ml/persist.h"

#include "tweetcraft/common/codec.h"
#include "tweetcraft/common/error.h"

namespace tweetcraft::ml {

using nlohmann::json;

namespace {

std::vector<double> to_doubles(const std::vector<bool>& bits) { return {bits.begin(), bits.end()}; }

std::vector<bool> to_bits(const std::vector<double>& values) {
  std::vector<bool> out;
  for (double v : values) out.push_back(v != 0.0);
  return out;
}

void expect_type(const ModelEnvelope& e, const char* type) {
  if (e.model_type != type) throw ValidationError("expected model type " + std::string(type) + ", got " + e.model_type);
}

}  // namespace

json ModelEnvelope::to_json() const {
  json arr = json::object();
  for (const auto& [name, values] : arrays) arr[name] = encode_doubles(values);
  return json{{"schema_version", kEnvelopeVersion},
              {"model_type", model_type},
              {"hyperparameters", hyperparameters},
              {"arrays", arr}};
}

ModelEnvelope ModelEnvelope::from_json(const json& j) {
  try {
    if (j.at("schema_version").get<std::string>() != kEnvelopeVersion) {
      throw ValidationError("unsupported model schema version " + j.at("schema_version").dump());
    }
    ModelEnvelope e;
    e.model_type = j.at("model_type").get<std::string>();
    e.hyperparameters = j.at("hyperparameters");
    for (const auto& [name, value] : j.at("arrays").items()) e.arrays[name] = decode_doubles(value.get<std::string>());
    return e;
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("malformed model envelope: ") + ex.what());
  }
}

const std::vector<double>& ModelEnvelope::array(const std::string& name) const {
  auto it = arrays.find(name);
  if (it == arrays.end()) throw ValidationError("model envelope lacks array " + name);
  return it->second;
}

ModelEnvelope to_envelope(const LogisticModel& m) {
  ModelEnvelope e;
  e.model_type = "logistic";
  e.hyperparameters = {{"l2_lambda", m.l2_lambda}};
  e.arrays["weights"] = m.weights;
  e.arrays["bias"] = {m.bias};
  return e;
}

LogisticModel logistic_from_envelope(const ModelEnvelope& e) {
  expect_type(e, "logistic");
  LogisticModel m;
  m.l2_lambda = e.hyperparameters.value("l2_lambda", 0.0);
  m.weights = e.array("weights");
  const auto& b = e.array("bias");
  if (b.size() != 1) throw ValidationError("logistic bias must be a single value");
  m.bias = b[0];
  return m;
}

ModelEnvelope to_envelope(const SvmModel& m) {
  ModelEnvelope e;
  e.model_type = "svm";
  e.hyperparameters = {{"kernel", to_string(m.kernel.type)},
                       {"C", m.C},
                       {"dimension", m.support_vectors.cols()},
                       {"support_vectors", m.support_vectors.rows()}};
  // Gamma travels as an array to keep the exact bits.
  e.arrays["gamma"] = {m.kernel.gamma};
  e.arrays["bias"] = {m.bias};
  e.arrays["coefficients"] = m.coefficients;
  e.arrays["support_vectors"] = {m.support_vectors.data().begin(), m.support_vectors.data().end()};
  e.arrays["linear_weights"] = m.linear_weights;
  return e;
}

SvmModel svm_from_envelope(const ModelEnvelope& e) {
  expect_type(e, "svm");
  SvmModel m;
  try {
    auto kernel = e.hyperparameters.at("kernel").get<std::string>();
    if (kernel == "linear") m.kernel.type = KernelType::linear;
    else if (kernel == "rbf") m.kernel.type = KernelType::rbf;
    else throw ValidationError("unknown SVM kernel " + kernel);
    m.C = e.hyperparameters.at("C").get<double>();
    auto d = e.hyperparameters.at("dimension").get<std::size_t>();
    auto rows = e.hyperparameters.at("support_vectors").get<std::size_t>();
    const auto& sv = e.array("support_vectors");
    if (sv.size() != rows * d) throw ValidationError("support vector array has the wrong size");
    m.support_vectors = Matrix(rows, d);
    std::copy(sv.begin(), sv.end(), m.support_vectors.data().begin());
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("malformed SVM hyperparameters: ") + ex.what());
  }
  m.kernel.gamma = e.array("gamma").at(0);
  m.bias = e.array("bias").at(0);
  m.coefficients = e.array("coefficients");
  m.linear_weights = e.array("linear_weights");
  if (m.coefficients.size() != m.support_vectors.rows()) throw ValidationError("SVM coefficient count mismatch");
  return m;
}

ModelEnvelope to_envelope(const Standardizer& s) {
  ModelEnvelope e;
  e.model_type = "standardizer";
  e.arrays["mean"] = s.mean;
  e.arrays["stddev"] = s.stddev;
  e.arrays["mask"] = to_doubles(s.mask);
  return e;
}

Standardizer standardizer_from_envelope(const ModelEnvelope& e) {
  expect_type(e, "standardizer");
  Standardizer s;
  s.mean = e.array("mean");
  s.stddev = e.array("stddev");
  s.mask = to_bits(e.array("mask"));
  if (s.mean.size() != s.stddev.size() || s.mean.size() != s.mask.size()) {
    throw ValidationError("standardizer arrays differ in length");
  }
  return s;
}

}  // namespace tweetcraft::ml
