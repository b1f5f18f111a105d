#include "tweetcraft/text/perceptron.h"

#include <algorithm>
#include <stdexcept>

#include "tweetcraft/common/codec.h"
#include "tweetcraft/common/error.h"

namespace tweetcraft::text {

AveragedPerceptron::AveragedPerceptron(std::size_t classes) : classes_(classes) {}

std::vector<double> AveragedPerceptron::scores(std::span<const std::string> features) const {
  std::vector<double> s(classes_, 0.0);
  for (const auto& f : features) {
    auto it = weights_.find(f);
    if (it == weights_.end()) continue;
    for (std::size_t c = 0; c < classes_; ++c) s[c] += it->second[c];
  }
  return s;
}

std::size_t AveragedPerceptron::predict(std::span<const std::string> features,
                                        std::span<const std::size_t> allowed) const {
  auto s = scores(features);
  std::size_t best = allowed.front();
  for (std::size_t c : allowed) {
    if (s[c] > s[best] || (s[c] == s[best] && c < best)) best = c;
  }
  return best;
}

void AveragedPerceptron::observe(std::span<const std::string> features, std::size_t truth, std::size_t guess) {
  if (averaged_) throw std::logic_error("perceptron already averaged");
  // This instance is number `now` (1-based); an update made now is part of
  // the snapshot taken after it.
  const std::uint64_t now = instances_ + 1;
  if (truth != guess) {
    for (const auto& f : features) {
      auto& w = weights_[f];
      auto& acc = accumulators_[f];
      if (w.empty()) {
        w.assign(classes_, 0.0);
        acc.total.assign(classes_, 0.0);
        acc.stamp.assign(classes_, 1);
      }
      for (std::size_t c : {truth, guess}) {
        acc.total[c] += static_cast<double>(now - acc.stamp[c]) * w[c];
        acc.stamp[c] = now;
      }
      w[truth] += 1.0;
      w[guess] -= 1.0;
    }
  }
  instances_ = now;
}

void AveragedPerceptron::average() {
  if (averaged_) return;
  const std::uint64_t end = instances_ + 1;
  for (auto& [feature, w] : weights_) {
    auto& acc = accumulators_[feature];
    for (std::size_t c = 0; c < classes_; ++c) {
      double total = acc.total[c] + static_cast<double>(end - acc.stamp[c]) * w[c];
      w[c] = instances_ == 0 ? 0.0 : total / static_cast<double>(instances_);
    }
  }
  accumulators_.clear();
  averaged_ = true;
}

nlohmann::json AveragedPerceptron::to_json() const {
  std::vector<const std::string*> keys;
  keys.reserve(weights_.size());
  for (const auto& [k, _] : weights_) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });
  nlohmann::json features = nlohmann::json::array();
  std::vector<double> flat;
  flat.reserve(keys.size() * classes_);
  for (const auto* k : keys) {
    features.push_back(*k);
    const auto& w = weights_.at(*k);
    flat.insert(flat.end(), w.begin(), w.end());
  }
  return {{"classes", classes_},
          {"averaged", averaged_},
          {"instances", instances_},
          {"features", std::move(features)},
          {"weights", {{"shape", {keys.size(), classes_}}, {"data", encode_doubles(flat)}}}};
}

AveragedPerceptron AveragedPerceptron::from_json(const nlohmann::json& j) {
  AveragedPerceptron p(j.at("classes").get<std::size_t>());
  p.averaged_ = j.at("averaged").get<bool>();
  p.instances_ = j.at("instances").get<std::uint64_t>();
  if (!p.averaged_) throw ValidationError("only averaged perceptron models can be loaded");
  const auto& features = j.at("features");
  auto flat = decode_doubles(j.at("weights").at("data").get<std::string>());
  if (flat.size() != features.size() * p.classes_) throw ValidationError("perceptron weight table has wrong size");
  for (std::size_t i = 0; i < features.size(); ++i) {
    auto begin = flat.begin() + static_cast<std::ptrdiff_t>(i * p.classes_);
    p.weights_.emplace(features[i].get<std::string>(),
                       std::vector<double>(begin, begin + static_cast<std::ptrdiff_t>(p.classes_)));
  }
  return p;
}

}  // namespace tweetcraft::text
