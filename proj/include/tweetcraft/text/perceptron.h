#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace tweetcraft::text {

// Multiclass perceptron over string features with weight averaging.
//
// Every call to `observe` is one training instance. The averaged weights
// equal the mean, over all instances seen, of the weight vector as it stood
// after each instance. Accumulation is lazy: a weight's running total is
// only brought up to date when that weight changes or on `average()`.
class AveragedPerceptron {
 public:
  explicit AveragedPerceptron(std::size_t classes = 0);

  std::size_t classes() const { return classes_; }

  // Class scores for a bag of active (binary) features.
  std::vector<double> scores(std::span<const std::string> features) const;
  // Highest-scoring class among `allowed` (ties -> lowest class index).
  std::size_t predict(std::span<const std::string> features, std::span<const std::size_t> allowed) const;

  // Records one instance whose gold class is `truth` and whose current
  // prediction was `guess`; updates weights when they differ.
  void observe(std::span<const std::string> features, std::size_t truth, std::size_t guess);

  // Replaces the weights by their averages; training cannot resume afterwards.
  void average();
  bool averaged() const { return averaged_; }
  std::uint64_t instances() const { return instances_; }

  // Current weight table (averaged once `average()` has run).
  const std::unordered_map<std::string, std::vector<double>>& weights() const { return weights_; }

  // Keys sorted, weights as base64 float64, so output is stable and exact.
  nlohmann::json to_json() const;
  static AveragedPerceptron from_json(const nlohmann::json& j);

 private:
  struct Accumulator {
    std::vector<double> total;
    std::vector<std::uint64_t> stamp;
  };

  std::size_t classes_;
  std::unordered_map<std::string, std::vector<double>> weights_;
  std::unordered_map<std::string, Accumulator> accumulators_;
  std::uint64_t instances_ = 0;
  bool averaged_ = false;
};

}  // namespace tweetcraft::text
