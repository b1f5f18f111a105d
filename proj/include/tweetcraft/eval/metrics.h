#pragma once

#include <cstddef>
#include <span>

namespace tweetcraft::eval {

// Positive-class precision, recall and F1 with the confusion counts.
struct Metrics {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Labels are 1 (positive) or 0. P = 0 when nothing is predicted positive,
// R = 0 when there are no positives, F1 = 0 when P + R = 0. Throws
// std::invalid_argument on empty or mismatched input.
Metrics compute_metrics(std::span<const int> y_true, std::span<const int> y_pred);

// Field-wise mean of P, R and F1; confusion counts are summed.
Metrics mean_metrics(std::span<const Metrics> folds);

}  // namespace tweetcraft::eval
