#pragma once

#include <span>
#include <vector>

#include "tweetcraft/common/matrix.h"

namespace tweetcraft::ml {

inline constexpr double kStdFloor = 1e-12;

// Per-column z-scoring of the masked columns; the rest pass through.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> stddev;  // population, floored at kStdFloor
  std::vector<bool> mask;

  void apply_inplace(std::span<double> row) const;
  std::vector<double> apply(std::span<const double> row) const;
  Matrix apply(const Matrix& X) const;

  bool operator==(const Standardizer&) const = default;
};

Standardizer standardize_fit(const Matrix& X, std::vector<bool> mask);

}  // namespace tweetcraft::ml
