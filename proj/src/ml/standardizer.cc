#include "tweetcraft/ml/standardizer.h"

#include <cmath>
#include <stdexcept>

namespace tweetcraft::ml {

Standardizer standardize_fit(const Matrix& X, std::vector<bool> mask) {
  const std::size_t n = X.rows(), d = X.cols();
  if (mask.size() != d) throw std::invalid_argument("standardizer mask width differs from data");
  Standardizer s;
  s.mask = std::move(mask);
  s.mean.assign(d, 0.0);
  s.stddev.assign(d, 1.0);
  if (n == 0) return s;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = X.row(i);
    for (std::size_t j = 0; j < d; ++j) s.mean[j] += r[j];
  }
  for (double& m : s.mean) m /= static_cast<double>(n);
  std::vector<double> var(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = X.row(i);
    for (std::size_t j = 0; j < d; ++j) var[j] += (r[j] - s.mean[j]) * (r[j] - s.mean[j]);
  }
  for (std::size_t j = 0; j < d; ++j) s.stddev[j] = std::max(std::sqrt(var[j] / static_cast<double>(n)), kStdFloor);
  return s;
}

void Standardizer::apply_inplace(std::span<double> row) const {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (mask[j]) row[j] = (row[j] - mean[j]) / stddev[j];
  }
}

std::vector<double> Standardizer::apply(std::span<const double> row) const {
  std::vector<double> out(row.begin(), row.end());
  apply_inplace(out);
  return out;
}

Matrix Standardizer::apply(const Matrix& X) const {
  Matrix out = X;
  for (std::size_t i = 0; i < out.rows(); ++i) apply_inplace(out.row(i));
  return out;
}

}  // namespace tweetcraft::ml
