#pragma once

#include <span>
#include <vector>

#include "tweetcraft/common/matrix.h"
#include "tweetcraft/common/sparse.h"

namespace tweetcraft::ml {

struct LogisticOptions {
  double l2_lambda = 1e-3;
  double learning_rate = 0.5;
  std::size_t epochs = 500;
};

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  double l2_lambda = 0.0;
  // Objective value before each gradient step, plus the final value.
  std::vector<double> loss_trace;

  double decision(std::span<const double> x) const;
  double decision(const SparseVector& x) const;
  double predict_proba(std::span<const double> x) const;
  double predict_proba(const SparseVector& x) const;
};

double sigmoid(double z);

struct LossGradient {
  double loss = 0.0;
  std::vector<double> grad_w;
  double grad_b = 0.0;
};

// Mean negative log-likelihood + (lambda / 2) |w|^2; the bias is not
// penalised.
LossGradient logistic_loss_and_gradient(const Matrix& X, std::span<const int> y, std::span<const double> w, double b,
                                        double l2_lambda);
LossGradient logistic_loss_and_gradient(std::span<const SparseVector> X, std::span<const int> y,
                                        std::span<const double> w, double b, double l2_lambda);

// Full-batch gradient descent from zero weights. Labels are 0/1. Throws
// RuntimeFailure when the loss stops being finite.
LogisticModel logreg_fit(const Matrix& X, std::span<const int> y, const LogisticOptions& options);
LogisticModel logreg_fit(std::span<const SparseVector> X, std::size_t dimension, std::span<const int> y,
                         const LogisticOptions& options);

}  // namespace tweetcraft::ml
