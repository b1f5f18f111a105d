#include "tweetcraft/ml/logistic.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tweetcraft/common/error.h"

namespace tweetcraft::ml {

namespace {

// log(1 + exp(-z)) without overflow.
double softplus_neg(double z) { return z > 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z)); }

double row_dot(const Matrix& X, std::size_t i, std::span<const double> w) { return dot(X.row(i), w); }
double row_dot(std::span<const SparseVector> X, std::size_t i, std::span<const double> w) { return X[i].dot(w); }

void add_row(const Matrix& X, std::size_t i, double scale, std::vector<double>& g) {
  auto r = X.row(i);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] += scale * r[j];
}
void add_row(std::span<const SparseVector> X, std::size_t i, double scale, std::vector<double>& g) {
  for (const auto& [j, v] : X[i].entries) g[j] += scale * v;
}

template <class Rows>
LossGradient loss_grad(const Rows& X, std::size_t n, std::span<const int> y, std::span<const double> w, double b,
                       double lambda) {
  if (n == 0) throw std::invalid_argument("logistic regression needs at least one example");
  LossGradient out;
  out.grad_w.assign(w.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double z = row_dot(X, i, w) + b;
    // -log p(y|x) = softplus(-z) for y=1, softplus(z) for y=0.
    out.loss += y[i] ? softplus_neg(z) : softplus_neg(-z);
    double residual = sigmoid(z) - y[i];
    add_row(X, i, residual * inv_n, out.grad_w);
    out.grad_b += residual * inv_n;
  }
  out.loss *= inv_n;
  double sq = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    sq += w[j] * w[j];
    out.grad_w[j] += lambda * w[j];
  }
  out.loss += 0.5 * lambda * sq;
  return out;
}

template <class Rows>
LogisticModel fit(const Rows& X, std::size_t n, std::size_t d, std::span<const int> y, const LogisticOptions& opt) {
  if (y.size() != n) throw std::invalid_argument("label count differs from row count");
  LogisticModel m;
  m.weights.assign(d, 0.0);
  m.l2_lambda = opt.l2_lambda;
  for (std::size_t epoch = 0; epoch <= opt.epochs; ++epoch) {
    auto lg = loss_grad(X, n, y, m.weights, m.bias, opt.l2_lambda);
    if (!std::isfinite(lg.loss)) {
      throw RuntimeFailure("logistic loss became non-finite at epoch " + std::to_string(epoch) +
                           "; the learning rate is too high");
    }
    m.loss_trace.push_back(lg.loss);
    if (epoch == opt.epochs) break;
    for (std::size_t j = 0; j < d; ++j) m.weights[j] -= opt.learning_rate * lg.grad_w[j];
    m.bias -= opt.learning_rate * lg.grad_b;
  }
  return m;
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

double LogisticModel::decision(std::span<const double> x) const { return dot(weights, x) + bias; }
double LogisticModel::decision(const SparseVector& x) const { return x.dot(weights) + bias; }
double LogisticModel::predict_proba(std::span<const double> x) const { return sigmoid(decision(x)); }
double LogisticModel::predict_proba(const SparseVector& x) const { return sigmoid(decision(x)); }

LossGradient logistic_loss_and_gradient(const Matrix& X, std::span<const int> y, std::span<const double> w, double b,
                                        double l2_lambda) {
  return loss_grad(X, X.rows(), y, w, b, l2_lambda);
}

LossGradient logistic_loss_and_gradient(std::span<const SparseVector> X, std::span<const int> y,
                                        std::span<const double> w, double b, double l2_lambda) {
  return loss_grad(X, X.size(), y, w, b, l2_lambda);
}

LogisticModel logreg_fit(const Matrix& X, std::span<const int> y, const LogisticOptions& options) {
  return fit(X, X.rows(), X.cols(), y, options);
}

LogisticModel logreg_fit(std::span<const SparseVector> X, std::size_t dimension, std::span<const int> y,
                         const LogisticOptions& options) {
  return fit(X, X.size(), dimension, y, options);
}

}  // namespace tweetcraft::ml
