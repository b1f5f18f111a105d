#include "tweetcraft/ml/svm.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tweetcraft::ml {

namespace {

constexpr double kTau = 1e-12;
constexpr std::size_t kFullCacheRows = 5000;

// Rows of Q_ij = y_i y_j K(x_i, x_j), fully cached when small enough.
class QMatrix {
 public:
  QMatrix(const Matrix& X, std::span<const int> y, const Kernel& k) : X_(X), y_(y), k_(k), n_(X.rows()) {
    diag_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) diag_[i] = k_(X_.row(i), X_.row(i));
    if (n_ <= kFullCacheRows) {
      full_.resize(n_ * n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          double q = y_[i] * y_[j] * k_(X_.row(i), X_.row(j));
          full_[i * n_ + j] = full_[j * n_ + i] = q;
        }
      }
    }
  }

  std::span<const double> row(std::size_t i) {
    if (!full_.empty()) return {full_.data() + i * n_, n_};
    scratch_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) scratch_[j] = y_[i] * y_[j] * k_(X_.row(i), X_.row(j));
    return scratch_;
  }
  // Two rows at once without the second invalidating the first.
  void rows(std::size_t i, std::size_t j, std::vector<double>& qi, std::vector<double>& qj) {
    auto a = row(i);
    qi.assign(a.begin(), a.end());
    auto b = row(j);
    qj.assign(b.begin(), b.end());
  }
  double diag(std::size_t i) const { return diag_[i]; }

 private:
  const Matrix& X_;
  std::span<const int> y_;
  Kernel k_;
  std::size_t n_;
  std::vector<double> diag_, full_, scratch_;
};

}  // namespace

double Kernel::operator()(std::span<const double> u, std::span<const double> v) const {
  if (type == KernelType::linear) return dot(u, v);
  return std::exp(-gamma * squared_distance(u, v));
}

std::string_view to_string(KernelType type) { return type == KernelType::linear ? "linear" : "rbf"; }

double SvmModel::margin(std::span<const double> x) const {
  if (kernel.type == KernelType::linear && !linear_weights.empty()) return dot(linear_weights, x) + bias;
  double s = bias;
  for (std::size_t i = 0; i < coefficients.size(); ++i) s += coefficients[i] * kernel(support_vectors.row(i), x);
  return s;
}

double svm_dual_objective(const Matrix& X, std::span<const int> y, std::span<const double> alphas,
                          const Kernel& kernel) {
  double lin = 0.0, quad = 0.0;
  for (std::size_t i = 0; i < X.rows(); ++i) {
    lin += alphas[i];
    if (alphas[i] == 0.0) continue;
    for (std::size_t j = 0; j < X.rows(); ++j) {
      if (alphas[j] == 0.0) continue;
      quad += alphas[i] * alphas[j] * y[i] * y[j] * kernel(X.row(i), X.row(j));
    }
  }
  return lin - 0.5 * quad;
}

SvmFit svm_fit_smo(const Matrix& X, std::span<const int> y, const SvmOptions& options) {
  const std::size_t n = X.rows();
  if (n < 2 || y.size() != n) throw std::invalid_argument("SVM needs at least two labelled rows");
  bool pos = false, neg = false;
  for (int v : y) {
    if (v == 1) pos = true;
    else if (v == -1) neg = true;
    else throw std::invalid_argument("SVM labels must be -1 or +1");
  }
  if (!pos || !neg) throw std::invalid_argument("SVM needs both classes");

  Kernel kernel = options.kernel;
  if (kernel.type == KernelType::rbf && kernel.gamma <= 0.0) kernel.gamma = 1.0 / static_cast<double>(X.cols());
  const double C = options.C;
  const std::size_t max_iter = options.max_iterations ? options.max_iterations : std::max<std::size_t>(10'000'000, 100 * n);

  QMatrix Q(X, y, kernel);
  SvmFit fit;
  std::vector<double>& alpha = fit.alphas;
  alpha.assign(n, 0.0);
  std::vector<double> G(n, -1.0);  // gradient of 1/2 a'Qa - e'a
  std::vector<double> qi, qj;

  auto in_up = [&](std::size_t t) { return (y[t] == 1 && alpha[t] < C) || (y[t] == -1 && alpha[t] > 0); };
  auto in_low = [&](std::size_t t) { return (y[t] == 1 && alpha[t] > 0) || (y[t] == -1 && alpha[t] < C); };
  auto dual = [&] {
    double f = 0.0;
    for (std::size_t t = 0; t < n; ++t) f += alpha[t] * (G[t] - 1.0);
    return -0.5 * f;
  };

  for (;;) {
    std::size_t i = n;
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      if (in_up(t) && -y[t] * G[t] > m) {
        m = -y[t] * G[t];
        i = t;
      }
    }
    double M = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      if (in_low(t)) M = std::min(M, -y[t] * G[t]);
    }
    fit.final_gap = m - M;
    if (i == n || m - M < options.tol) {
      fit.converged = true;
      break;
    }
    if (fit.iterations >= max_iter) break;

    auto Qi = Q.row(i);
    std::size_t j = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      if (!in_low(t)) continue;
      double b = m + y[t] * G[t];
      if (b <= 0) continue;
      double a = Q.diag(i) + Q.diag(t) - 2.0 * y[i] * y[t] * Qi[t];
      if (a <= 0) a = kTau;
      double obj = -(b * b) / a;
      if (obj < best) {
        best = obj;
        j = t;
      }
    }
    if (j == n) break;

    Q.rows(i, j, qi, qj);
    const double old_i = alpha[i], old_j = alpha[j];
    if (y[i] != y[j]) {
      double quad = Q.diag(i) + Q.diag(j) + 2.0 * qi[j];
      if (quad <= 0) quad = kTau;
      double delta = (-G[i] - G[j]) / quad;
      double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = -diff;
      }
      if (diff > 0) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = C - diff;
        }
      } else if (alpha[j] > C) {
        alpha[j] = C;
        alpha[i] = C + diff;
      }
    } else {
      double quad = Q.diag(i) + Q.diag(j) - 2.0 * qi[j];
      if (quad <= 0) quad = kTau;
      double delta = (G[i] - G[j]) / quad;
      double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > C) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = sum - C;
        }
      } else if (alpha[j] < 0) {
        alpha[j] = 0;
        alpha[i] = sum;
      }
      if (sum > C) {
        if (alpha[j] > C) {
          alpha[j] = C;
          alpha[i] = sum - C;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = sum;
      }
    }

    const double di = alpha[i] - old_i, dj = alpha[j] - old_j;
    for (std::size_t t = 0; t < n; ++t) G[t] += qi[t] * di + qj[t] * dj;
    ++fit.iterations;
    if (options.trace_dual) fit.dual_trace.push_back(dual());
  }

  // Bias from free vectors, else the midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity(), lb = -ub, free_sum = 0.0;
  std::size_t free_count = 0;
  for (std::size_t t = 0; t < n; ++t) {
    double yg = y[t] * G[t];
    if (alpha[t] >= C) {
      if (y[t] == -1) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else if (alpha[t] <= 0) {
      if (y[t] == 1) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else {
      ++free_count;
      free_sum += yg;
    }
  }
  double rho = free_count > 0 ? free_sum / static_cast<double>(free_count) : (ub + lb) / 2.0;

  SvmModel& model = fit.model;
  model.kernel = kernel;
  model.C = C;
  model.bias = -rho;
  model.support_vectors = Matrix(0, X.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] <= 0) continue;
    model.support_vectors.append_row(X.row(t));
    model.coefficients.push_back(alpha[t] * y[t]);
  }
  if (kernel.type == KernelType::linear) {
    model.linear_weights.assign(X.cols(), 0.0);
    for (std::size_t s = 0; s < model.coefficients.size(); ++s) {
      auto sv = model.support_vectors.row(s);
      for (std::size_t c = 0; c < X.cols(); ++c) model.linear_weights[c] += model.coefficients[s] * sv[c];
    }
  }
  return fit;
}

}  // namespace tweetcraft::ml
