#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tweetcraft/common/matrix.h"

namespace tweetcraft::ml {

enum class KernelType { linear, rbf };

struct Kernel {
  KernelType type = KernelType::rbf;
  double gamma = 0.0;  // rbf only; non-positive means 1 / d at fit time

  double operator()(std::span<const double> u, std::span<const double> v) const;
};

std::string_view to_string(KernelType type);

struct SvmOptions {
  double C = 1.0;
  Kernel kernel;
  double tol = 1e-3;
  // Upper bound on pair updates; 0 picks max(10'000'000, 100 n).
  std::size_t max_iterations = 0;
  // Record the dual objective after every accepted pair update.
  bool trace_dual = false;
};

struct SvmModel {
  Kernel kernel;
  double C = 1.0;
  Matrix support_vectors;
  std::vector<double> coefficients;  // alpha_i * y_i
  double bias = 0.0;
  // Linear kernel only: sum of coefficients * support vectors.
  std::vector<double> linear_weights;

  double margin(std::span<const double> x) const;
  int predict(std::span<const double> x) const { return margin(x) >= 0.0 ? 1 : -1; }
};

struct SvmFit {
  SvmModel model;
  std::vector<double> alphas;  // one per training row
  std::size_t iterations = 0;
  // m(alpha) - M(alpha) of the maximal violating pair at exit.
  double final_gap = 0.0;
  bool converged = false;
  std::vector<double> dual_trace;
};

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
double svm_dual_objective(const Matrix& X, std::span<const int> y, std::span<const double> alphas,
                          const Kernel& kernel);

// SMO with maximal-violating-pair / second-order working set selection.
// Labels are -1/+1. Throws std::invalid_argument on single-class input.
SvmFit svm_fit_smo(const Matrix& X, std::span<const int> y, const SvmOptions& options);

}  // namespace tweetcraft::ml
