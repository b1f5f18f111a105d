#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tweetcraft/common/matrix.h"

namespace tweetcraft::ml {

struct KMeansOptions {
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::size_t max_iter = 300;
  double tol = 1e-6;
  // Independent seedings; the lowest final inertia wins (ties -> earliest).
  std::size_t restarts = 1;
};

struct KMeansModel {
  Matrix centroids;
  double inertia = 0.0;
  std::size_t iterations_run = 0;
  // Inertia after each assignment step of the winning run.
  std::vector<double> inertia_trace;

  // Nearest centroid, Euclidean, ties -> lowest index.
  std::size_t predict(std::span<const double> point) const;
};

struct KMeansResult {
  KMeansModel model;
  std::vector<std::size_t> assignments;
};

// k-means++ seeding followed by Lloyd iterations. Throws std::invalid_argument
// when k < 2 or there are fewer points than clusters.
KMeansResult kmeans_fit(const Matrix& points, const KMeansOptions& options);

// Sum of squared distances from each point to its assigned centroid.
double inertia(const Matrix& points, const Matrix& centroids, std::span<const std::size_t> assignments);

}  // namespace tweetcraft::ml
