#include "tweetcraft/ml/kmeans.h"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

namespace tweetcraft::ml {

namespace {

std::size_t nearest(const Matrix& centroids, std::span<const double> point, double* dist_out = nullptr) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.rows(); ++c) {
    double d = squared_distance(centroids.row(c), point);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  if (dist_out) *dist_out = best_d;
  return best;
}

Matrix seed_plus_plus(const Matrix& points, std::size_t k, std::mt19937_64& rng) {
  const std::size_t n = points.rows();
  Matrix centroids(0, points.cols());
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  centroids.append_row(points.row(pick(rng)));

  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (centroids.rows() < k) {
    auto last = centroids.row(centroids.rows() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], squared_distance(points.row(i), last));
      total += d2[i];
    }
    std::size_t chosen = 0;
    if (total > 0.0) {
      double target = unit(rng) * total;
      double acc = 0.0;
      chosen = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (target < acc && d2[i] > 0.0) {
          chosen = i;
          break;
        }
      }
    } else {
      chosen = pick(rng);
    }
    centroids.append_row(points.row(chosen));
  }
  return centroids;
}

struct Run {
  KMeansModel model;
  std::vector<std::size_t> assignments;
};

Run lloyd(const Matrix& points, Matrix centroids, const KMeansOptions& opt) {
  const std::size_t n = points.rows(), d = points.cols(), k = centroids.rows();
  Run run;
  std::vector<std::size_t> assign(n);
  std::vector<double> dist(n);

  for (std::size_t it = 0; it < opt.max_iter; ++it) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      assign[i] = nearest(centroids, points.row(i), &dist[i]);
      total += dist[i];
    }
    if (!run.model.inertia_trace.empty()) {
      double prev = run.model.inertia_trace.back();
      if (total > prev + 1e-9 * (1.0 + prev)) throw std::logic_error("k-means inertia increased");
    }
    run.model.inertia_trace.push_back(total);

    Matrix next(k, d);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto row = next.row(assign[i]);
      auto p = points.row(i);
      for (std::size_t j = 0; j < d; ++j) row[j] += p[j];
      ++counts[assign[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (double& v : next.row(c)) v /= static_cast<double>(counts[c]);
    }
    // Empty clusters take the point farthest from its current centroid; that
    // point then belongs to the new cluster, so a second empty cluster cannot
    // take it again.
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (dist[i] > far_d) {
          far_d = dist[i];
          far = i;
        }
      }
      auto row = next.row(c);
      auto p = points.row(far);
      std::copy(p.begin(), p.end(), row.begin());
      dist[far] = 0.0;
      --counts[assign[far]];
      assign[far] = c;
      counts[c] = 1;
    }

    double shift = 0.0;
    for (std::size_t c = 0; c < k; ++c) shift = std::max(shift, squared_distance(next.row(c), centroids.row(c)));
    centroids = std::move(next);
    run.model.iterations_run = it + 1;
    if (std::sqrt(shift) < opt.tol) break;
  }

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    assign[i] = nearest(centroids, points.row(i), &dist[i]);
    total += dist[i];
  }
  run.model.centroids = std::move(centroids);
  run.model.inertia = total;
  run.assignments = std::move(assign);
  return run;
}

}  // namespace

std::size_t KMeansModel::predict(std::span<const double> point) const { return nearest(centroids, point); }

double inertia(const Matrix& points, const Matrix& centroids, std::span<const std::size_t> assignments) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.rows(); ++i) total += squared_distance(points.row(i), centroids.row(assignments[i]));
  return total;
}

KMeansResult kmeans_fit(const Matrix& points, const KMeansOptions& options) {
  if (options.k < 2) throw std::invalid_argument("k-means needs k >= 2");
  if (points.rows() < options.k) throw std::invalid_argument("k-means needs at least k points");
  std::mt19937_64 rng(options.seed);
  std::optional<Run> best;
  for (std::size_t r = 0; r < std::max<std::size_t>(1, options.restarts); ++r) {
    Run run = lloyd(points, seed_plus_plus(points, options.k, rng), options);
    if (!best || run.model.inertia < best->model.inertia) best = std::move(run);
  }
  return {std::move(best->model), std::move(best->assignments)};
}

}  // namespace tweetcraft::ml
