#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tweetcraft {

// Sorted (index, value) pairs; absent indices are zero.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;
  std::size_t dimension = 0;

  double dot(std::span<const double> dense) const {
    double s = 0.0;
    for (const auto& [i, v] : entries) s += dense[i] * v;
    return s;
  }

  bool operator==(const SparseVector&) const = default;
};

}  // namespace tweetcraft
