#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tweetcraft::eval {

struct FoldSplit {
  std::vector<std::vector<std::size_t>> folds;
  std::uint64_t seed = 0;

  // Indices outside fold `f`, ascending.
  std::vector<std::size_t> train_indices(std::size_t f) const;
  // Indices of fold `f`, ascending.
  std::vector<std::size_t> test_indices(std::size_t f) const;
};

// Stratified by (group, label): each stratum is shuffled and dealt
// round-robin, with the dealing position carried over from one stratum to the
// next so fold sizes differ by at most one. Throws std::invalid_argument when
// either class has fewer than `k` examples.
FoldSplit kfold_split(std::span<const int> labels, std::span<const std::size_t> groups, std::uint64_t seed,
                      std::size_t k = 5);

}  // namespace tweetcraft::eval
