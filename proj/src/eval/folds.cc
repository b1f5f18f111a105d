#include "tweetcraft/eval/folds.h"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace tweetcraft::eval {

std::vector<std::size_t> FoldSplit::train_indices(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < folds.size(); ++g) {
    if (g != f) out.insert(out.end(), folds[g].begin(), folds[g].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> FoldSplit::test_indices(std::size_t f) const {
  auto out = folds[f];
  std::sort(out.begin(), out.end());
  return out;
}

FoldSplit kfold_split(std::span<const int> labels, std::span<const std::size_t> groups, std::uint64_t seed,
                      std::size_t k) {
  if (labels.size() != groups.size()) throw std::invalid_argument("labels and groups differ in length");
  if (k < 2) throw std::invalid_argument("need at least two folds");
  std::size_t pos = std::count_if(labels.begin(), labels.end(), [](int y) { return y != 0; });
  std::size_t neg = labels.size() - pos;
  if (pos < k || neg < k) {
    throw std::invalid_argument("stratified " + std::to_string(k) + "-fold split needs at least " + std::to_string(k) +
                                " examples per class (have " + std::to_string(pos) + " positive, " +
                                std::to_string(neg) + " negative)");
  }

  std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < labels.size(); ++i) strata[{groups[i], labels[i] != 0 ? 1 : 0}].push_back(i);

  FoldSplit split;
  split.seed = seed;
  split.folds.resize(k);
  std::mt19937_64 rng(seed);
  std::size_t next = 0;
  for (auto& [key, members] : strata) {
    std::shuffle(members.begin(), members.end(), rng);
    for (auto i : members) split.folds[next++ % k].push_back(i);
  }
  return split;
}

}  // namespace tweetcraft::eval
