#include "tweetcraft/text/dependency_tree.h"

#include <algorithm>
#include <stdexcept>

namespace tweetcraft::text {

std::optional<std::string> validate_tree(const DependencyTree& tree) {
  const int n = static_cast<int>(tree.size());
  if (n == 0) return std::nullopt;
  bool has_root = false;
  for (int i = 0; i < n; ++i) {
    int h = tree.heads[static_cast<std::size_t>(i)];
    if (h < 0 || h > n) return "token " + std::to_string(i + 1) + " has head " + std::to_string(h) + " out of range";
    if (h == i + 1) return "token " + std::to_string(i + 1) + " is its own head";
    has_root = has_root || h == 0;
  }
  if (!has_root) return std::string("no token attaches to the root");
  // Walking up from every token must reach the root within n steps.
  for (int i = 1; i <= n; ++i) {
    int node = i;
    for (int steps = 0; node != 0; ++steps) {
      if (steps > n) return "cycle through token " + std::to_string(i);
      node = tree.heads[static_cast<std::size_t>(node - 1)];
    }
  }
  return std::nullopt;
}

double tree_depth(const DependencyTree& tree) {
  const std::size_t n = tree.size();
  if (n == 0) return 0.0;
  if (auto err = validate_tree(tree)) throw std::invalid_argument("tree_depth: " + *err);
  std::vector<int> depth(n + 1, 0);
  int max_depth = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    int d = 0;
    for (int node = static_cast<int>(i); node != 0; node = tree.heads[static_cast<std::size_t>(node - 1)]) ++d;
    depth[i] = d;
    max_depth = std::max(max_depth, d);
  }
  return static_cast<double>(max_depth) / static_cast<double>(n);
}

double head_count(const DependencyTree& tree) {
  const std::size_t n = tree.size();
  if (n == 0) return 0.0;
  auto roots = std::count(tree.heads.begin(), tree.heads.end(), 0);
  return static_cast<double>(roots) / static_cast<double>(n);
}

bool is_projective(const DependencyTree& tree) {
  const int n = static_cast<int>(tree.size());
  for (int a = 1; a <= n; ++a) {
    int ha = tree.heads[static_cast<std::size_t>(a - 1)];
    int lo_a = std::min(a, ha), hi_a = std::max(a, ha);
    for (int b = 1; b <= n; ++b) {
      int hb = tree.heads[static_cast<std::size_t>(b - 1)];
      int lo_b = std::min(b, hb), hi_b = std::max(b, hb);
      if (lo_a < lo_b && lo_b < hi_a && hi_a < hi_b) return false;
    }
  }
  return true;
}

}  // namespace tweetcraft::text
