#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tweetcraft::text {

// heads[i] is the head of token i+1 (1-based); 0 is the virtual root. Several
// tokens may attach to the root, one per independent fragment.
struct DependencyTree {
  std::vector<int> heads;

  std::size_t size() const { return heads.size(); }
  bool operator==(const DependencyTree&) const = default;
};

// Reason the tree is invalid (head out of range, cycle, no root token), or
// nullopt when valid. An empty tree is valid.
std::optional<std::string> validate_tree(const DependencyTree& tree);

// Node count on the longest path from a root token, divided by the token
// count. 0 for an empty tree.
double tree_depth(const DependencyTree& tree);
// Fraction of tokens attached to the virtual root. 0 for an empty tree.
double head_count(const DependencyTree& tree);

// True when no two arcs cross (arcs from the virtual root included).
bool is_projective(const DependencyTree& tree);

}  // namespace tweetcraft::text
