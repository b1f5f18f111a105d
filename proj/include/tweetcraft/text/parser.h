#pragma once

#include <cstdint>
#include <span>

#include <json.hpp>

#include "tweetcraft/text/dependency_tree.h"
#include "tweetcraft/text/perceptron.h"
#include "tweetcraft/text/pos_tag.h"
#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::text {

struct ParsedTweet {
  TokenizedTweet tweet;
  TagSequence tags;
  DependencyTree tree;
};

// Arc-standard transitions. Left-arc makes the stack top the head of the item
// below it; right-arc the reverse. A shift with an empty buffer ends the
// parse, and whatever remains on the stack attaches to the virtual root.
enum class Transition : std::size_t { shift = 0, left_arc = 1, right_arc = 2 };

struct ParserModel {
  AveragedPerceptron perceptron{3};
  int epochs = 0;
  std::uint64_t seed = 0;
  // Training sentences whose gold tree the transition system cannot derive
  // (non-projective); these are left out of training.
  std::size_t skipped = 0;

  nlohmann::json to_json() const;
  static ParserModel from_json(const nlohmann::json& j);
};

// Throws ValidationError on an empty corpus, epochs < 1, misaligned input,
// or a gold tree that fails validate_tree.
ParserModel train_parser(std::span<const ParsedTweet> corpus, int epochs, std::uint64_t seed);

// Greedy parse; the result always passes validate_tree.
DependencyTree parse(const ParserModel& model, const TokenizedTweet& tweet, const TagSequence& tags);

// Gold transition sequence for a tree, or nullopt if it is not derivable.
std::optional<std::vector<Transition>> oracle_transitions(const DependencyTree& gold);

}  // namespace tweetcraft::text
