#pragma once

#include <cstdint>
#include <span>

#include <json.hpp>

#include "tweetcraft/text/perceptron.h"
#include "tweetcraft/text/pos_tag.h"
#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::text {

struct TaggedTweet {
  TokenizedTweet tweet;
  TagSequence tags;
};

struct TaggerModel {
  AveragedPerceptron perceptron{kLearnedTagCount};
  int epochs = 0;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static TaggerModel from_json(const nlohmann::json& j);
};

// Greedy left-to-right averaged perceptron. Sentence order is shuffled once
// per epoch with `seed`. Throws ValidationError on an empty corpus, epochs
// < 1, or misaligned tags.
TaggerModel train_tagger(std::span<const TaggedTweet> corpus, int epochs, std::uint64_t seed);

TagSequence tag(const TaggerModel& model, const TokenizedTweet& tweet);

// Feature strings for token `i` given the previously assigned tag.
std::vector<std::string> tagger_features(const TokenizedTweet& tweet, std::size_t i, PosTag previous);

}  // namespace tweetcraft::text
