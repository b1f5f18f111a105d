#pragma once

#include <vector>

#include "tweetcraft/corpus/word_vectors.h"
#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::features {

// Mean vector of the in-vocabulary lowercased word tokens; zeros if none.
std::vector<double> featurize_embedding(const corpus::WordVectorTable& table, const text::TokenizedTweet& tweet);

}  // namespace tweetcraft::features
