#pragma once

#include <array>

#include "tweetcraft/common/error.h"
#include "tweetcraft/corpus/corpus.h"
#include "tweetcraft/corpus/lexicon.h"
#include "tweetcraft/features/schema.h"
#include "tweetcraft/text/annotator.h"
#include "tweetcraft/text/dependency_tree.h"
#include "tweetcraft/text/pos_tag.h"
#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::features {

using DecorationVector = std::array<double, kDecorationDims>;

// Coleman-Liau index over word and hashtag tokens:
//   0.0588 * L - 0.296 * S - 15.8
// with L letters and S sentences per 100 words. A sentence is a run of
// '.', '!' or '?' (at least one when there is a word). No words -> 0.
double coleman_liau(const text::TokenizedTweet& tweet);

// Sum of lexicon scores of word tokens divided by the total token count.
double sentiment_score(const text::TokenizedTweet& tweet, const corpus::SentimentLexicon& lexicon);

// Shares of (noun, descriptor, verb) among tokens in those three categories;
// all zero when there are none.
std::array<double, 3> pos_distribution(const text::TagSequence& tags);

// Builds the full decoration vector. A mention token without a matching
// mentions_meta entry counts as unverified with 0 followers and adds a
// diagnostic to `diagnostics` when given.
DecorationVector extract_decoration(const corpus::TweetRecord& record, const text::TokenizedTweet& tweet,
                                    const text::TagSequence& tags, const text::DependencyTree& tree,
                                    const corpus::SentimentLexicon& lexicon, Diagnostics* diagnostics = nullptr);

// Annotates the record text and extracts its decoration vector.
DecorationVector extract_decoration(const corpus::TweetRecord& record, const text::Annotator& annotator,
                                    const corpus::SentimentLexicon& lexicon, Diagnostics* diagnostics = nullptr);

// Zeroes every column that belongs to a family not in `keep`.
void mask_families(DecorationVector& vec, const std::vector<Family>& keep);

}  // namespace tweetcraft::features
