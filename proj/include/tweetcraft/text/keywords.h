#pragma once

#include <set>
#include <string>

#include "tweetcraft/text/pos_tag.h"
#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::text {

// Lowercased word tokens tagged noun, proper noun, verb, adjective or adverb.
// Hashtags, mentions and URLs never count, whatever their tag.
std::set<std::string> keyword_extract(const TokenizedTweet& tweet, const TagSequence& tags);

}  // namespace tweetcraft::text
