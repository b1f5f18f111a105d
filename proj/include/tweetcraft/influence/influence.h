#pragma once

#include "tweetcraft/corpus/corpus.h"

namespace tweetcraft::influence {

inline constexpr double kRetweetWeight = 2.0;

// (2 * retweets + favorites) / followers. Throws ValidationError for a
// provisional record (younger than the 21-day maturity window) or an account
// without followers.
double influence_score(const corpus::TweetRecord& record);

}  // namespace tweetcraft::influence
