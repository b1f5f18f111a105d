#include "tweetcraft/influence/influence.h"

namespace tweetcraft::influence {

double influence_score(const corpus::TweetRecord& record) {
  if (!record.is_final()) {
    throw ValidationError("record " + record.id +
                          " is provisional: reaction counts are final only 21 days after posting (21-day rule)");
  }
  if (record.account.follower_count == 0) {
    throw ValidationError("record " + record.id + " is unscorable: follower_count is 0");
  }
  return (kRetweetWeight * static_cast<double>(record.retweet_count) + static_cast<double>(record.favorite_count)) /
         static_cast<double>(record.account.follower_count);
}

}  // namespace tweetcraft::influence
