#include "tweetcraft/features/embedding.h"

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::features {

std::vector<double> featurize_embedding(const corpus::WordVectorTable& table, const text::TokenizedTweet& tweet) {
  std::vector<double> mean(table.dimension(), 0.0);
  std::size_t hits = 0;
  for (const auto& tok : tweet.tokens) {
    if (tok.kind != text::TokenKind::word) continue;
    const auto* v = table.find(utf8::to_lower_ascii(tok.text));
    if (!v) continue;
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += (*v)[i];
    ++hits;
  }
  if (hits > 0) {
    for (double& x : mean) x /= static_cast<double>(hits);
  }
  return mean;
}

}  // namespace tweetcraft::features
