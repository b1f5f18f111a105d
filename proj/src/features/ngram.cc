#include "tweetcraft/features/ngram.h"

#include <algorithm>
#include <map>

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::features {

std::vector<std::string> ngrams(const text::TokenizedTweet& tweet, std::size_t max_n) {
  std::vector<std::string> lowered;
  lowered.reserve(tweet.tokens.size());
  for (const auto& t : tweet.tokens) lowered.push_back(utf8::to_lower_ascii(t.text));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < lowered.size(); ++i) {
    std::string gram;
    for (std::size_t n = 1; n <= max_n && i + n <= lowered.size(); ++n) {
      if (n > 1) gram.push_back(' ');
      gram += lowered[i + n - 1];
      out.push_back(gram);
    }
  }
  return out;
}

std::optional<std::uint32_t> NGramVocabulary::find(const std::string& gram) const {
  auto it = index_.find(gram);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NGramVocabulary fit_ngram_vocab(std::span<const text::TokenizedTweet> corpus, std::size_t min_count) {
  std::map<std::string, std::size_t> counts;
  for (const auto& tweet : corpus) {
    for (auto& g : ngrams(tweet)) ++counts[std::move(g)];
  }
  NGramVocabulary vocab;
  vocab.min_count_ = min_count;
  std::uint32_t next = 0;
  for (const auto& [gram, count] : counts) {
    if (count >= min_count) vocab.index_.emplace(gram, next++);
  }
  return vocab;
}

SparseVector featurize_ngrams(const NGramVocabulary& vocab, const text::TokenizedTweet& tweet) {
  SparseVector v;
  v.dimension = vocab.size();
  for (const auto& g : ngrams(tweet)) {
    if (auto idx = vocab.find(g)) v.entries.emplace_back(*idx, 1.0);
  }
  std::sort(v.entries.begin(), v.entries.end());
  v.entries.erase(std::unique(v.entries.begin(), v.entries.end()), v.entries.end());
  return v;
}

}  // namespace tweetcraft::features
