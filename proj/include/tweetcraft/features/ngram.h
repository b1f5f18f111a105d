#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tweetcraft/common/sparse.h"
#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::features {

using tweetcraft::SparseVector;

inline constexpr std::size_t kMaxNGram = 5;

// N-grams of lowercased token texts joined by single spaces.
std::vector<std::string> ngrams(const text::TokenizedTweet& tweet, std::size_t max_n = kMaxNGram);

class NGramVocabulary {
 public:
  std::size_t size() const { return index_.size(); }
  std::size_t min_count() const { return min_count_; }
  const std::unordered_map<std::string, std::uint32_t>& index() const { return index_; }
  std::optional<std::uint32_t> find(const std::string& gram) const;

  friend NGramVocabulary fit_ngram_vocab(std::span<const text::TokenizedTweet> corpus, std::size_t min_count);

 private:
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t min_count_ = 2;
};

// Keeps n-grams (n = 1..5) occurring at least `min_count` times over the
// corpus; columns are assigned in lexicographic order of the n-gram.
NGramVocabulary fit_ngram_vocab(std::span<const text::TokenizedTweet> corpus, std::size_t min_count = 2);

// Binary presence of in-vocabulary n-grams.
SparseVector featurize_ngrams(const NGramVocabulary& vocab, const text::TokenizedTweet& tweet);

}  // namespace tweetcraft::features
