#pragma once

#include <span>
#include <string>
#include <vector>

#include "tweetcraft/common/error.h"
#include "tweetcraft/corpus/corpus.h"
#include "tweetcraft/corpus/lexicon.h"
#include "tweetcraft/features/decoration.h"
#include "tweetcraft/influence/labeling.h"
#include "tweetcraft/text/annotator.h"

namespace tweetcraft::eval {

struct Example {
  std::string id;
  std::size_t group = 0;
  int label = 0;  // 1 positive, 0 negative
  features::DecorationVector decoration{};
  text::TokenizedTweet tweet;
};

struct Dataset {
  std::vector<Example> examples;

  std::size_t size() const { return examples.size(); }
  std::vector<int> labels() const;
  std::vector<std::size_t> groups() const;
};

// Keeps the records that carry a label, in record order, and featurizes
// them. Labels without a matching record are a ValidationError.
Dataset build_dataset(std::span<const corpus::TweetRecord> records,
                      const std::vector<influence::LabeledExample>& labels, const text::Annotator& annotator,
                      const corpus::SentimentLexicon& lexicon, Diagnostics* diagnostics = nullptr);

}  // namespace tweetcraft::eval
