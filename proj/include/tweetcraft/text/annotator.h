#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tweetcraft/text/parser.h"
#include "tweetcraft/text/tagger.h"

namespace tweetcraft::text {

struct Annotation {
  TokenizedTweet tweet;
  TagSequence tags;
  DependencyTree tree;
};

// Trained tagger + parser pair; immutable once built and safe to share.
class Annotator {
 public:
  Annotator(TaggerModel tagger, ParserModel parser);

  Annotation annotate(std::string_view text) const;
  std::set<std::string> keywords(std::string_view text) const;

  const TaggerModel& tagger() const { return tagger_; }
  const ParserModel& parser() const { return parser_; }

  nlohmann::json to_json() const;
  static Annotator from_json(const nlohmann::json& j);

 private:
  TaggerModel tagger_;
  ParserModel parser_;
};

struct NlpTrainingOptions {
  int tagger_epochs = 8;
  int parser_epochs = 10;
  std::uint64_t seed = 0;
};

Annotator train_annotator(std::span<const ParsedTweet> corpus, const NlpTrainingOptions& options);

}  // namespace tweetcraft::text
