#include "tweetcraft/text/annotator.h"

#include "tweetcraft/common/rng.h"
#include "tweetcraft/text/keywords.h"

namespace tweetcraft::text {

Annotator::Annotator(TaggerModel tagger, ParserModel parser)
    : tagger_(std::move(tagger)), parser_(std::move(parser)) {}

Annotation Annotator::annotate(std::string_view text) const {
  Annotation a;
  a.tweet = tokenize(text);
  a.tags = tag(tagger_, a.tweet);
  a.tree = parse(parser_, a.tweet, a.tags);
  return a;
}

std::set<std::string> Annotator::keywords(std::string_view text) const {
  auto tweet = tokenize(text);
  return keyword_extract(tweet, tag(tagger_, tweet));
}

nlohmann::json Annotator::to_json() const { return {{"tagger", tagger_.to_json()}, {"parser", parser_.to_json()}}; }

Annotator Annotator::from_json(const nlohmann::json& j) {
  return Annotator(TaggerModel::from_json(j.at("tagger")), ParserModel::from_json(j.at("parser")));
}

Annotator train_annotator(std::span<const ParsedTweet> corpus, const NlpTrainingOptions& options) {
  std::vector<TaggedTweet> tagged;
  tagged.reserve(corpus.size());
  for (const auto& p : corpus) tagged.push_back({p.tweet, p.tags});
  auto tagger = train_tagger(tagged, options.tagger_epochs, derive_seed(options.seed, "tagger"));
  auto parser = train_parser(corpus, options.parser_epochs, derive_seed(options.seed, "parser"));
  return Annotator(std::move(tagger), std::move(parser));
}

}  // namespace tweetcraft::text
