#include "tweetcraft/eval/dataset.h"

#include <unordered_map>

namespace tweetcraft::eval {

std::vector<int> Dataset::labels() const {
  std::vector<int> out;
  out.reserve(examples.size());
  for (const auto& e : examples) out.push_back(e.label);
  return out;
}

std::vector<std::size_t> Dataset::groups() const {
  std::vector<std::size_t> out;
  out.reserve(examples.size());
  for (const auto& e : examples) out.push_back(e.group);
  return out;
}

Dataset build_dataset(std::span<const corpus::TweetRecord> records,
                      const std::vector<influence::LabeledExample>& labels, const text::Annotator& annotator,
                      const corpus::SentimentLexicon& lexicon, Diagnostics* diagnostics) {
  std::unordered_map<std::string, const influence::LabeledExample*> by_id;
  for (const auto& l : labels) {
    if (l.label) by_id.emplace(l.id, &l);
  }
  Dataset ds;
  std::size_t matched = 0;
  for (const auto& r : records) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) continue;
    ++matched;
    auto a = annotator.annotate(r.text);
    Example e;
    e.id = r.id;
    e.group = it->second->group;
    e.label = *it->second->label == influence::Label::positive ? 1 : 0;
    e.decoration = features::extract_decoration(r, a.tweet, a.tags, a.tree, lexicon, diagnostics);
    e.tweet = std::move(a.tweet);
    ds.examples.push_back(std::move(e));
  }
  if (matched != by_id.size()) {
    throw ValidationError(std::to_string(by_id.size() - matched) + " labeled id(s) have no record in the corpus");
  }
  return ds;
}

}  // namespace tweetcraft::eval
