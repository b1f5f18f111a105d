#include "tweetcraft/text/tagger.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "tweetcraft/common/error.h"
#include "tweetcraft/common/utf8.h"

namespace tweetcraft::text {
namespace {

constexpr std::array<std::size_t, kLearnedTagCount> kLearned = {0, 1, 2, 3, 4, 5};

std::string lower_text(const TokenizedTweet& t, std::ptrdiff_t i) {
  if (i < 0) return "<s>";
  if (static_cast<std::size_t>(i) >= t.tokens.size()) return "</s>";
  return utf8::to_lower_ascii(t.tokens[static_cast<std::size_t>(i)].text);
}

PosTag previous_tag(const TagSequence& tags, std::size_t i) { return i == 0 ? PosTag::other : tags[i - 1]; }

// Tags the learner may be trained towards: element tags on word tokens fall
// back to `other`.
std::size_t learnable(PosTag tag) {
  auto idx = static_cast<std::size_t>(tag);
  return idx < kLearnedTagCount ? idx : static_cast<std::size_t>(PosTag::other);
}

}  // namespace

std::vector<std::string> tagger_features(const TokenizedTweet& tweet, std::size_t i, PosTag previous) {
  const Token& tok = tweet.tokens[i];
  std::string word = utf8::to_lower_ascii(tok.text);
  std::vector<std::string> f;
  f.reserve(16);
  f.emplace_back("bias");
  f.push_back("w=" + word);
  for (std::size_t n = 1; n <= 3; ++n) {
    f.push_back("p" + std::to_string(n) + "=" + utf8::prefix(word, n));
    f.push_back("s" + std::to_string(n) + "=" + utf8::suffix(word, n));
  }
  if (std::any_of(tok.text.begin(), tok.text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    f.emplace_back("digit");
  }
  if (tok.text.find('-') != std::string::npos) f.emplace_back("hyphen");
  f.push_back("kind=" + std::string(to_string(tok.kind)));
  auto idx = static_cast<std::ptrdiff_t>(i);
  f.push_back("w-1=" + lower_text(tweet, idx - 1));
  f.push_back("w+1=" + lower_text(tweet, idx + 1));
  f.push_back("t-1=" + std::string(tag_code(previous)));
  return f;
}

TaggerModel train_tagger(std::span<const TaggedTweet> corpus, int epochs, std::uint64_t seed) {
  if (corpus.empty()) throw ValidationError("cannot train a tagger on an empty corpus");
  if (epochs < 1) throw ValidationError("tagger epochs must be at least 1");
  for (const auto& ex : corpus) {
    if (ex.tags.size() != ex.tweet.tokens.size()) throw ValidationError("gold tags not aligned with tokens");
  }

  TaggerModel model;
  model.epochs = epochs;
  model.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t idx : order) {
      const auto& ex = corpus[idx];
      TagSequence predicted;
      predicted.reserve(ex.tags.size());
      for (std::size_t i = 0; i < ex.tweet.tokens.size(); ++i) {
        if (auto forced = forced_tag(ex.tweet.tokens[i].kind)) {
          predicted.push_back(*forced);
          continue;
        }
        auto features = tagger_features(ex.tweet, i, previous_tag(predicted, i));
        std::size_t guess = model.perceptron.predict(features, kLearned);
        model.perceptron.observe(features, learnable(ex.tags[i]), guess);
        predicted.push_back(static_cast<PosTag>(guess));
      }
    }
  }
  model.perceptron.average();
  return model;
}

TagSequence tag(const TaggerModel& model, const TokenizedTweet& tweet) {
  TagSequence tags;
  tags.reserve(tweet.tokens.size());
  for (std::size_t i = 0; i < tweet.tokens.size(); ++i) {
    if (auto forced = forced_tag(tweet.tokens[i].kind)) {
      tags.push_back(*forced);
      continue;
    }
    auto features = tagger_features(tweet, i, previous_tag(tags, i));
    tags.push_back(static_cast<PosTag>(model.perceptron.predict(features, kLearned)));
  }
  return tags;
}

nlohmann::json TaggerModel::to_json() const {
  return {{"epochs", epochs}, {"seed", seed}, {"perceptron", perceptron.to_json()}};
}

TaggerModel TaggerModel::from_json(const nlohmann::json& j) {
  TaggerModel m;
  m.epochs = j.at("epochs").get<int>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.perceptron = AveragedPerceptron::from_json(j.at("perceptron"));
  return m;
}

}  // namespace tweetcraft::text
