#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support/fixtures.h"
#include "support/oracles.h"
#include "tweetcraft/features/decoration.h"
#include "tweetcraft/features/embedding.h"
#include "tweetcraft/features/export.h"
#include "tweetcraft/features/ngram.h"
#include "tweetcraft/features/schema.h"
#include "tweetcraft/text/conll.h"
#include "tweetcraft/text/tokenizer.h"

using namespace tweetcraft;
using namespace tweetcraft::features;
using text::PosTag;
using text::tokenize;
using tweetcraft::testing::at;
using tweetcraft::testing::make_record;

namespace {

DecorationVector decorate(const corpus::TweetRecord& r, const corpus::SentimentLexicon& lex = {},
                          Diagnostics* diags = nullptr) {
  auto tw = tokenize(r.text);
  text::TagSequence tags(tw.size(), PosTag::other);
  text::DependencyTree tree{std::vector<int>(tw.size(), 0)};
  return extract_decoration(r, tw, tags, tree, lex, diags);
}

}  // namespace

TEST_CASE("coleman-liau hand computations") {
  // 5 words, 15 letters, 1 sentence: L = 300, S = 20.
  CHECK(coleman_liau(tokenize("abc def ghi jkl mno.")) == doctest::Approx(-4.08).epsilon(1e-12));
  CHECK(std::abs(coleman_liau(tokenize("abc def ghi jkl mno.")) - (-4.08)) < 1e-9);
  // One word, five letters, one sentence: L = 500, S = 100.
  CHECK(std::abs(coleman_liau(tokenize("Hello")) - (-16.0)) < 1e-9);
  CHECK(coleman_liau(tokenize("")) == 0.0);
  CHECK(coleman_liau(tokenize("!!! ...")) == 0.0);
  // A run of terminals is one sentence; a hashtag body counts as a word.
  CHECK(std::abs(coleman_liau(tokenize("#abcde?!")) - coleman_liau(tokenize("Hello"))) < 1e-9);
}

TEST_CASE("sentiment score hand computations") {
  corpus::SentimentLexicon lex;
  lex.set("good", 3);
  lex.set("great", 3);
  lex.set("awful", -3);
  CHECK(std::abs(sentiment_score(text::from_tokens({"good", "good", "day"}), lex) - 2.0) < 1e-9);
  CHECK(sentiment_score(tokenize("plain day"), lex) == 0.0);
  CHECK(sentiment_score(tokenize("great awful"), lex) == 0.0);
  CHECK(sentiment_score(tokenize(""), lex) == 0.0);
  // Divides by every token, element tokens included.
  CHECK(std::abs(sentiment_score(tokenize("Good @x !"), lex) - 1.0) < 1e-9);
}

TEST_CASE("pos distribution hand computations") {
  auto d = pos_distribution({PosTag::common_noun, PosTag::verb, PosTag::adjective, PosTag::common_noun});
  CHECK(std::abs(d[0] - 0.5) < 1e-9);
  CHECK(std::abs(d[1] - 0.25) < 1e-9);
  CHECK(std::abs(d[2] - 0.25) < 1e-9);
  CHECK(pos_distribution({PosTag::other, PosTag::punct}) == std::array<double, 3>{0, 0, 0});
  CHECK(pos_distribution({PosTag::common_noun, PosTag::proper_noun, PosTag::punct, PosTag::url}) ==
        std::array<double, 3>{1, 0, 0});
}

TEST_CASE("time features use local time") {
  auto r = make_record("a", "x");
  r.posted_at = at(2016, 3, 1, 14, 30);  // a Tuesday
  r.account.snapshot_at = r.posted_at;
  auto v = decorate(r);
  for (std::size_t i = 0; i < 7; ++i) CHECK(v[col::day_of_week + i] == (i == 1 ? 1.0 : 0.0));
  for (std::size_t i = 0; i < 4; ++i) CHECK(v[col::time_of_day + i] == (i == 2 ? 1.0 : 0.0));

  // 23:30 UTC Monday at +01:00 is Tuesday 00:30 local.
  r.posted_at = at(2016, 2, 29, 23, 30);
  r.utc_offset_minutes = 60;
  v = decorate(r);
  CHECK(v[col::day_of_week + 1] == 1.0);
  CHECK(v[col::time_of_day + 0] == 1.0);
}

TEST_CASE("author meta ratios") {
  auto r = make_record("a", "x", 0, 0, 10000);
  r.account.post_count = 1000;
  r.account.favorite_count = 300;
  r.account.listed_count = 50;
  r.account.registered_at = r.posted_at - std::chrono::days{500};
  auto v = decorate(r);
  CHECK(std::abs(v[col::posts_per_day] - 2.0) < 1e-9);
  CHECK(std::abs(v[col::favorites_per_post] - 0.3) < 1e-9);
  CHECK(std::abs(v[col::listed_per_follower] - 0.005) < 1e-9);

  r.account.registered_at = r.posted_at;
  r.account.post_count = 0;
  r.account.follower_count = 0;
  v = decorate(r);
  CHECK(v[col::posts_per_day] == 0.0);
  CHECK(v[col::favorites_per_post] == 300.0);
  CHECK(v[col::listed_per_follower] == 50.0);
}

TEST_CASE("mention features") {
  auto r = make_record("a", "Thanks @Alpha and @beta!");
  r.mentions_meta = {{"alpha", false, 100}, {"Beta", true, 300}};
  Diagnostics diags;
  auto v = decorate(r, {}, &diags);
  CHECK(diags.empty());
  CHECK(v[col::has_mention] == 1.0);
  CHECK(v[col::mention_verified] == 1.0);
  CHECK(std::abs(v[col::mention_followers] - std::log10(201.0)) < 1e-9);
  CHECK(v[col::has_exclamation] == 1.0);
  CHECK(v[col::has_question] == 0.0);

  auto missing = make_record("b", "hi @ghost");
  v = decorate(missing, {}, &diags);
  CHECK(diags.size() == 1);
  CHECK(v[col::mention_verified] == 0.0);
  CHECK(v[col::mention_followers] == 0.0);
}

TEST_CASE("element, punctuation and digit flags") {
  auto v = decorate(make_record("a", "Win $5 at http://t.co/x #deal ok?!"));
  CHECK(v[col::has_url] == 1.0);
  CHECK(v[col::has_hashtag] == 1.0);
  CHECK(v[col::has_digit] == 1.0);
  CHECK(v[col::has_question] == 1.0);
  CHECK(v[col::has_exclamation] == 1.0);
  CHECK(v[col::length] == 7.0);
  // Digits inside a URL or hashtag do not count.
  v = decorate(make_record("b", "http://t.co/123 #2016"));
  CHECK(v[col::has_digit] == 0.0);
}

TEST_CASE("schema families partition the 30 columns") {
  const auto& schema = FeatureSchema::decoration();
  CHECK(schema.size() == kDecorationDims);
  std::vector<int> covered(kDecorationDims, 0);
  for (auto f : kAllFamilies) {
    for (auto c : schema.columns(f)) ++covered[c];
  }
  for (int c : covered) CHECK(c == 1);
  CHECK(schema.index_of("has_exclamation") == col::has_exclamation);
  CHECK(schema.columns(Family::post_meta).size() == 11);
  CHECK(parse_family("pos_dist") == Family::pos_dist);
  CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("decoration invariants on fuzzed records") {
  const auto& ann = tweetcraft::testing::sample_annotator();
  std::mt19937_64 rng(21);
  static const std::vector<std::string> words = {"Get", "deals", "@shop", "#sale", "now", "!", "?", "50%", "great",
                                                 "http://t.co/x", "the", "new", "\xF0\x9F\x98\x80", "."};
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (std::size_t i = 0, n = rng() % 20; i < n; ++i) text += words[rng() % words.size()] + " ";
    auto r = make_record("f" + std::to_string(trial), text);
    r.posted_at += std::chrono::minutes{rng() % 100000};
    r.account.snapshot_at = r.posted_at;
    r.utc_offset_minutes = static_cast<int>(rng() % 1441) - 720;
    auto v = extract_decoration(r, ann, {});
    double day = 0, period = 0;
    for (std::size_t i = 0; i < 7; ++i) day += v[col::day_of_week + i];
    for (std::size_t i = 0; i < 4; ++i) period += v[col::time_of_day + i];
    CHECK(day == 1.0);
    CHECK(period == 1.0);
    double pos = v[col::pos_noun] + v[col::pos_descriptor] + v[col::pos_verb];
    CHECK((pos == 0.0 || std::abs(pos - 1.0) < 1e-12));
    for (auto c : {col::has_mention, col::has_url, col::has_hashtag, col::mention_verified, col::has_question,
                   col::has_exclamation, col::has_digit}) {
      CHECK((v[c] == 0.0 || v[c] == 1.0));
    }
    CHECK(v[col::length] >= 0.0);
    CHECK(extract_decoration(r, ann, {}) == v);
  }
}

TEST_CASE("family masking zeroes the other columns") {
  DecorationVector v;
  v.fill(1.0);
  mask_families(v, {Family::punctuation});
  const auto& schema = FeatureSchema::decoration();
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == (schema[i].family == Family::punctuation ? 1.0 : 0.0));
}

TEST_CASE("n-gram vocabulary threshold") {
  std::vector<text::TokenizedTweet> twice{tokenize("a b"), tokenize("a b")};
  auto vocab = fit_ngram_vocab(twice);
  CHECK(vocab.size() == 3);
  CHECK(vocab.find("a") == 0u);
  CHECK(vocab.find("a b") == 1u);
  CHECK(vocab.find("b") == 2u);

  std::vector<text::TokenizedTweet> once{tokenize("a b"), tokenize("c d")};
  CHECK(fit_ngram_vocab(once).size() == 0);

  auto x = featurize_ngrams(vocab, tokenize("A b"));
  CHECK(x.dimension == 3);
  CHECK(x.entries == std::vector<std::pair<std::uint32_t, double>>{{0, 1.0}, {1, 1.0}, {2, 1.0}});
  CHECK(featurize_ngrams(vocab, tokenize("z")).entries.empty());
}

TEST_CASE("n-gram vocabulary matches a brute-force counter") {
  std::mt19937_64 rng(4);
  static const std::vector<std::string> words = {"Buy", "buy", "now", "deal", "!", "@x", "#y", "50%"};
  std::vector<text::TokenizedTweet> corpus;
  std::vector<std::vector<std::string>> docs;
  for (int i = 0; i < 60; ++i) {
    std::vector<std::string> toks;
    for (std::size_t k = 0, n = 1 + rng() % 9; k < n; ++k) toks.push_back(words[rng() % words.size()]);
    docs.push_back(toks);
    corpus.push_back(text::from_tokens(toks));
  }
  auto counts = oracle::count_ngrams(docs);
  auto vocab = fit_ngram_vocab(corpus);
  std::size_t expected = 0;
  for (const auto& [gram, n] : counts) {
    if (n >= 2) {
      ++expected;
      CHECK_MESSAGE(vocab.find(gram).has_value(), gram);
    } else {
      CHECK_FALSE(vocab.find(gram).has_value());
    }
  }
  CHECK(vocab.size() == expected);

  // Re-featurizing the fitting corpus counts each vocabulary entry at least twice.
  std::vector<std::size_t> seen(vocab.size(), 0);
  for (const auto& tw : corpus) {
    auto x = featurize_ngrams(vocab, tw);
    for (std::size_t i = 1; i < x.entries.size(); ++i) CHECK(x.entries[i - 1].first < x.entries[i].first);
    for (const auto& [idx, val] : x.entries) {
      REQUIRE(idx < vocab.size());
      CHECK(val == 1.0);
      ++seen[idx];
    }
  }
  for (auto s : seen) CHECK(s >= 1);
  for (const auto& [gram, idx] : vocab.index()) CHECK(counts.at(gram) >= 2);
}

TEST_CASE("embedding averages in-vocabulary words") {
  corpus::WordVectorTable table(2);
  table.add("a", {1, 0});
  table.add("b", {0, 1});
  CHECK(featurize_embedding(table, tokenize("a b")) == std::vector<double>{0.5, 0.5});
  CHECK(featurize_embedding(table, tokenize("c d")) == std::vector<double>{0, 0});
  CHECK(featurize_embedding(table, tokenize("a a")) == std::vector<double>{1, 0});
  CHECK(featurize_embedding(table, tokenize("A #b !")) == std::vector<double>{1, 0});
}

TEST_CASE("decoration csv export") {
  DecorationVector v{};
  v[col::length] = 3;
  std::ostringstream out;
  write_decoration_csv(out, {"x"}, {v});
  auto text = out.str();
  CHECK(text.rfind("id,length,readability,", 0) == 0);
  CHECK(text.find("\nx,3,0,") != std::string::npos);
}
