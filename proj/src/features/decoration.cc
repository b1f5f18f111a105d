#include "tweetcraft/features/decoration.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::features {
namespace {

using text::PosTag;
using text::TokenKind;

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

std::size_t count_letters(std::string_view word) {
  std::size_t letters = 0;
  for (std::size_t pos = 0, len = 0; pos < word.size(); pos += len) {
    if (utf8::is_letter(utf8::decode(word, pos, len))) ++letters;
  }
  return letters;
}

bool has_ascii_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

double ratio(double num, double den) { return num / std::max(1.0, den); }

}  // namespace

double coleman_liau(const text::TokenizedTweet& tweet) {
  std::size_t words = 0, letters = 0, sentences = 0;
  for (const auto& tok : tweet.tokens) {
    if (tok.kind == TokenKind::word || tok.kind == TokenKind::hashtag) {
      ++words;
      letters += count_letters(tok.text);
    } else if (tok.kind == TokenKind::punctuation) {
      bool in_run = false;
      for (char c : tok.text) {
        if (is_terminal(c) && !in_run) ++sentences;
        in_run = is_terminal(c);
      }
    }
  }
  if (words == 0) return 0.0;
  sentences = std::max<std::size_t>(sentences, 1);
  double L = 100.0 * static_cast<double>(letters) / static_cast<double>(words);
  double S = 100.0 * static_cast<double>(sentences) / static_cast<double>(words);
  return 0.0588 * L - 0.296 * S - 15.8;
}

double sentiment_score(const text::TokenizedTweet& tweet, const corpus::SentimentLexicon& lexicon) {
  if (tweet.tokens.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& tok : tweet.tokens) {
    if (tok.kind != TokenKind::word) continue;
    if (auto s = lexicon.score(tok.text)) sum += *s;
  }
  return sum / static_cast<double>(tweet.tokens.size());
}

std::array<double, 3> pos_distribution(const text::TagSequence& tags) {
  double noun = 0, descriptor = 0, verb = 0;
  for (PosTag t : tags) {
    if (t == PosTag::common_noun || t == PosTag::proper_noun) noun += 1;
    if (t == PosTag::adjective || t == PosTag::adverb) descriptor += 1;
    if (t == PosTag::verb) verb += 1;
  }
  double total = noun + descriptor + verb;
  if (total == 0) return {0.0, 0.0, 0.0};
  return {noun / total, descriptor / total, verb / total};
}

DecorationVector extract_decoration(const corpus::TweetRecord& record, const text::TokenizedTweet& tweet,
                                    const text::TagSequence& tags, const text::DependencyTree& tree,
                                    const corpus::SentimentLexicon& lexicon, Diagnostics* diagnostics) {
  if (tags.size() != tweet.size() || tree.size() != tweet.size()) {
    throw std::invalid_argument("extract_decoration: annotations not aligned with tokens");
  }
  DecorationVector v{};

  v[col::length] = static_cast<double>(tweet.size());
  v[col::readability] = coleman_liau(tweet);
  v[col::parse_depth] = text::tree_depth(tree);
  v[col::head_count] = text::head_count(tree);

  std::vector<std::string> mentioned;
  for (const auto& tok : tweet.tokens) {
    switch (tok.kind) {
      case TokenKind::mention: {
        v[col::has_mention] = 1;
        std::string name = utf8::to_lower_ascii(tok.text.substr(1));
        if (std::find(mentioned.begin(), mentioned.end(), name) == mentioned.end()) mentioned.push_back(name);
        break;
      }
      case TokenKind::url: v[col::has_url] = 1; break;
      case TokenKind::hashtag: v[col::has_hashtag] = 1; break;
      case TokenKind::word:
      case TokenKind::number:
        if (has_ascii_digit(tok.text)) v[col::has_digit] = 1;
        break;
      default: break;
    }
  }

  const auto& acc = record.account;
  double days = static_cast<double>(days_between(acc.registered_at, record.posted_at));
  v[col::posts_per_day] = ratio(static_cast<double>(acc.post_count), days);
  v[col::favorites_per_post] = ratio(static_cast<double>(acc.favorite_count), static_cast<double>(acc.post_count));
  v[col::listed_per_follower] = ratio(static_cast<double>(acc.listed_count), static_cast<double>(acc.follower_count));

  auto local = record.local_posted_at();
  auto day = std::chrono::floor<std::chrono::days>(local);
  std::chrono::weekday wd{day};
  v[col::day_of_week + (wd.iso_encoding() - 1)] = 1;
  auto hour = std::chrono::floor<std::chrono::hours>(local - day).count();
  v[col::time_of_day + static_cast<std::size_t>(hour / 6)] = 1;

  double follower_sum = 0.0;
  for (const auto& name : mentioned) {
    auto it = std::find_if(record.mentions_meta.begin(), record.mentions_meta.end(),
                           [&](const corpus::MentionMeta& m) { return utf8::to_lower_ascii(m.username) == name; });
    if (it == record.mentions_meta.end()) {
      if (diagnostics) {
        diagnostics->push_back({0, "record " + record.id + ": no mentions_meta for @" + name +
                                       ", treating as unverified with 0 followers"});
      }
      continue;
    }
    if (it->verified) v[col::mention_verified] = 1;
    follower_sum += static_cast<double>(it->follower_count);
  }
  if (!mentioned.empty()) {
    v[col::mention_followers] = std::log10(1.0 + follower_sum / static_cast<double>(mentioned.size()));
  }

  if (record.text.find('?') != std::string::npos) v[col::has_question] = 1;
  if (record.text.find('!') != std::string::npos) v[col::has_exclamation] = 1;

  auto pos = pos_distribution(tags);
  v[col::pos_noun] = pos[0];
  v[col::pos_descriptor] = pos[1];
  v[col::pos_verb] = pos[2];

  v[col::sentiment] = sentiment_score(tweet, lexicon);
  return v;
}

void mask_families(DecorationVector& vec, const std::vector<Family>& keep) {
  const auto& schema = FeatureSchema::decoration();
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (std::find(keep.begin(), keep.end(), schema[i].family) == keep.end()) vec[i] = 0.0;
  }
}

DecorationVector extract_decoration(const corpus::TweetRecord& record, const text::Annotator& annotator,
                                    const corpus::SentimentLexicon& lexicon, Diagnostics* diagnostics) {
  auto a = annotator.annotate(record.text);
  return extract_decoration(record, a.tweet, a.tags, a.tree, lexicon, diagnostics);
}

}  // namespace tweetcraft::features
