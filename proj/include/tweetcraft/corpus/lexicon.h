#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "tweetcraft/common/error.h"

namespace tweetcraft::corpus {

// Token -> affective score in [-5, +5]. Tokens are stored lowercase.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  std::optional<double> score(std::string_view token) const;
  // Lowercases `token`; replaces any previous entry.
  void set(std::string_view token, double score);

  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, double>& entries() const { return entries_; }

 private:
  std::unordered_map<std::string, double> entries_;
};

struct LexiconLoad {
  SentimentLexicon lexicon;
  Diagnostics diagnostics;
};

// `token<TAB>score` per line. Duplicates keep the last score; bad scores are
// skipped. Both emit a diagnostic.
LexiconLoad parse_sentiment_lexicon(std::istream& in);
LexiconLoad load_sentiment_lexicon(const std::filesystem::path& path);

void write_sentiment_lexicon(std::ostream& out, const SentimentLexicon& lexicon);

}  // namespace tweetcraft::corpus
