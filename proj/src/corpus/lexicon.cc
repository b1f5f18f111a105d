#include "tweetcraft/corpus/lexicon.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::corpus {

std::optional<double> SentimentLexicon::score(std::string_view token) const {
  auto it = entries_.find(utf8::to_lower_ascii(token));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void SentimentLexicon::set(std::string_view token, double score) {
  entries_[utf8::to_lower_ascii(token)] = score;
}

LexiconLoad parse_sentiment_lexicon(std::istream& in) {
  LexiconLoad out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      out.diagnostics.push_back({line_no, "expected token<TAB>score"});
      continue;
    }
    std::string token = utf8::to_lower_ascii(line.substr(0, tab));
    std::string_view text = std::string_view(line).substr(tab + 1);
    double score = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), score);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(score)) {
      out.diagnostics.push_back({line_no, "non-numeric score for '" + token + "'"});
      continue;
    }
    if (score < -5.0 || score > 5.0) {
      out.diagnostics.push_back({line_no, "score for '" + token + "' outside [-5, 5]"});
      continue;
    }
    if (out.lexicon.score(token)) {
      out.diagnostics.push_back({line_no, "duplicate token '" + token + "', keeping the last score"});
    }
    out.lexicon.set(token, score);
  }
  return out;
}

LexiconLoad load_sentiment_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeFailure("cannot open lexicon " + path.string());
  return parse_sentiment_lexicon(in);
}

void write_sentiment_lexicon(std::ostream& out, const SentimentLexicon& lexicon) {
  std::vector<std::pair<std::string, double>> sorted(lexicon.entries().begin(), lexicon.entries().end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [token, score] : sorted) out << token << '\t' << score << '\n';
}

}  // namespace tweetcraft::corpus
