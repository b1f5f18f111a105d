#include "tweetcraft/eval/corpus_stats.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::eval {

CorpusStats corpus_stats(std::span<const corpus::TweetRecord> records) {
  CorpusStats s;
  s.records = records.size();
  for (std::size_t b = 0; b <= kRatioBins; ++b) {
    double lo = b * kRatioBinWidth;
    double hi = b < kRatioBins ? lo + kRatioBinWidth : std::numeric_limits<double>::infinity();
    s.ratio_histogram.push_back({lo, hi, 0});
  }

  double ratio_sum = 0.0, tok_sum = 0.0, tok_sq = 0.0;
  for (const auto& r : records) {
    double len = static_cast<double>(text::tokenize(r.text).size());
    tok_sum += len;
    tok_sq += len * len;
    if (!r.is_final()) continue;
    ++s.final_records;
    if (r.retweet_count == 0) {
      ++s.zero_retweet_excluded;
      continue;
    }
    double ratio = static_cast<double>(r.favorite_count) / static_cast<double>(r.retweet_count);
    ratio_sum += ratio;
    ++s.ratio_rows;
    auto bin = static_cast<std::size_t>(ratio / kRatioBinWidth);
    ++s.ratio_histogram[std::min(bin, kRatioBins)].count;
  }
  if (s.ratio_rows > 0) s.ratio_mean = ratio_sum / static_cast<double>(s.ratio_rows);
  if (s.records > 0) {
    const double n = static_cast<double>(s.records);
    s.token_mean = tok_sum / n;
    s.token_sd = std::sqrt(std::max(0.0, tok_sq / n - s.token_mean * s.token_mean));
  }
  return s;
}

void write_ratio_csv(std::ostream& out, const CorpusStats& stats) {
  out << "lower,upper,count\n";
  for (const auto& b : stats.ratio_histogram) {
    out << b.lower << ',';
    if (std::isinf(b.upper)) out << "inf";
    else out << b.upper;
    out << ',' << b.count << '\n';
  }
}

std::string format_stats_table(const CorpusStats& stats) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "records                 %zu\n"
                "final records           %zu\n"
                "ratio rows              %zu\n"
                "excluded (0 retweets)   %zu\n"
                "favorite/retweet mean   %.4f\n"
                "tokens mean             %.4f\n"
                "tokens sd               %.4f\n",
                stats.records, stats.final_records, stats.ratio_rows, stats.zero_retweet_excluded, stats.ratio_mean,
                stats.token_mean, stats.token_sd);
  return buf;
}

}  // namespace tweetcraft::eval
