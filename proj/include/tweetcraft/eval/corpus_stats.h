#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tweetcraft/corpus/corpus.h"

namespace tweetcraft::eval {

struct RatioBin {
  double lower = 0.0;
  double upper = 0.0;  // exclusive; +inf for the overflow bin
  std::size_t count = 0;
};

struct CorpusStats {
  std::size_t records = 0;
  std::size_t final_records = 0;
  // Final records with at least one retweet; the others are excluded from the
  // favorite-to-retweet ratio and counted here.
  std::size_t ratio_rows = 0;
  std::size_t zero_retweet_excluded = 0;
  double ratio_mean = 0.0;
  std::vector<RatioBin> ratio_histogram;
  double token_mean = 0.0;
  double token_sd = 0.0;  // population
};

inline constexpr double kRatioBinWidth = 0.5;
inline constexpr std::size_t kRatioBins = 20;

CorpusStats corpus_stats(std::span<const corpus::TweetRecord> records);

// Histogram rows `lower,upper,count`.
void write_ratio_csv(std::ostream& out, const CorpusStats& stats);
std::string format_stats_table(const CorpusStats& stats);

}  // namespace tweetcraft::eval
