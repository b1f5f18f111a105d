#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tweetcraft/common/error.h"
#include "tweetcraft/common/time.h"

namespace tweetcraft::corpus {

// Account attributes recorded when the post was published.
struct AccountSnapshot {
  std::uint64_t follower_count = 0;
  std::uint64_t post_count = 0;      // lifetime statuses
  std::uint64_t favorite_count = 0;  // posts this account has favorited
  std::uint64_t listed_count = 0;
  Timestamp registered_at{};
  Timestamp snapshot_at{};

  bool operator==(const AccountSnapshot&) const = default;
};

// Metadata about a mentioned user, captured at ingestion time.
struct MentionMeta {
  std::string username;  // without the leading '@'
  bool verified = false;
  std::uint64_t follower_count = 0;

  bool operator==(const MentionMeta&) const = default;
};

enum class Maturity { provisional, final };

// Reaction counts stabilise within a few weeks of posting; records collected
// at least this long after posting are final.
inline constexpr std::chrono::days kMaturityWindow{21};
inline constexpr std::size_t kMaxTextLength = 500;  // code points

struct TweetRecord {
  std::string id;
  std::string text;
  Timestamp posted_at{};
  int utc_offset_minutes = 0;
  Timestamp collected_at{};
  std::uint64_t retweet_count = 0;
  std::uint64_t favorite_count = 0;
  AccountSnapshot account;
  std::vector<MentionMeta> mentions_meta;

  Maturity maturity() const;
  bool is_final() const { return maturity() == Maturity::final; }
  // Posting time shifted into the author's locale.
  Timestamp local_posted_at() const;

  bool operator==(const TweetRecord&) const = default;
};

// Invariant violations of `record`; empty when the record is valid.
std::vector<std::string> validate(const TweetRecord& record);

// Throws ValidationError describing the first missing or mistyped field or
// violated invariant.
TweetRecord record_from_json(const nlohmann::json& j);
nlohmann::ordered_json record_to_json(const TweetRecord& record);
std::string to_json_line(const TweetRecord& record);

struct CorpusLoad {
  std::vector<TweetRecord> records;
  Diagnostics diagnostics;
  std::size_t lines_read = 0;
};

// One JSON object per line. Malformed or invalid lines produce a diagnostic
// and are skipped, so records + diagnostics always equals lines read.
CorpusLoad parse_corpus(std::istream& in);
// Throws RuntimeFailure if the file cannot be opened.
CorpusLoad load_corpus(const std::filesystem::path& path);

void write_corpus(std::ostream& out, const std::vector<TweetRecord>& records);
void save_corpus(const std::filesystem::path& path, const std::vector<TweetRecord>& records);

}  // namespace tweetcraft::corpus
