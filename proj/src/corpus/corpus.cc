#include "tweetcraft/corpus/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::corpus {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t count_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw ValidationError(std::string("field '") + name + "' must be non-negative");
  }
  throw ValidationError(std::string("field '") + name + "' must be an integer");
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw ValidationError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

Timestamp time_field(const json& j, const char* name) {
  try {
    return parse_rfc3339(string_field(j, name));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

Maturity TweetRecord::maturity() const {
  return collected_at - posted_at >= kMaturityWindow ? Maturity::final : Maturity::provisional;
}

Timestamp TweetRecord::local_posted_at() const {
  return posted_at + std::chrono::minutes{utc_offset_minutes};
}

std::vector<std::string> validate(const TweetRecord& r) {
  std::vector<std::string> problems;
  if (r.id.empty()) problems.emplace_back("id is empty");
  if (utf8::count_code_points(r.text) > kMaxTextLength) {
    problems.emplace_back("text exceeds " + std::to_string(kMaxTextLength) + " characters");
  }
  if (r.utc_offset_minutes < -14 * 60 || r.utc_offset_minutes > 14 * 60) {
    problems.emplace_back("utc_offset_minutes outside [-840, 840]");
  }
  if (r.collected_at < r.posted_at) problems.emplace_back("collected_at precedes posted_at");
  if (r.account.snapshot_at < r.account.registered_at) {
    problems.emplace_back("account.snapshot_at precedes account.registered_at");
  }
  if (r.account.snapshot_at > r.posted_at + std::chrono::days{1}) {
    problems.emplace_back("account snapshot taken more than one day after posting");
  }
  for (const auto& m : r.mentions_meta) {
    if (m.username.empty()) problems.emplace_back("mentions_meta entry with empty username");
  }
  return problems;
}

TweetRecord record_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("record is not a JSON object");
  TweetRecord r;
  r.id = string_field(j, "id");
  r.text = string_field(j, "text");
  r.posted_at = time_field(j, "posted_at");
  const json& offset = field(j, "utc_offset_minutes");
  if (!offset.is_number_integer()) throw ValidationError("field 'utc_offset_minutes' must be an integer");
  r.utc_offset_minutes = offset.get<int>();
  r.collected_at = time_field(j, "collected_at");
  r.retweet_count = count_field(j, "retweet_count");
  r.favorite_count = count_field(j, "favorite_count");

  const json& acc = field(j, "account");
  if (!acc.is_object()) throw ValidationError("field 'account' must be an object");
  r.account.follower_count = count_field(acc, "follower_count");
  r.account.post_count = count_field(acc, "post_count");
  r.account.favorite_count = count_field(acc, "favorite_count");
  r.account.listed_count = count_field(acc, "listed_count");
  r.account.registered_at = time_field(acc, "registered_at");
  r.account.snapshot_at = time_field(acc, "snapshot_at");

  if (auto it = j.find("mentions_meta"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw ValidationError("field 'mentions_meta' must be an array");
    for (const json& m : *it) {
      if (!m.is_object()) throw ValidationError("mentions_meta entries must be objects");
      MentionMeta meta;
      meta.username = string_field(m, "username");
      if (!meta.username.empty() && meta.username.front() == '@') meta.username.erase(0, 1);
      const json& verified = field(m, "verified");
      if (!verified.is_boolean()) throw ValidationError("field 'verified' must be a boolean");
      meta.verified = verified.get<bool>();
      meta.follower_count = count_field(m, "follower_count");
      r.mentions_meta.push_back(std::move(meta));
    }
  }

  auto problems = validate(r);
  if (!problems.empty()) throw ValidationError(problems.front());
  return r;
}

nlohmann::ordered_json record_to_json(const TweetRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["text"] = r.text;
  j["posted_at"] = format_rfc3339(r.posted_at);
  j["utc_offset_minutes"] = r.utc_offset_minutes;
  j["collected_at"] = format_rfc3339(r.collected_at);
  j["retweet_count"] = r.retweet_count;
  j["favorite_count"] = r.favorite_count;
  nlohmann::ordered_json acc;
  acc["follower_count"] = r.account.follower_count;
  acc["post_count"] = r.account.post_count;
  acc["favorite_count"] = r.account.favorite_count;
  acc["listed_count"] = r.account.listed_count;
  acc["registered_at"] = format_rfc3339(r.account.registered_at);
  acc["snapshot_at"] = format_rfc3339(r.account.snapshot_at);
  j["account"] = std::move(acc);
  auto mentions = nlohmann::ordered_json::array();
  for (const auto& m : r.mentions_meta) {
    mentions.push_back({{"username", m.username}, {"verified", m.verified}, {"follower_count", m.follower_count}});
  }
  j["mentions_meta"] = std::move(mentions);
  return j;
}

std::string to_json_line(const TweetRecord& record) {
  return record_to_json(record).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

CorpusLoad parse_corpus(std::istream& in) {
  CorpusLoad out;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++out.lines_read;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      out.diagnostics.push_back({out.lines_read, "empty line"});
      continue;
    }
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      out.diagnostics.push_back({out.lines_read, "malformed JSON"});
      continue;
    }
    try {
      TweetRecord r = record_from_json(j);
      if (!seen.insert(r.id).second) {
        out.diagnostics.push_back({out.lines_read, "duplicate id '" + r.id + "'"});
        continue;
      }
      out.records.push_back(std::move(r));
    } catch (const ValidationError& e) {
      out.diagnostics.push_back({out.lines_read, e.what()});
    } catch (const json::exception& e) {
      out.diagnostics.push_back({out.lines_read, e.what()});
    }
  }
  return out;
}

CorpusLoad load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeFailure("cannot open corpus " + path.string());
  return parse_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<TweetRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

void save_corpus(const std::filesystem::path& path, const std::vector<TweetRecord>& records) {
  std::ofstream out(path);
  if (!out) throw RuntimeFailure("cannot write " + path.string());
  write_corpus(out, records);
}

}  // namespace tweetcraft::corpus
