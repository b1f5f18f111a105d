#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetcraft::features {

enum class Family {
  complexity,
  elements,
  author_meta,
  post_meta,
  mentions,
  punctuation,
  digits,
  pos_dist,
  sentiment,
};

inline constexpr std::size_t kFamilyCount = 9;
inline constexpr std::array<Family, kFamilyCount> kAllFamilies = {
    Family::complexity, Family::elements,    Family::author_meta, Family::post_meta, Family::mentions,
    Family::punctuation, Family::digits, Family::pos_dist, Family::sentiment};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct FeatureSpec {
  std::string_view name;
  Family family;
  // Continuous columns are standardized; binary and one-hot columns pass through.
  bool continuous;
};

inline constexpr std::size_t kDecorationDims = 30;

// Fixed column order of the decoration vector. Day-of-week one-hot starts at
// Monday; time-of-day periods are [00,06), [06,12), [12,18), [18,24) local.
class FeatureSchema {
 public:
  static const FeatureSchema& decoration();

  std::string_view version() const { return version_; }
  std::size_t size() const { return specs_.size(); }
  const FeatureSpec& operator[](std::size_t i) const { return specs_[i]; }
  const std::vector<FeatureSpec>& specs() const { return specs_; }

  std::vector<std::size_t> columns(Family family) const;
  std::vector<bool> continuous_mask() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  FeatureSchema(std::string version, std::vector<FeatureSpec> specs);

  std::string version_;
  std::vector<FeatureSpec> specs_;
};

// Column indices, so call sites read `vec[col::has_url]`.
namespace col {
inline constexpr std::size_t length = 0;
inline constexpr std::size_t readability = 1;
inline constexpr std::size_t parse_depth = 2;
inline constexpr std::size_t head_count = 3;
inline constexpr std::size_t has_mention = 4;
inline constexpr std::size_t has_url = 5;
inline constexpr std::size_t has_hashtag = 6;
inline constexpr std::size_t posts_per_day = 7;
inline constexpr std::size_t favorites_per_post = 8;
inline constexpr std::size_t listed_per_follower = 9;
inline constexpr std::size_t day_of_week = 10;  // 7 columns, Monday first
inline constexpr std::size_t time_of_day = 17;  // 4 columns
inline constexpr std::size_t mention_verified = 21;
inline constexpr std::size_t mention_followers = 22;
inline constexpr std::size_t has_question = 23;
inline constexpr std::size_t has_exclamation = 24;
inline constexpr std::size_t has_digit = 25;
inline constexpr std::size_t pos_noun = 26;
inline constexpr std::size_t pos_descriptor = 27;
inline constexpr std::size_t pos_verb = 28;
inline constexpr std::size_t sentiment = 29;
}  // namespace col

}  // namespace tweetcraft::features
