#include "tweetcraft/features/schema.h"

namespace tweetcraft::features {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::complexity: return "complexity";
    case Family::elements: return "elements";
    case Family::author_meta: return "author_meta";
    case Family::post_meta: return "post_meta";
    case Family::mentions: return "mentions";
    case Family::punctuation: return "punctuation";
    case Family::digits: return "digits";
    case Family::pos_dist: return "pos_dist";
    case Family::sentiment: return "sentiment";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

FeatureSchema::FeatureSchema(std::string version, std::vector<FeatureSpec> specs)
    : version_(std::move(version)), specs_(std::move(specs)) {}

const FeatureSchema& FeatureSchema::decoration() {
  static const FeatureSchema schema(
      "decoration-v1",
      {
          {"length", Family::complexity, true},
          {"readability", Family::complexity, true},
          {"parse_depth", Family::complexity, true},
          {"head_count", Family::complexity, true},
          {"has_mention", Family::elements, false},
          {"has_url", Family::elements, false},
          {"has_hashtag", Family::elements, false},
          {"posts_per_day", Family::author_meta, true},
          {"favorites_per_post", Family::author_meta, true},
          {"listed_per_follower", Family::author_meta, true},
          {"dow_mon", Family::post_meta, false},
          {"dow_tue", Family::post_meta, false},
          {"dow_wed", Family::post_meta, false},
          {"dow_thu", Family::post_meta, false},
          {"dow_fri", Family::post_meta, false},
          {"dow_sat", Family::post_meta, false},
          {"dow_sun", Family::post_meta, false},
          {"tod_00_06", Family::post_meta, false},
          {"tod_06_12", Family::post_meta, false},
          {"tod_12_18", Family::post_meta, false},
          {"tod_18_24", Family::post_meta, false},
          {"mention_verified", Family::mentions, false},
          {"mention_followers_log10", Family::mentions, true},
          {"has_question", Family::punctuation, false},
          {"has_exclamation", Family::punctuation, false},
          {"has_digit", Family::digits, false},
          {"pos_noun", Family::pos_dist, true},
          {"pos_descriptor", Family::pos_dist, true},
          {"pos_verb", Family::pos_dist, true},
          {"sentiment", Family::sentiment, true},
      });
  return schema;
}

std::vector<std::size_t> FeatureSchema::columns(Family family) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    if (specs_[i].family == family) out.push_back(i);
  }
  return out;
}

std::vector<bool> FeatureSchema::continuous_mask() const {
  std::vector<bool> mask(specs_.size());
  for (std::size_t i = 0; i < specs_.size(); ++i) mask[i] = specs_[i].continuous;
  return mask;
}

std::optional<std::size_t> FeatureSchema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    if (specs_[i].name == name) return i;
  }
  return std::nullopt;
}

}  // namespace tweetcraft::features
