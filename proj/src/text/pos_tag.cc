#include "tweetcraft/text/pos_tag.h"

#include <array>
#include <utility>

namespace tweetcraft::text {
namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 10> kCodes = {{
    {PosTag::common_noun, "N"},
    {PosTag::proper_noun, "^"},
    {PosTag::verb, "V"},
    {PosTag::adjective, "A"},
    {PosTag::adverb, "R"},
    {PosTag::other, "O"},
    {PosTag::hashtag, "#"},
    {PosTag::mention, "@"},
    {PosTag::url, "U"},
    {PosTag::punct, ","},
}};

constexpr std::array<std::pair<PosTag, std::string_view>, 10> kNames = {{
    {PosTag::common_noun, "common_noun"},
    {PosTag::proper_noun, "proper_noun"},
    {PosTag::verb, "verb"},
    {PosTag::adjective, "adjective"},
    {PosTag::adverb, "adverb"},
    {PosTag::other, "other"},
    {PosTag::hashtag, "hashtag"},
    {PosTag::mention, "mention"},
    {PosTag::url, "url"},
    {PosTag::punct, "punct"},
}};

}  // namespace

std::string_view tag_code(PosTag tag) { return kCodes[static_cast<std::size_t>(tag)].second; }

std::optional<PosTag> parse_tag(std::string_view text) {
  for (const auto& [tag, code] : kCodes) {
    if (code == text) return tag;
  }
  for (const auto& [tag, name] : kNames) {
    if (name == text) return tag;
  }
  return std::nullopt;
}

std::optional<PosTag> forced_tag(TokenKind kind) {
  switch (kind) {
    case TokenKind::hashtag: return PosTag::hashtag;
    case TokenKind::mention: return PosTag::mention;
    case TokenKind::url: return PosTag::url;
    case TokenKind::punctuation: return PosTag::punct;
    case TokenKind::emoji: return PosTag::other;
    default: return std::nullopt;
  }
}

bool is_keyword_tag(PosTag tag) {
  return tag == PosTag::common_noun || tag == PosTag::proper_noun || tag == PosTag::verb ||
         tag == PosTag::adjective || tag == PosTag::adverb;
}

}  // namespace tweetcraft::text
