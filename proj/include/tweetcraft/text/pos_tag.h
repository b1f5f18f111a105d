#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tweetcraft/text/tokenizer.h"

namespace tweetcraft::text {

// Coarse Twitter tag set. The first six are predicted by the tagger; the
// element tags are fixed by token kind.
enum class PosTag {
  common_noun,
  proper_noun,
  verb,
  adjective,
  adverb,
  other,
  hashtag,
  mention,
  url,
  punct,
};

inline constexpr std::size_t kLearnedTagCount = 6;

using TagSequence = std::vector<PosTag>;

// Single-character codes in the style of the Twitter POS tag set:
// N ^ V A R O # @ U ,
std::string_view tag_code(PosTag tag);
// Accepts the codes above or the enum names. nullopt for anything else.
std::optional<PosTag> parse_tag(std::string_view text);

// Tag imposed by the token kind, if any (hashtag, mention, url, punctuation,
// emoji -> other).
std::optional<PosTag> forced_tag(TokenKind kind);

bool is_keyword_tag(PosTag tag);

}  // namespace tweetcraft::text
