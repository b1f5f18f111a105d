#include "tweetcraft/text/keywords.h"

#include <stdexcept>

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::text {

std::set<std::string> keyword_extract(const TokenizedTweet& tweet, const TagSequence& tags) {
  if (tags.size() != tweet.tokens.size()) throw std::invalid_argument("keyword_extract: tags not aligned");
  std::set<std::string> out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tweet.tokens[i].kind == TokenKind::word && is_keyword_tag(tags[i])) {
      out.insert(utf8::to_lower_ascii(tweet.tokens[i].text));
    }
  }
  return out;
}

}  // namespace tweetcraft::text
