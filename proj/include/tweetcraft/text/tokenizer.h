#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tweetcraft::text {

enum class TokenKind { word, hashtag, mention, url, number, punctuation, emoji, other };

std::string_view to_string(TokenKind kind);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::word;
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct TokenizedTweet {
  std::string source;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Splits a post into URLs (scheme, `www.`, or a known shortener host),
// @mentions, #hashtags, numbers (`50%`, `$5`, `11/15`), emoji clusters,
// punctuation runs, and words (contractions and inner hyphens kept whole).
// Only whitespace is skipped, so the tokens' spans cover every other byte.
TokenizedTweet tokenize(std::string_view text);

// Classifies a single pre-split token; used when reading annotated files.
TokenKind classify_token(std::string_view token);

}  // namespace tweetcraft::text
