#include "tweetcraft/text/tokenizer.h"

#include <array>

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::text {
namespace {

constexpr std::array<std::string_view, 12> kShortenerHosts = {
    "t.co/",   "bit.ly/",  "goo.gl/",  "ow.ly/",       "tinyurl.com/",    "buff.ly/",
    "fb.me/",  "youtu.be/", "amzn.to/", "pic.twitter.com/", "instagr.am/", "lnkd.in/"};

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = text[pos + i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }
bool is_word_char(char32_t cp) { return utf8::is_letter(cp) || is_ascii_digit(cp) || cp == '_'; }
bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  char32_t at(std::size_t pos) const {
    if (pos >= text_.size()) return 0;
    std::size_t len = 0;
    return utf8::decode(text_, pos, len);
  }
  std::size_t next(std::size_t pos) const {
    std::size_t len = 0;
    utf8::decode(text_, pos, len);
    return pos + len;
  }
  std::size_t size() const { return text_.size(); }

  std::size_t url_length(std::size_t pos) const {
    bool url = starts_with_ci(text_, pos, "http://") || starts_with_ci(text_, pos, "https://") ||
               starts_with_ci(text_, pos, "www.");
    for (auto host : kShortenerHosts) url = url || starts_with_ci(text_, pos, host);
    if (!url) return 0;
    std::size_t end = pos;
    while (end < text_.size() && !utf8::is_space(at(end))) end = next(end);
    // Sentence punctuation glued to the end of a link belongs to the sentence.
    while (end > pos) {
      char c = text_[end - 1];
      if (c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':' || c == ')' ||
          c == '"' || c == '\'') {
        --end;
      } else {
        break;
      }
    }
    return end - pos;
  }

  // Word characters, joined across single inner apostrophes or hyphens.
  std::size_t word_end(std::size_t pos) const {
    std::size_t end = pos;
    while (end < text_.size()) {
      char32_t cp = at(end);
      if (is_word_char(cp)) {
        end = next(end);
      } else if ((is_apostrophe(cp) || cp == '-') && end > pos && is_word_char(at(next(end)))) {
        end = next(end);
      } else {
        break;
      }
    }
    return end;
  }

  // Digits with inner separators and an optional trailing '%'. Returns 0 when
  // the run continues into letters (e.g. "3rd"), which makes it a word.
  std::size_t number_end(std::size_t pos) const {
    std::size_t end = pos;
    if (at(end) == '$') end = next(end);
    if (!is_ascii_digit(at(end))) return 0;
    while (end < text_.size()) {
      char32_t cp = at(end);
      if (is_ascii_digit(cp)) {
        end = next(end);
      } else if ((cp == '.' || cp == ',' || cp == ':' || cp == '/') && is_ascii_digit(at(next(end)))) {
        end = next(end);
      } else {
        break;
      }
    }
    if (at(end) == '%') return next(end);
    if (is_word_char(at(end))) return 0;
    return end;
  }

  std::size_t emoji_end(std::size_t pos) const {
    std::size_t end = next(pos);
    while (end < text_.size()) {
      char32_t cp = at(end);
      if (utf8::is_emoji_modifier(cp)) {
        end = next(end);
        if (cp == 0x200D && end < text_.size() && utf8::is_emoji(at(end))) end = next(end);
      } else if (cp >= 0x1F1E6 && cp <= 0x1F1FF && at(pos) >= 0x1F1E6 && at(pos) <= 0x1F1FF &&
                 end == next(pos)) {
        end = next(end);  // regional-indicator pair (flag)
      } else {
        break;
      }
    }
    return end;
  }

 private:
  std::string_view text_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::word: return "word";
    case TokenKind::hashtag: return "hashtag";
    case TokenKind::mention: return "mention";
    case TokenKind::url: return "url";
    case TokenKind::number: return "number";
    case TokenKind::punctuation: return "punctuation";
    case TokenKind::emoji: return "emoji";
    case TokenKind::other: return "other";
  }
  return "other";
}

TokenizedTweet tokenize(std::string_view text) {
  TokenizedTweet out;
  out.source = std::string(text);
  Scanner s(text);
  std::size_t pos = 0;
  auto emit = [&](std::size_t begin, std::size_t end, TokenKind kind) {
    out.tokens.push_back(Token{std::string(text.substr(begin, end - begin)), kind, begin, end});
    pos = end;
  };

  while (pos < s.size()) {
    char32_t cp = s.at(pos);
    if (utf8::is_space(cp)) {
      pos = s.next(pos);
      continue;
    }
    if (std::size_t n = s.url_length(pos); n > 0) {
      emit(pos, pos + n, TokenKind::url);
      continue;
    }
    if (cp == '#' && is_word_char(s.at(s.next(pos)))) {
      std::size_t end = s.next(pos);
      while (end < s.size() && is_word_char(s.at(end))) end = s.next(end);
      emit(pos, end, TokenKind::hashtag);
      continue;
    }
    if (cp == '@') {
      char32_t c1 = s.at(s.next(pos));
      if ((c1 < 0x80 && is_word_char(c1))) {
        std::size_t end = s.next(pos);
        while (end < s.size()) {
          char32_t c = s.at(end);
          if (c < 0x80 && is_word_char(c)) {
            end = s.next(end);
          } else {
            break;
          }
        }
        emit(pos, end, TokenKind::mention);
        continue;
      }
    }
    if (std::size_t end = s.number_end(pos); end > 0) {
      emit(pos, end, TokenKind::number);
      continue;
    }
    if (is_word_char(cp)) {
      emit(pos, s.word_end(pos), TokenKind::word);
      continue;
    }
    if (utf8::is_emoji(cp) || (cp >= 0x1F1E6 && cp <= 0x1F1FF)) {
      emit(pos, s.emoji_end(pos), TokenKind::emoji);
      continue;
    }
    if (utf8::is_general_punctuation(cp)) {
      std::size_t end = s.next(pos);
      while (end < s.size()) {
        char32_t c = s.at(end);
        // '#', '@', '$' may open the next token rather than continue the run.
        if (!utf8::is_general_punctuation(c) || s.url_length(end) > 0 ||
            (c == '#' && is_word_char(s.at(s.next(end)))) || (c == '@' && is_word_char(s.at(s.next(end)))) ||
            (c == '$' && is_ascii_digit(s.at(s.next(end))))) {
          break;
        }
        end = s.next(end);
      }
      emit(pos, end, TokenKind::punctuation);
      continue;
    }
    emit(pos, s.next(pos), TokenKind::other);
  }
  return out;
}

TokenKind classify_token(std::string_view token) {
  auto t = tokenize(token);
  if (t.tokens.size() == 1) return t.tokens.front().kind;
  return TokenKind::word;
}

}  // namespace tweetcraft::text
