#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace tweetcraft::utf8 {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes the code point starting at `pos`; sets `length` to the number of
// bytes consumed (1 for an invalid byte, which decodes as kInvalid).
char32_t decode(std::string_view text, std::size_t pos, std::size_t& length);

void append(std::string& out, char32_t cp);

std::size_t count_code_points(std::string_view text);

// ASCII-only lowercase; non-ASCII bytes are copied unchanged.
std::string to_lower_ascii(std::string_view text);

// First / last `n` code points of `text`.
std::string prefix(std::string_view text, std::size_t n);
std::string suffix(std::string_view text, std::size_t n);

bool is_space(char32_t cp);
bool is_emoji(char32_t cp);
// Emoji modifiers that attach to a preceding emoji (variation selectors, skin
// tones, zero-width joiner).
bool is_emoji_modifier(char32_t cp);
bool is_general_punctuation(char32_t cp);
// Letters: ASCII letters plus non-ASCII code points that are not spaces,
// emoji, or punctuation symbols.
bool is_letter(char32_t cp);

}  // namespace tweetcraft::utf8
