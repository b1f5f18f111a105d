#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tweetcraft/text/parser.h"

namespace tweetcraft::text {

// Tab-separated `index token tag head`, one token per line, a blank line
// between tweets. Lines starting with '#' are comments. Token kinds are
// re-derived from the token text; the source text is the tokens joined by
// single spaces. Throws ValidationError naming the offending line.
std::vector<ParsedTweet> read_annotated(std::istream& in);
std::vector<ParsedTweet> load_annotated(const std::filesystem::path& path);

void write_annotated(std::ostream& out, const std::vector<ParsedTweet>& tweets);

// Builds a TokenizedTweet from pre-split tokens.
TokenizedTweet from_tokens(const std::vector<std::string>& tokens);

}  // namespace tweetcraft::text
