#include "tweetcraft/text/conll.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tweetcraft/common/error.h"

namespace tweetcraft::text {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, '\t')) parts.push_back(part);
  return parts;
}

int parse_int(const std::string& s, std::size_t line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("annotated data line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

TokenizedTweet from_tokens(const std::vector<std::string>& tokens) {
  TokenizedTweet t;
  for (const auto& tok : tokens) {
    if (!t.source.empty()) t.source.push_back(' ');
    std::size_t begin = t.source.size();
    t.source += tok;
    t.tokens.push_back(Token{tok, classify_token(tok), begin, t.source.size()});
  }
  return t;
}

std::vector<ParsedTweet> read_annotated(std::istream& in) {
  std::vector<ParsedTweet> out;
  std::vector<std::string> tokens;
  TagSequence tags;
  DependencyTree tree;
  std::size_t line_no = 0, first_line = 0;

  auto flush = [&]() {
    if (tokens.empty()) return;
    ParsedTweet p{from_tokens(tokens), tags, tree};
    if (auto err = validate_tree(p.tree)) {
      throw ValidationError("annotated tweet starting at line " + std::to_string(first_line) + ": " + *err);
    }
    out.push_back(std::move(p));
    tokens.clear();
    tags.clear();
    tree.heads.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 4) {
      throw ValidationError("annotated data line " + std::to_string(line_no) + ": expected 4 tab-separated columns");
    }
    if (tokens.empty()) first_line = line_no;
    int index = parse_int(cols[0], line_no);
    if (index != static_cast<int>(tokens.size()) + 1) {
      throw ValidationError("annotated data line " + std::to_string(line_no) + ": token index out of sequence");
    }
    auto tag = parse_tag(cols[2]);
    if (!tag) throw ValidationError("annotated data line " + std::to_string(line_no) + ": unknown tag '" + cols[2] + "'");
    tokens.push_back(cols[1]);
    tags.push_back(*tag);
    tree.heads.push_back(parse_int(cols[3], line_no));
  }
  flush();
  return out;
}

std::vector<ParsedTweet> load_annotated(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeFailure("cannot open annotated data " + path.string());
  return read_annotated(in);
}

void write_annotated(std::ostream& out, const std::vector<ParsedTweet>& tweets) {
  for (const auto& p : tweets) {
    for (std::size_t i = 0; i < p.tweet.tokens.size(); ++i) {
      out << (i + 1) << '\t' << p.tweet.tokens[i].text << '\t' << tag_code(p.tags[i]) << '\t' << p.tree.heads[i]
          << '\n';
    }
    out << '\n';
  }
}

}  // namespace tweetcraft::text
