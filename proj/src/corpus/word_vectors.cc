#include "tweetcraft/corpus/word_vectors.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tweetcraft::corpus {
namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) parts.push_back(line.substr(start, pos - start));
  }
  return parts;
}

double parse_double(std::string_view s, std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ValidationError("word vectors line " + std::to_string(line_no) + ": bad number '" +
                          std::string(s) + "'");
  }
  return v;
}

}  // namespace

WordVectorTable::WordVectorTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw ValidationError("word vector dimension must be positive");
}

void WordVectorTable::add(std::string token, std::vector<double> vector) {
  if (vector.size() != dimension_) {
    throw ValidationError("vector for '" + token + "' has length " + std::to_string(vector.size()) +
                          ", expected " + std::to_string(dimension_));
  }
  entries_[std::move(token)] = std::move(vector);
}

const std::vector<double>* WordVectorTable::find(std::string_view token) const {
  auto it = entries_.find(std::string(token));
  return it == entries_.end() ? nullptr : &it->second;
}

WordVectorLoad parse_word_vectors(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("word vectors: missing header line");
  auto header = split_spaces(line);
  std::size_t vocab = 0, dim = 0;
  if (header.size() != 2 ||
      std::from_chars(header[0].data(), header[0].data() + header[0].size(), vocab).ec != std::errc() ||
      std::from_chars(header[1].data(), header[1].data() + header[1].size(), dim).ec != std::errc() ||
      dim == 0) {
    throw ValidationError("word vectors line 1: expected '<vocab_size> <dimension>'");
  }
  WordVectorLoad out{WordVectorTable(dim), {}};
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto parts = split_spaces(line);
    if (parts.empty()) continue;
    if (parts.size() != dim + 1) {
      throw ValidationError("word vectors line " + std::to_string(line_no) + ": expected " +
                            std::to_string(dim) + " values, found " + std::to_string(parts.size() - 1));
    }
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = parse_double(parts[i + 1], line_no);
    out.table.add(std::string(parts[0]), std::move(v));
  }
  if (out.table.size() != vocab) {
    out.diagnostics.push_back({1, "header declares " + std::to_string(vocab) + " entries, found " +
                                      std::to_string(out.table.size())});
  }
  return out;
}

WordVectorLoad load_word_vectors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeFailure("cannot open word vectors " + path.string());
  return parse_word_vectors(in);
}

void write_word_vectors(std::ostream& out, const WordVectorTable& table) {
  std::vector<const std::string*> tokens;
  for (const auto& [token, _] : table.entries()) tokens.push_back(&token);
  std::sort(tokens.begin(), tokens.end(), [](auto* a, auto* b) { return *a < *b; });
  out << table.size() << ' ' << table.dimension() << '\n';
  char buf[32];
  for (const auto* token : tokens) {
    out << *token;
    for (double v : *table.find(*token)) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

}  // namespace tweetcraft::corpus
