#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetcraft/common/error.h"

namespace tweetcraft::corpus {

// Pretrained word vectors, all of length `dimension()`.
class WordVectorTable {
 public:
  explicit WordVectorTable(std::size_t dimension = 1);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }

  // Throws ValidationError if the vector length differs from dimension().
  void add(std::string token, std::vector<double> vector);
  // nullptr when `token` is absent. Lookups are exact; callers lowercase.
  const std::vector<double>* find(std::string_view token) const;

  const std::unordered_map<std::string, std::vector<double>>& entries() const { return entries_; }

 private:
  std::size_t dimension_;
  std::unordered_map<std::string, std::vector<double>> entries_;
};

struct WordVectorLoad {
  WordVectorTable table;
  Diagnostics diagnostics;
};

// Header `<vocab_size> <dimension>`, then `token v1 ... vd` per line. A line
// whose width differs from the header is fatal (ValidationError naming the
// line); a vocab-size mismatch is only a diagnostic.
WordVectorLoad parse_word_vectors(std::istream& in);
WordVectorLoad load_word_vectors(const std::filesystem::path& path);

void write_word_vectors(std::ostream& out, const WordVectorTable& table);

}  // namespace tweetcraft::corpus
