#include "tweetcraft/influence/grouping.h"

#include <map>
#include <stdexcept>

#include "tweetcraft/ml/kmeans.h"
#include "tweetcraft/ml/lda.h"

namespace tweetcraft::influence {

std::string_view to_string(GroupMethod method) {
  switch (method) {
    case GroupMethod::sim_binary: return "sim_binary";
    case GroupMethod::sim_emb: return "sim_emb";
    case GroupMethod::topic: return "topic";
  }
  return "?";
}

std::optional<GroupMethod> parse_group_method(std::string_view name) {
  if (name == "sim_binary" || name == "binary") return GroupMethod::sim_binary;
  if (name == "sim_emb" || name == "emb") return GroupMethod::sim_emb;
  if (name == "topic") return GroupMethod::topic;
  return std::nullopt;
}

Matrix binary_keyword_matrix(const std::vector<KeywordSet>& keywords) {
  std::map<std::string, std::size_t> df;
  for (const auto& set : keywords) {
    for (const auto& w : set) ++df[w];
  }
  std::map<std::string, std::size_t> column;
  for (const auto& [w, count] : df) {
    if (count >= 2) column.emplace(w, column.size());
  }
  Matrix X(keywords.size(), column.size());
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    for (const auto& w : keywords[i]) {
      if (auto it = column.find(w); it != column.end()) X(i, it->second) = 1.0;
    }
  }
  return X;
}

Matrix embedding_keyword_matrix(const std::vector<KeywordSet>& keywords, const corpus::WordVectorTable& table) {
  Matrix X(keywords.size(), table.dimension());
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    std::size_t hits = 0;
    auto row = X.row(i);
    for (const auto& w : keywords[i]) {
      const auto* v = table.find(w);
      if (!v) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] += (*v)[j];
      ++hits;
    }
    if (hits > 0) {
      for (double& x : row) x /= static_cast<double>(hits);
    }
  }
  return X;
}

GroupAssignment group_tweets(const std::vector<KeywordSet>& keywords, const GroupingOptions& options,
                             const corpus::WordVectorTable* table) {
  if (keywords.empty()) throw std::invalid_argument("cannot group an empty corpus");
  if (options.k < 2) throw std::invalid_argument("grouping needs k >= 2");
  GroupAssignment out;
  out.method = options.method;
  out.k = options.k;

  if (options.method == GroupMethod::topic) {
    std::vector<ml::Document> docs;
    docs.reserve(keywords.size());
    for (const auto& set : keywords) docs.emplace_back(set.begin(), set.end());
    auto model = ml::lda_fit(docs, {.topics = options.k, .iterations = options.lda_iterations, .seed = options.seed});
    for (std::size_t d = 0; d < docs.size(); ++d) out.groups.push_back(ml::argmax(model.training_doc_topics(d)));
    return out;
  }

  Matrix X;
  if (options.method == GroupMethod::sim_binary) {
    X = binary_keyword_matrix(keywords);
  } else {
    if (!table) throw std::invalid_argument("sim_emb grouping needs a word-vector table");
    X = embedding_keyword_matrix(keywords, *table);
  }
  auto result = ml::kmeans_fit(X, {.k = options.k, .seed = options.seed, .restarts = options.kmeans_restarts});
  out.groups = std::move(result.assignments);
  return out;
}

}  // namespace tweetcraft::influence
