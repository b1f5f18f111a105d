#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tweetcraft/common/matrix.h"
#include "tweetcraft/corpus/word_vectors.h"

namespace tweetcraft::influence {

enum class GroupMethod { sim_binary, sim_emb, topic };

std::string_view to_string(GroupMethod method);
// Accepts "sim_binary"/"binary", "sim_emb"/"emb", "topic".
std::optional<GroupMethod> parse_group_method(std::string_view name);

struct GroupingOptions {
  GroupMethod method = GroupMethod::sim_emb;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::size_t kmeans_restarts = 1;
  std::size_t lda_iterations = 500;
};

struct GroupAssignment {
  GroupMethod method = GroupMethod::sim_emb;
  std::size_t k = 0;
  std::vector<std::size_t> groups;  // parallel to the input tweets
};

using KeywordSet = std::set<std::string>;

// Binary keyword vectors over keywords present in at least two tweets.
Matrix binary_keyword_matrix(const std::vector<KeywordSet>& keywords);
// Mean word vector of the in-vocabulary keywords (zeros when none).
Matrix embedding_keyword_matrix(const std::vector<KeywordSet>& keywords, const corpus::WordVectorTable& table);

// Groups tweets by their keywords so that labels compare posts with similar
// inherent meaning. `table` is required for sim_emb. Throws
// std::invalid_argument on an empty corpus, k < 2 or a missing table.
GroupAssignment group_tweets(const std::vector<KeywordSet>& keywords, const GroupingOptions& options,
                             const corpus::WordVectorTable* table = nullptr);

}  // namespace tweetcraft::influence
