#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tweetcraft/common/error.h"
#include "tweetcraft/corpus/corpus.h"
#include "tweetcraft/influence/grouping.h"

namespace tweetcraft::influence {

enum class Label { negative, positive };

struct LabeledExample {
  std::string id;
  std::size_t group = 0;
  double score = 0.0;
  bool retained = true;
  std::optional<Label> label;  // only ever set on retained examples

  bool operator==(const LabeledExample&) const = default;
};

inline constexpr double kOutlierZ = 2.0;

// Single pass per group: drops examples whose score is more than two
// population standard deviations above the group mean. Low scores stay.
void remove_outliers(std::vector<LabeledExample>& examples);

// Per group over retained examples: sort by score descending (id ascending
// on ties); the first floor(m/2) are positive, the rest negative. Groups with
// fewer than two retained examples stay unlabeled and yield a diagnostic.
Diagnostics assign_labels(std::vector<LabeledExample>& examples);

// Enforces the order score -> group -> remove outliers -> label; calling a
// stage out of order throws std::logic_error.
class LabelingPipeline {
 public:
  enum class Stage { empty, scored, grouped, filtered, labeled };

  Stage stage() const { return stage_; }

  void score(std::span<const corpus::TweetRecord> records);
  void group(const GroupAssignment& assignment);
  void remove_outliers();
  void label();

  const std::vector<LabeledExample>& examples() const { return examples_; }
  const Diagnostics& diagnostics() const { return diagnostics_; }

 private:
  void require(Stage expected, const char* step) const;

  Stage stage_ = Stage::empty;
  std::vector<LabeledExample> examples_;
  Diagnostics diagnostics_;
};

struct LabelingResult {
  GroupAssignment groups;
  std::vector<LabeledExample> examples;
  Diagnostics diagnostics;
};

// Runs the whole pipeline, grouping by the given keyword sets.
LabelingResult label_corpus(std::span<const corpus::TweetRecord> records, const std::vector<KeywordSet>& keywords,
                            const GroupingOptions& options, const corpus::WordVectorTable* table = nullptr);

// CSV columns: id,group,score,retained,label (label empty when absent).
void write_labels_csv(std::ostream& out, const std::vector<LabeledExample>& examples);
void save_labels_csv(const std::filesystem::path& path, const std::vector<LabeledExample>& examples);
// Throws ValidationError naming the offending line.
std::vector<LabeledExample> read_labels_csv(std::istream& in);
std::vector<LabeledExample> load_labels_csv(const std::filesystem::path& path);

}  // namespace tweetcraft::influence
