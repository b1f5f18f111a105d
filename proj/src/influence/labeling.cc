#include "tweetcraft/influence/labeling.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tweetcraft/influence/influence.h"

namespace tweetcraft::influence {

namespace {

std::map<std::size_t, std::vector<std::size_t>> by_group(const std::vector<LabeledExample>& examples,
                                                         bool retained_only) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (retained_only && !examples[i].retained) continue;
    groups[examples[i].group].push_back(i);
  }
  return groups;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void remove_outliers(std::vector<LabeledExample>& examples) {
  for (const auto& [g, members] : by_group(examples, false)) {
    const double n = static_cast<double>(members.size());
    double mean = 0.0;
    for (auto i : members) mean += examples[i].score;
    mean /= n;
    double var = 0.0;
    for (auto i : members) var += (examples[i].score - mean) * (examples[i].score - mean);
    double sd = std::sqrt(var / n);
    if (sd == 0.0) continue;
    for (auto i : members) {
      if ((examples[i].score - mean) / sd > kOutlierZ) {
        examples[i].retained = false;
        examples[i].label.reset();
      }
    }
  }
}

Diagnostics assign_labels(std::vector<LabeledExample>& examples) {
  Diagnostics diags;
  for (auto& [g, members] : by_group(examples, true)) {
    if (members.size() < 2) {
      for (auto i : members) examples[i].label.reset();
      diags.push_back({0, "group " + std::to_string(g) + " has " + std::to_string(members.size()) +
                              " retained example(s); excluded from labeling"});
      continue;
    }
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      if (examples[a].score != examples[b].score) return examples[a].score > examples[b].score;
      return examples[a].id < examples[b].id;
    });
    const std::size_t half = members.size() / 2;
    for (std::size_t r = 0; r < members.size(); ++r) {
      examples[members[r]].label = r < half ? Label::positive : Label::negative;
    }
  }
  return diags;
}

void LabelingPipeline::require(Stage expected, const char* step) const {
  if (stage_ != expected) throw std::logic_error(std::string("labeling pipeline: ") + step + " called out of order");
}

void LabelingPipeline::score(std::span<const corpus::TweetRecord> records) {
  require(Stage::empty, "score");
  examples_.clear();
  examples_.reserve(records.size());
  for (const auto& r : records) {
    LabeledExample e;
    e.id = r.id;
    e.score = influence_score(r);
    examples_.push_back(std::move(e));
  }
  stage_ = Stage::scored;
}

void LabelingPipeline::group(const GroupAssignment& assignment) {
  require(Stage::scored, "group");
  if (assignment.groups.size() != examples_.size()) {
    throw std::invalid_argument("group assignment size differs from the scored records");
  }
  for (std::size_t i = 0; i < examples_.size(); ++i) examples_[i].group = assignment.groups[i];
  stage_ = Stage::grouped;
}

void LabelingPipeline::remove_outliers() {
  require(Stage::grouped, "remove_outliers");
  influence::remove_outliers(examples_);
  stage_ = Stage::filtered;
}

void LabelingPipeline::label() {
  require(Stage::filtered, "label");
  diagnostics_ = assign_labels(examples_);
  stage_ = Stage::labeled;
}

LabelingResult label_corpus(std::span<const corpus::TweetRecord> records, const std::vector<KeywordSet>& keywords,
                            const GroupingOptions& options, const corpus::WordVectorTable* table) {
  LabelingPipeline pipeline;
  pipeline.score(records);
  LabelingResult result;
  result.groups = group_tweets(keywords, options, table);
  pipeline.group(result.groups);
  pipeline.remove_outliers();
  pipeline.label();
  result.examples = pipeline.examples();
  result.diagnostics = pipeline.diagnostics();
  return result;
}

void write_labels_csv(std::ostream& out, const std::vector<LabeledExample>& examples) {
  out << "id,group,score,retained,label\n";
  for (const auto& e : examples) {
    out << e.id << ',' << e.group << ',' << format_double(e.score) << ',' << (e.retained ? "true" : "false") << ',';
    if (e.label) out << (*e.label == Label::positive ? "positive" : "negative");
    out << '\n';
  }
}

void save_labels_csv(const std::filesystem::path& path, const std::vector<LabeledExample>& examples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeFailure("cannot write " + path.string());
  write_labels_csv(out, examples);
}

std::vector<LabeledExample> read_labels_csv(std::istream& in) {
  std::vector<LabeledExample> out;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("labels line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line != "id,group,score,retained,label") fail("unexpected header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 5) fail("expected 5 fields");
    LabeledExample e;
    e.id = fields[0];
    auto parse_num = [&](const std::string& s, auto& v) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size()) fail("bad number '" + s + "'");
    };
    parse_num(fields[1], e.group);
    parse_num(fields[2], e.score);
    if (fields[3] == "true") e.retained = true;
    else if (fields[3] == "false") e.retained = false;
    else fail("retained must be true or false");
    if (fields[4] == "positive") e.label = Label::positive;
    else if (fields[4] == "negative") e.label = Label::negative;
    else if (!fields[4].empty()) fail("unknown label '" + fields[4] + "'");
    out.push_back(std::move(e));
  }
  if (lineno == 0) throw ValidationError("labels file is empty");
  return out;
}

std::vector<LabeledExample> load_labels_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeFailure("cannot open " + path.string());
  return read_labels_csv(in);
}

}  // namespace tweetcraft::influence
