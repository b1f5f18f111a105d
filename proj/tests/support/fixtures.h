#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tweetcraft/common/time.h"
#include "tweetcraft/corpus/corpus.h"
#include "tweetcraft/eval/dataset.h"
#include "tweetcraft/eval/synthetic.h"
#include "tweetcraft/influence/labeling.h"
#include "tweetcraft/text/annotator.h"

namespace tweetcraft::testing {

Timestamp at(int year, unsigned month, unsigned day, int hour = 0, int minute = 0);

// A final record posted 2016-03-01 12:00 UTC by an account with `followers`.
corpus::TweetRecord make_record(std::string id, std::string text, std::uint64_t retweets = 0,
                                std::uint64_t favorites = 0, std::uint64_t followers = 1000);

// Tagger + parser trained on the bundled grammar sample; cached per seed.
const text::Annotator& sample_annotator(std::uint64_t seed = 7);

// A synthetic corpus taken through the same steps as `synth -> label`:
// keywords, sim_emb grouping with k = 5, outlier removal, median split.
struct PlantedFixture {
  eval::SyntheticCorpus syn;
  text::Annotator annotator;
  std::vector<influence::LabeledExample> labels;
  eval::Dataset dataset;
};
PlantedFixture build_planted(const eval::SyntheticSpec& spec, std::uint64_t seed);
// n = 2000, noise = 0.1, default signal; built once per process.
const PlantedFixture& planted_2000();

// Fresh empty directory under the system temp dir.
std::filesystem::path fresh_dir(const std::string& name);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

struct CliRun {
  int code = 0;
  std::string out, err;
};
CliRun run_cli(const std::vector<std::string>& args);

}  // namespace tweetcraft::testing
