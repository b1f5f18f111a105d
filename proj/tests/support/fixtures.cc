#include "fixtures.h"

#include <fstream>
#include <map>
#include <sstream>

#include "tweetcraft/cli/commands.h"
#include "tweetcraft/common/rng.h"

namespace tweetcraft::testing {

namespace fs = std::filesystem;
using namespace std::chrono;

Timestamp at(int year, unsigned month, unsigned day, int hour, int minute) {
  return sys_days{std::chrono::year{year} / month / day} + hours{hour} + minutes{minute};
}

corpus::TweetRecord make_record(std::string id, std::string text, std::uint64_t retweets, std::uint64_t favorites,
                                std::uint64_t followers) {
  corpus::TweetRecord r;
  r.id = std::move(id);
  r.text = std::move(text);
  r.posted_at = at(2016, 3, 1, 12);
  r.collected_at = r.posted_at + days{30};
  r.retweet_count = retweets;
  r.favorite_count = favorites;
  r.account.follower_count = followers;
  r.account.post_count = 1000;
  r.account.favorite_count = 300;
  r.account.listed_count = 50;
  r.account.registered_at = at(2014, 10, 13, 12);
  r.account.snapshot_at = r.posted_at;
  return r;
}

const text::Annotator& sample_annotator(std::uint64_t seed) {
  static std::map<std::uint64_t, text::Annotator> cache;
  auto it = cache.find(seed);
  if (it == cache.end()) {
    auto sample = eval::generate_annotated_sample(600, seed);
    text::NlpTrainingOptions opt;
    opt.seed = derive_seed(seed, "nlp");
    it = cache.emplace(seed, text::train_annotator(sample, opt)).first;
  }
  return it->second;
}

PlantedFixture build_planted(const eval::SyntheticSpec& spec, std::uint64_t seed) {
  auto syn = eval::generate_synthetic(spec, seed);
  const auto& ann = sample_annotator(seed);
  std::vector<influence::KeywordSet> keywords;
  for (const auto& r : syn.records) keywords.push_back(ann.keywords(r.text));
  influence::GroupingOptions opt;
  opt.method = influence::GroupMethod::sim_emb;
  opt.k = 5;
  opt.kmeans_restarts = 10;
  opt.seed = derive_seed(seed, "grouping");
  auto labeled = influence::label_corpus(syn.records, keywords, opt, &syn.vectors);
  auto ds = eval::build_dataset(syn.records, labeled.examples, ann, syn.lexicon);
  return PlantedFixture{std::move(syn), ann, std::move(labeled.examples), std::move(ds)};
}

const PlantedFixture& planted_2000() {
  static const PlantedFixture fixture = build_planted(eval::SyntheticSpec{}, 7);
  return fixture;
}

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("tweetcraft-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"tweetcraft"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace tweetcraft::testing
