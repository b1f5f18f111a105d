#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/fixtures.h"
#include "tweetcraft/cli/config.h"
#include "tweetcraft/corpus/corpus.h"

using namespace tweetcraft;
using tweetcraft::testing::fresh_dir;
using tweetcraft::testing::read_file;
using tweetcraft::testing::run_cli;
using tweetcraft::testing::write_file;
namespace fs = std::filesystem;

namespace {

std::string s(const fs::path& p) { return p.string(); }

// synth -> train-nlp -> label on a 2000-record planted corpus, shared by the
// tests below.
struct PlantedRun {
  fs::path root, synth, nlp, label;
};

const PlantedRun& planted_run() {
  static PlantedRun run = [] {
    PlantedRun r;
    r.root = fresh_dir("cli-planted");
    r.synth = r.root / "synth";
    r.nlp = r.root / "nlp";
    r.label = r.root / "label";
    auto a = run_cli({"synth", "--seed", "7", "--n", "2000", "--out", s(r.synth), "--log-level", "warn"});
    REQUIRE_MESSAGE(a.code == 0, a.err);
    auto b = run_cli({"train-nlp", "--seed", "7", "--annotated", s(r.synth / "annotated.conll"), "--out", s(r.nlp),
                      "--log-level", "warn"});
    REQUIRE_MESSAGE(b.code == 0, b.err);
    auto c = run_cli({"label", "--seed", "7", "--corpus", s(r.synth / "corpus.jsonl"), "--nlp", s(r.nlp / "nlp.json"),
                      "--vectors", s(r.synth / "vectors.txt"), "--out", s(r.label), "--log-level", "warn"});
    REQUIRE_MESSAGE(c.code == 0, c.err);
    return r;
  }();
  return run;
}

std::vector<std::string> dataset_flags(const PlantedRun& r) {
  return {"--seed",    "7",
          "--corpus",  s(r.synth / "corpus.jsonl"),
          "--nlp",     s(r.nlp / "nlp.json"),
          "--lexicon", s(r.synth / "lexicon.tsv"),
          "--labels",  s(r.label / "labels.csv"),
          "--log-level", "warn"};
}

std::vector<std::string> cmd(std::string name, std::vector<std::string> flags, const fs::path& out) {
  flags.insert(flags.begin(), std::move(name));
  flags.push_back("--out");
  flags.push_back(s(out));
  return flags;
}

}  // namespace

TEST_CASE("argument errors exit with 1") {
  auto unknown = run_cli({"synth", "--bogus"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("--bogus") != std::string::npos);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"label", "--k", "4"}).code == 1);
  CHECK(run_cli({"train", "--model", "tree"}).code == 1);
  CHECK(run_cli({"label", "--group-method", "lda"}).code == 1);
  auto dir = fresh_dir("cli-noseed");
  auto noseed = run_cli({"synth", "--out", s(dir / "x"), "--log-level", "off"});
  CHECK(noseed.code == 1);
  CHECK(noseed.err.find("seed") != std::string::npos);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("a missing input is a validation error") {
  auto dir = fresh_dir("cli-missing");
  auto r = run_cli({"ingest", "--corpus", s(dir / "nope.jsonl"), "--out", s(dir / "o"), "--log-level", "off"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not found") != std::string::npos);
}

TEST_CASE("config files are strict") {
  auto dir = fresh_dir("cli-config");
  write_file(dir / "bad.toml", "seed = 3\ncolour = \"red\"\n");
  auto r = run_cli({"synth", "--config", s(dir / "bad.toml"), "--out", s(dir / "o"), "--log-level", "off"});
  CHECK(r.code == 1);
  CHECK(r.err.find("colour") != std::string::npos);
  write_file(dir / "bad2.toml", "seed = \"three\"\n");
  CHECK(run_cli({"synth", "--config", s(dir / "bad2.toml"), "--out", s(dir / "o")}).code == 1);
  write_file(dir / "bad3.toml", "seed = 3\n[grouping]\nk = 4\n");
  CHECK(run_cli({"synth", "--config", s(dir / "bad3.toml"), "--out", s(dir / "o")}).code == 1);
}

TEST_CASE("flags override the config file") {
  auto dir = fresh_dir("cli-override");
  write_file(dir / "c.toml", "seed = 3\n[synth]\nn = 50\n");
  auto r = run_cli({"synth", "--config", s(dir / "c.toml"), "--n", "40", "--out", s(dir / "o"), "--log-level", "off"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("wrote 40 synthetic records") != std::string::npos);
  auto written = cli::load_config(dir / "o" / "config.toml");
  CHECK(written.seed == 3);
  CHECK(written.synth.n == 40);
}

TEST_CASE("label refuses provisional records") {
  auto dir = fresh_dir("cli-provisional");
  std::ofstream f(dir / "corpus.jsonl");
  for (int i = 0; i < 6; ++i) {
    auto r = tweetcraft::testing::make_record("p" + std::to_string(i), "Big sale on shoes today", 3, 4);
    r.collected_at = r.posted_at + std::chrono::days(10);
    f << corpus::to_json_line(r) << '\n';
  }
  f.close();
  auto res = run_cli({"label", "--seed", "1", "--corpus", s(dir / "corpus.jsonl"), "--group-method", "binary",
                      "--annotated", "unused", "--out", s(dir / "o"), "--log-level", "off"});
  CHECK(res.code == 1);
  CHECK(res.err.find("21-day rule") != std::string::npos);
}

TEST_CASE("synth, label, train and eval recover the planted signal") {
  const auto& r = planted_run();
  auto base = dataset_flags(r);

  auto ev = run_cli(cmd("eval", base, r.root / "eval"));
  REQUIRE_MESSAGE(ev.code == 0, ev.err);
  MESSAGE(ev.out);
  auto csv = read_file(r.root / "eval" / "eval.csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "model,classifier,precision,recall,f1");
  std::map<std::string, double> f1;
  while (std::getline(in, line)) {
    auto name = line.substr(0, line.find(','));
    f1[name] = std::stod(line.substr(line.rfind(',') + 1));
  }
  CHECK(f1.at("decoration") >= 0.85);
  CHECK(f1.at("ngram") <= f1.at("decoration") - 0.10);

  auto tr = run_cli(cmd("train", base, r.root / "train"));
  REQUIRE_MESSAGE(tr.code == 0, tr.err);
  CHECK(fs::exists(r.root / "train" / "model.json"));

  auto pr = run_cli({"predict", "--model-file", s(r.root / "train" / "model.json"), "--input",
                     s(r.synth / "corpus.jsonl"), "--out", s(r.root / "predict"), "--log-level", "warn"});
  REQUIRE_MESSAGE(pr.code == 0, pr.err);
  auto preds = read_file(r.root / "predict" / "predictions.csv");
  CHECK(std::count(preds.begin(), preds.end(), '\n') == 2001);
  CHECK(preds.rfind("id,label,score,decision\n", 0) == 0);
}

TEST_CASE("equal config and seed give identical manifests") {
  const auto& r = planted_run();
  auto base = dataset_flags(r);
  auto a = run_cli(cmd("train", base, r.root / "det-a"));
  auto b = run_cli(cmd("train", base, r.root / "det-b"));
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  auto ma = read_file(r.root / "det-a" / "manifest.json");
  CHECK(!ma.empty());
  CHECK(ma == read_file(r.root / "det-b" / "manifest.json"));
  CHECK(read_file(r.root / "det-a" / "model.json") == read_file(r.root / "det-b" / "model.json"));

  auto manifest = nlohmann::json::parse(ma);
  CHECK(manifest["command"] == "train");
  CHECK(manifest["seed"] == 7);
  CHECK(manifest["inputs"].size() == 4);
  CHECK(manifest["outputs"].size() == 2);

  // A different seed changes the manifest.
  auto other = base;
  other[1] = "8";
  REQUIRE(run_cli(cmd("train", other, r.root / "det-c")).code == 0);
  CHECK(read_file(r.root / "det-c" / "manifest.json") != ma);
}

TEST_CASE("re-running from a run directory's config reproduces it") {
  const auto& r = planted_run();
  auto again = r.root / "label-again";
  auto res = run_cli({"label", "--config", s(r.label / "config.toml"), "--out", s(again), "--log-level", "warn"});
  REQUIRE_MESSAGE(res.code == 0, res.err);
  CHECK(read_file(again / "labels.csv") == read_file(r.label / "labels.csv"));
  CHECK(read_file(again / "manifest.json") == read_file(r.label / "manifest.json"));

  auto synth_again = r.root / "synth-again";
  REQUIRE(run_cli({"synth", "--config", s(r.synth / "config.toml"), "--out", s(synth_again)}).code == 0);
  CHECK(read_file(synth_again / "corpus.jsonl") == read_file(r.synth / "corpus.jsonl"));
  CHECK(read_file(synth_again / "manifest.json") == read_file(r.synth / "manifest.json"));
}

TEST_CASE("ingest and stats") {
  const auto& r = planted_run();
  auto in = run_cli({"ingest", "--corpus", s(r.synth / "corpus.jsonl"), "--out", s(r.root / "ingest"),
                     "--log-level", "warn"});
  REQUIRE_MESSAGE(in.code == 0, in.err);
  CHECK(read_file(r.root / "ingest" / "corpus.jsonl") == read_file(r.synth / "corpus.jsonl"));
  auto st = run_cli({"stats", "--corpus", s(r.synth / "corpus.jsonl"), "--nlp", s(r.nlp / "nlp.json"), "--out",
                     s(r.root / "stats"), "--log-level", "warn"});
  REQUIRE_MESSAGE(st.code == 0, st.err);
  CHECK(fs::exists(r.root / "stats" / "ratio_histogram.csv"));
}
