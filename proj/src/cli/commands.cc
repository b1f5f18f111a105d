#include "tweetcraft/cli/commands.h"

#include <csignal>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "tweetcraft/cli/config.h"
#include "tweetcraft/cli/manifest.h"
#include "tweetcraft/common/rng.h"
#include "tweetcraft/corpus/corpus.h"
#include "tweetcraft/corpus/lexicon.h"
#include "tweetcraft/corpus/word_vectors.h"
#include "tweetcraft/eval/ablation.h"
#include "tweetcraft/eval/corpus_stats.h"
#include "tweetcraft/eval/synthetic.h"
#include "tweetcraft/influence/influence.h"
#include "tweetcraft/influence/labeling.h"
#include "tweetcraft/model/pipeline.h"
#include "tweetcraft/service/server.h"
#include "tweetcraft/text/conll.h"
#include "tweetcraft/text/keywords.h"

namespace tweetcraft::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Raw flag values; empty / unset means "keep the config value".
struct Flags {
  std::string config, corpus, out, group_method, model, features, serve_addr;
  std::string lexicon, vectors, annotated, nlp, labels, model_file, input, eval_models, log_level;
  std::uint64_t seed = 0;
  std::size_t k = 0, n = 0;
  double noise = -1.0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* noise_opt = nullptr;
};

void add_flags(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config, "TOML run configuration");
  f.seed_opt = sub.add_option("--seed", f.seed, "Master seed for every stochastic stage");
  sub.add_option("--corpus", f.corpus, "Corpus JSONL");
  sub.add_option("--out", f.out, "Run directory");
  sub.add_option("--group-method", f.group_method, "Grouping method")->check(CLI::IsMember({"binary", "emb", "topic"}));
  sub.add_option("--k", f.k, "Number of groups")->check(CLI::IsMember({3, 5, 7}));
  sub.add_option("--model", f.model, "Classifier")->check(CLI::IsMember({"maxent", "svm-linear", "svm-rbf"}));
  sub.add_option("--features", f.features, "Comma-separated feature families to keep");
  sub.add_option("--serve-addr", f.serve_addr, "host:port to listen on");
  sub.add_option("--lexicon", f.lexicon, "Sentiment lexicon TSV");
  sub.add_option("--vectors", f.vectors, "Word vectors (text format)");
  sub.add_option("--annotated", f.annotated, "Annotated posts (CoNLL-style) for tagger/parser training");
  sub.add_option("--nlp", f.nlp, "Trained tagger/parser (output of train-nlp)");
  sub.add_option("--labels", f.labels, "Labels CSV (output of label)");
  sub.add_option("--model-file", f.model_file, "Trained model (output of train)");
  sub.add_option("--input", f.input, "Records to predict (JSONL)");
  sub.add_option("--eval-models", f.eval_models, "Comma-separated: decoration, ngram, embedding");
  sub.add_option("--n", f.n, "Synthetic corpus size");
  f.noise_opt = sub.add_option("--noise", f.noise, "Synthetic label noise");
  sub.add_option("--log-level", f.log_level, "trace, debug, info, warn, error or off");
}

RunConfig resolve(const Flags& f) {
  RunConfig c = f.config.empty() ? RunConfig{} : load_config(f.config);
  if (f.seed_opt->count() > 0) {
    c.seed = f.seed;
    c.seed_set = true;
  }
  if (!f.corpus.empty()) c.paths.corpus = f.corpus;
  if (!f.out.empty()) c.out = f.out;
  if (!f.group_method.empty()) c.grouping.method = *influence::parse_group_method(f.group_method);
  if (f.k != 0) c.grouping.k = f.k;
  if (!f.model.empty()) c.classifier.kind = *eval::parse_classifier(f.model);
  if (!f.features.empty()) c.families = parse_family_list(f.features);
  if (!f.serve_addr.empty()) c.serve_addr = f.serve_addr;
  if (!f.lexicon.empty()) c.paths.lexicon = f.lexicon;
  if (!f.vectors.empty()) c.paths.vectors = f.vectors;
  if (!f.annotated.empty()) c.paths.annotated = f.annotated;
  if (!f.nlp.empty()) c.paths.nlp_model = f.nlp;
  if (!f.labels.empty()) c.paths.labels = f.labels;
  if (!f.model_file.empty()) c.paths.model = f.model_file;
  if (!f.input.empty()) c.paths.input = f.input;
  if (!f.log_level.empty()) c.log_level = f.log_level;
  if (f.n != 0) c.synth.n = f.n;
  if (f.noise_opt->count() > 0) c.synth.noise = f.noise;
  if (!f.eval_models.empty()) {
    c.eval_models.clear();
    std::stringstream ss(f.eval_models);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto m = eval::parse_feature_model(item);
      if (!m) throw ValidationError("--eval-models: unknown model '" + item + "'");
      c.eval_models.push_back(*m);
    }
  }
  if (c.grouping.k != 3 && c.grouping.k != 5 && c.grouping.k != 7) {
    throw ValidationError("grouping k must be 3, 5 or 7");
  }
  return c;
}

void setup_logging(const std::string& level) {
  auto logger = spdlog::get("tweetcraft");
  if (!logger) {
    logger = spdlog::stderr_logger_mt("tweetcraft");
    logger->set_pattern("[%l] %v");
  }
  spdlog::set_default_logger(logger);
  auto lvl = spdlog::level::from_str(level);
  if (lvl == spdlog::level::off && level != "off") throw ValidationError("unknown log level '" + level + "'");
  spdlog::set_level(lvl);
}

// Everything a subcommand needs plus the manifest it fills in.
struct Run {
  RunConfig cfg;
  Manifest manifest;
  std::ostream& out;

  fs::path dir() const { return cfg.out; }

  void require_seed() const {
    if (!cfg.seed_set) throw ValidationError("a seed is required (--seed or `seed` in the config)");
  }

  const fs::path& need(const fs::path& p, const char* what) const {
    if (p.empty()) throw ValidationError(std::string("missing path: ") + what);
    if (!fs::exists(p)) throw ValidationError(std::string(what) + " not found: " + p.generic_string());
    return p;
  }

  std::ofstream create(const std::string& name) const {
    std::ofstream f(dir() / name, std::ios::binary);
    if (!f) throw RuntimeFailure("cannot write " + (dir() / name).string());
    return f;
  }

  std::vector<corpus::TweetRecord> records(const fs::path& path, const char* role = "corpus") {
    manifest.add_input(role, need(path, role));
    auto load = corpus::load_corpus(path);
    for (const auto& d : load.diagnostics) spdlog::warn("{}: {}", path.generic_string(), to_string(d));
    if (load.records.empty()) throw ValidationError("no valid records in " + path.generic_string());
    return std::move(load.records);
  }

  corpus::SentimentLexicon lexicon() {
    if (cfg.paths.lexicon.empty()) {
      spdlog::warn("no sentiment lexicon given; the sentiment feature will be 0");
      return {};
    }
    manifest.add_input("lexicon", need(cfg.paths.lexicon, "lexicon"));
    auto load = corpus::load_sentiment_lexicon(cfg.paths.lexicon);
    for (const auto& d : load.diagnostics) spdlog::warn("lexicon: {}", to_string(d));
    return std::move(load.lexicon);
  }

  corpus::WordVectorTable vectors() {
    manifest.add_input("vectors", need(cfg.paths.vectors, "vectors"));
    auto load = corpus::load_word_vectors(cfg.paths.vectors);
    for (const auto& d : load.diagnostics) spdlog::warn("vectors: {}", to_string(d));
    return std::move(load.table);
  }

  text::Annotator annotator() {
    if (!cfg.paths.nlp_model.empty()) {
      manifest.add_input("nlp_model", need(cfg.paths.nlp_model, "nlp model"));
      std::ifstream in(cfg.paths.nlp_model, std::ios::binary);
      try {
        return text::Annotator::from_json(json::parse(in));
      } catch (const json::exception& e) {
        throw ValidationError("malformed nlp model: " + std::string(e.what()));
      }
    }
    if (!cfg.paths.annotated.empty()) {
      manifest.add_input("annotated", need(cfg.paths.annotated, "annotated data"));
      return train_nlp(text::load_annotated(cfg.paths.annotated));
    }
    throw ValidationError("need a tagger/parser: pass --nlp (from train-nlp) or --annotated");
  }

  text::Annotator train_nlp(const std::vector<text::ParsedTweet>& data) const {
    text::NlpTrainingOptions opt;
    opt.tagger_epochs = cfg.tagger_epochs;
    opt.parser_epochs = cfg.parser_epochs;
    opt.seed = derive_seed(cfg.seed, "nlp");
    return text::train_annotator(data, opt);
  }

  eval::Dataset dataset(const std::vector<corpus::TweetRecord>& recs, const text::Annotator& ann,
                        const corpus::SentimentLexicon& lex) {
    manifest.add_input("labels", need(cfg.paths.labels, "labels"));
    auto labels = influence::load_labels_csv(cfg.paths.labels);
    Diagnostics diags;
    auto ds = eval::build_dataset(recs, labels, ann, lex, &diags);
    if (!diags.empty()) spdlog::warn("{} feature diagnostics, first: {}", diags.size(), diags.front().message);
    return ds;
  }

  eval::CvConfig cv_config(eval::FeatureModel model = eval::FeatureModel::decoration) const {
    eval::CvConfig c;
    c.features = model;
    c.classifier = cfg.classifier;
    if (model == eval::FeatureModel::ngram) c.classifier.kind = eval::ClassifierKind::maxent;
    c.families = cfg.families;
    c.seed = derive_seed(cfg.seed, "cv");
    c.folds = cfg.folds;
    return c;
  }

  void output(const std::string& name) { manifest.add_output(dir(), name); }

  void finish() {
    {
      auto f = create("config.toml");
      f << config_without_out().to_toml();
    }
    output("config.toml");
    manifest.write(dir());
  }

  RunConfig config_without_out() const {
    RunConfig c = cfg;
    c.out.clear();
    return c;
  }
};

ordered_json manifest_config(const RunConfig& cfg) {
  auto j = cfg.to_json();
  j.erase("out");
  return j;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void cmd_ingest(Run& run) {
  const auto& path = run.need(run.cfg.paths.corpus, "corpus");
  run.manifest.add_input("corpus", path);
  auto load = corpus::load_corpus(path);
  {
    auto f = run.create("corpus.jsonl");
    corpus::write_corpus(f, load.records);
    auto d = run.create("diagnostics.txt");
    for (const auto& diag : load.diagnostics) d << to_string(diag) << '\n';
  }
  run.output("corpus.jsonl");
  run.output("diagnostics.txt");
  std::size_t finals = std::count_if(load.records.begin(), load.records.end(), [](auto& r) { return r.is_final(); });
  run.out << "lines " << load.lines_read << ", records " << load.records.size() << " (" << finals << " final), rejected "
          << load.diagnostics.size() << '\n';
  if (load.records.empty()) throw ValidationError("no valid records in " + path.generic_string());
}

void cmd_stats(Run& run) {
  auto recs = run.records(run.cfg.paths.corpus);
  auto stats = eval::corpus_stats(recs);
  {
    auto f = run.create("ratio_histogram.csv");
    eval::write_ratio_csv(f, stats);
    auto t = run.create("stats.txt");
    t << eval::format_stats_table(stats);
  }
  run.output("ratio_histogram.csv");
  run.output("stats.txt");
  run.out << eval::format_stats_table(stats);
}

void cmd_train_nlp(Run& run) {
  run.require_seed();
  const auto& path = run.need(run.cfg.paths.annotated, "annotated data");
  run.manifest.add_input("annotated", path);
  auto data = text::load_annotated(path);
  auto ann = run.train_nlp(data);
  {
    auto f = run.create("nlp.json");
    f << ann.to_json().dump() << '\n';
  }
  run.output("nlp.json");
  run.out << "trained tagger and parser on " << data.size() << " posts (" << ann.parser().skipped
          << " non-projective skipped)\n";
}

void cmd_label(Run& run) {
  run.require_seed();
  auto recs = run.records(run.cfg.paths.corpus);
  // Fail early, before any annotation work, if a record cannot be scored.
  for (const auto& r : recs) influence::influence_score(r);
  auto ann = run.annotator();
  std::optional<corpus::WordVectorTable> table;
  if (run.cfg.grouping.method == influence::GroupMethod::sim_emb) table = run.vectors();

  std::vector<influence::KeywordSet> keywords;
  keywords.reserve(recs.size());
  for (const auto& r : recs) keywords.push_back(ann.keywords(r.text));
  auto opt = run.cfg.grouping;
  opt.seed = derive_seed(run.cfg.seed, "grouping");
  auto result = influence::label_corpus(recs, keywords, opt, table ? &*table : nullptr);
  for (const auto& d : result.diagnostics) spdlog::warn("{}", d.message);
  {
    auto f = run.create("labels.csv");
    influence::write_labels_csv(f, result.examples);
  }
  run.output("labels.csv");

  std::map<std::size_t, std::array<std::size_t, 3>> summary;  // positive, negative, removed
  for (const auto& e : result.examples) {
    auto& s = summary[e.group];
    if (!e.retained) ++s[2];
    else if (e.label == influence::Label::positive) ++s[0];
    else if (e.label == influence::Label::negative) ++s[1];
  }
  run.out << "group  positive  negative  removed\n";
  for (const auto& [g, s] : summary) {
    char line[64];
    std::snprintf(line, sizeof line, "%5zu  %8zu  %8zu  %7zu\n", g, s[0], s[1], s[2]);
    run.out << line;
  }
}

void cmd_train(Run& run) {
  run.require_seed();
  auto recs = run.records(run.cfg.paths.corpus);
  auto ann = run.annotator();
  auto lex = run.lexicon();
  auto ds = run.dataset(recs, ann, lex);
  auto cv = eval::cross_validate(ds, run.cv_config());
  model::PipelineConfig pc;
  pc.classifier = run.cfg.classifier;
  pc.families = run.cfg.families;
  auto pipeline = model::TrainedPipeline::train(ds, ann, lex, pc);
  pipeline.set_training_metrics({{"cv_folds", run.cfg.folds},
                                 {"cv_precision", cv.mean.precision},
                                 {"cv_recall", cv.mean.recall},
                                 {"cv_f1", cv.mean.f1},
                                 {"examples", ds.size()}});
  pipeline.save(run.dir() / "model.json");
  run.output("model.json");
  run.out << "model " << pipeline.model_id() << " trained on " << ds.size() << " examples; cv f1 " << fmt4(cv.mean.f1)
          << '\n';
}

void cmd_eval(Run& run) {
  run.require_seed();
  auto recs = run.records(run.cfg.paths.corpus);
  auto ann = run.annotator();
  auto lex = run.lexicon();
  auto ds = run.dataset(recs, ann, lex);
  std::optional<corpus::WordVectorTable> table;
  std::string summary = "model,classifier,precision,recall,f1\n";
  std::string printed;
  char line[128];
  std::snprintf(line, sizeof line, "%-12s %-11s %9s %9s %9s\n", "model", "classifier", "precision", "recall", "f1");
  printed += line;
  for (auto m : run.cfg.eval_models) {
    if (m == eval::FeatureModel::embedding && !table) table = run.vectors();
    auto cfg = run.cv_config(m);
    auto cv = eval::cross_validate(ds, cfg, table ? &*table : nullptr);
    std::string name(eval::to_string(m));
    {
      auto f = run.create("cv_" + name + ".csv");
      eval::write_cv_csv(f, cv);
    }
    run.output("cv_" + name + ".csv");
    std::string clf(eval::to_string(cfg.classifier.kind));
    summary += name + "," + clf + "," + fmt4(cv.mean.precision) + "," + fmt4(cv.mean.recall) + "," + fmt4(cv.mean.f1) + "\n";
    std::snprintf(line, sizeof line, "%-12s %-11s %9.4f %9.4f %9.4f\n", name.c_str(), clf.c_str(), cv.mean.precision,
                  cv.mean.recall, cv.mean.f1);
    printed += line;
  }
  {
    auto f = run.create("eval.csv");
    f << summary;
  }
  run.output("eval.csv");
  run.out << printed;
}

void cmd_ablate(Run& run) {
  run.require_seed();
  auto recs = run.records(run.cfg.paths.corpus);
  auto ann = run.annotator();
  auto lex = run.lexicon();
  auto ds = run.dataset(recs, ann, lex);
  auto report = eval::ablate(ds, run.cv_config());
  {
    auto f = run.create("ablation.csv");
    eval::write_ablation_csv(f, report);
    auto t = run.create("ablation.txt");
    t << eval::format_ablation_table(report);
  }
  run.output("ablation.csv");
  run.output("ablation.txt");
  run.out << eval::format_ablation_table(report);
}

void cmd_predict(Run& run) {
  const auto& model_path = run.need(run.cfg.paths.model, "model");
  run.manifest.add_input("model", model_path);
  auto pipeline = model::TrainedPipeline::load(model_path);
  auto input = run.cfg.paths.input.empty() ? run.cfg.paths.corpus : run.cfg.paths.input;
  auto recs = run.records(input, "input");
  {
    auto f = run.create("predictions.csv");
    f << "id,label,score,decision\n";
    for (const auto& r : recs) {
      auto p = pipeline.predict(r);
      char buf[64];
      std::snprintf(buf, sizeof buf, ",%.17g,%.17g\n", p.score, p.decision);
      f << r.id << ',' << (p.label ? "positive" : "negative") << buf;
    }
  }
  run.output("predictions.csv");
  run.out << "predicted " << recs.size() << " records with model " << pipeline.model_id() << '\n';
}

void cmd_synth(Run& run) {
  run.require_seed();
  auto syn = eval::generate_synthetic(run.cfg.synth, run.cfg.seed);
  auto sample = eval::generate_annotated_sample(run.cfg.annotated_sample, run.cfg.seed);
  {
    auto f = run.create("corpus.jsonl");
    corpus::write_corpus(f, syn.records);
    auto g = run.create("gold.csv");
    g << "id,topic,exclamation,verified_mention,hook,planted,gold\n";
    for (std::size_t i = 0; i < syn.records.size(); ++i) {
      const auto& fa = syn.factors[i];
      g << syn.records[i].id << ',' << syn.topic[i] << ',' << fa.exclamation << ',' << fa.verified_mention << ','
        << fa.hook << ',' << syn.planted[i] << ',' << syn.gold[i] << '\n';
    }
    auto v = run.create("vectors.txt");
    corpus::write_word_vectors(v, syn.vectors);
    auto l = run.create("lexicon.tsv");
    corpus::write_sentiment_lexicon(l, syn.lexicon);
    auto a = run.create("annotated.conll");
    text::write_annotated(a, sample);
  }
  for (const char* name : {"corpus.jsonl", "gold.csv", "vectors.txt", "lexicon.tsv", "annotated.conll"}) {
    run.output(name);
  }
  run.out << "wrote " << syn.records.size() << " synthetic records and " << sample.size() << " annotated posts\n";
}

std::atomic<service::HttpServer*> g_server{nullptr};

void cmd_serve(const RunConfig& cfg, std::ostream& out) {
  std::shared_ptr<const model::TrainedPipeline> model;
  if (!cfg.paths.model.empty()) {
    model = std::make_shared<const model::TrainedPipeline>(model::TrainedPipeline::load(cfg.paths.model));
  } else {
    spdlog::warn("no model given; predictions return 503 until POST /v1/reload");
  }
  service::PredictionService svc(model);
  if (!cfg.paths.model.empty()) svc.set_model_path(cfg.paths.model);
  auto colon = cfg.serve_addr.rfind(':');
  if (colon == std::string::npos) throw ValidationError("--serve-addr must be host:port");
  std::string host = cfg.serve_addr.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(cfg.serve_addr.substr(colon + 1));
  } catch (const std::exception&) {
    throw ValidationError("--serve-addr has a bad port");
  }
  service::HttpServer server(svc, cfg.static_dir);
  int bound = server.bind(host, port);
  out << "listening on " << host << ':' << bound << std::endl;
  g_server = &server;
  auto stop = [](int) {
    if (auto* s = g_server.load()) s->stop();
  };
  std::signal(SIGINT, stop);
  std::signal(SIGTERM, stop);
  server.run();
  g_server = nullptr;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Predicts the influence of commercial posts from their decoration features.", "tweetcraft"};
  app.require_subcommand(1);
  std::map<std::string, Flags> flags;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"ingest", "Validate a corpus and write its clean records"},
      {"stats", "Favorite-to-retweet ratios and token-length statistics"},
      {"train-nlp", "Train the tagger and parser on annotated posts"},
      {"label", "Score, group, remove outliers and label a corpus"},
      {"train", "Train and save the decoration model"},
      {"eval", "Cross-validate the configured feature models"},
      {"ablate", "Cross-validate with each feature family removed"},
      {"predict", "Predict labels with a saved model"},
      {"synth", "Generate a planted-signal corpus"},
      {"serve", "Serve a saved model over HTTP"},
  };
  for (const auto& [name, help] : commands) add_flags(*app.add_subcommand(name, help), flags[name]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitValidation;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    RunConfig cfg = resolve(flags.at(command));
    setup_logging(cfg.log_level);
    if (command == "serve") {
      cmd_serve(cfg, out);
      return kExitOk;
    }
    fs::create_directories(cfg.out);
    Run run{cfg, Manifest(command, cfg.seed, manifest_config(cfg)), out};
    static const std::map<std::string, std::function<void(Run&)>> handlers = {
        {"ingest", cmd_ingest}, {"stats", cmd_stats}, {"train-nlp", cmd_train_nlp}, {"label", cmd_label},
        {"train", cmd_train},   {"eval", cmd_eval},   {"ablate", cmd_ablate},       {"predict", cmd_predict},
        {"synth", cmd_synth},
    };
    handlers.at(command)(run);
    run.finish();
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace tweetcraft::cli
