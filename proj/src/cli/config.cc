#include "tweetcraft/cli/config.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "tweetcraft/common/error.h"

namespace tweetcraft::cli {

namespace {

using nlohmann::ordered_json;

const std::map<std::string, std::set<std::string>> kKnownKeys = {
    {"", {"seed", "out", "paths", "grouping", "classifier", "features", "eval", "nlp", "synth", "serve"}},
    {"paths", {"corpus", "lexicon", "vectors", "annotated", "nlp_model", "labels", "model", "input"}},
    {"grouping", {"method", "k", "restarts", "lda_iterations"}},
    {"classifier", {"model", "C", "gamma", "tol", "l2_lambda", "learning_rate", "epochs"}},
    {"features", {"families"}},
    {"eval", {"models", "folds"}},
    {"nlp", {"tagger_epochs", "parser_epochs"}},
    {"synth", {"n", "noise", "topics", "length_mean", "length_sd", "signal", "annotated_sample"}},
    {"serve", {"addr", "static_dir", "log_level"}},
};

[[noreturn]] void bad(const std::string& source, const std::string& key, const std::string& why) {
  throw ValidationError(source + ": " + key + " " + why);
}

void check_keys(const toml::table& t, const std::string& section, const std::string& source) {
  const auto& known = kKnownKeys.at(section);
  for (const auto& [k, v] : t) {
    std::string key(k.str());
    if (!known.contains(key)) bad(source, section.empty() ? key : section + "." + key, "is not a known setting");
    if (section.empty() && kKnownKeys.contains(key)) {
      if (!v.is_table()) bad(source, key, "must be a table");
      check_keys(*v.as_table(), key, source);
    }
  }
}

template <class T>
void read(const toml::table& root, const char* section, const char* key, T& out, const std::string& source) {
  const toml::node* node = section ? root.at_path(std::string(section) + "." + key).node() : root.get(key);
  if (!node) return;
  std::string name = section ? std::string(section) + "." + key : key;
  if constexpr (std::is_same_v<T, std::string> || std::is_same_v<T, std::filesystem::path>) {
    auto v = node->value<std::string>();
    if (!v) bad(source, name, "must be a string");
    out = *v;
  } else if constexpr (std::is_same_v<T, double>) {
    auto v = node->value<double>();
    if (!v) bad(source, name, "must be a number");
    out = *v;
  } else {
    auto v = node->value<std::int64_t>();
    if (!v || *v < 0) bad(source, name, "must be a non-negative integer");
    out = static_cast<T>(*v);
  }
}

std::vector<std::string> read_strings(const toml::table& root, const std::string& path, const std::string& source) {
  const toml::node* node = root.at_path(path).node();
  std::vector<std::string> out;
  if (!node) return out;
  const auto* arr = node->as_array();
  if (!arr) bad(source, path, "must be an array of strings");
  for (const auto& el : *arr) {
    auto v = el.value<std::string>();
    if (!v) bad(source, path, "must be an array of strings");
    out.push_back(*v);
  }
  return out;
}

std::vector<features::Family> to_families(const std::vector<std::string>& names, const std::string& where) {
  std::vector<features::Family> out;
  for (const auto& n : names) {
    auto f = features::parse_family(n);
    if (!f) throw ValidationError(where + ": unknown feature family '" + n + "'");
    if (std::find(out.begin(), out.end(), *f) == out.end()) out.push_back(*f);
  }
  return out;
}

ordered_json family_names(const std::vector<features::Family>& fams) {
  ordered_json a = ordered_json::array();
  for (auto f : fams) a.push_back(features::to_string(f));
  return a;
}

}  // namespace

std::vector<features::Family> parse_family_list(std::string_view list) {
  std::vector<std::string> names;
  std::stringstream ss{std::string(list)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return to_families(names, "--features");
}

RunConfig parse_config(std::string_view toml_text, const std::string& source) {
  toml::table root;
  try {
    root = toml::parse(toml_text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << source << ": " << e.description() << " at line " << e.source().begin.line;
    throw ValidationError(msg.str());
  }
  check_keys(root, "", source);

  RunConfig c;
  if (root.contains("seed")) {
    read(root, nullptr, "seed", c.seed, source);
    c.seed_set = true;
  }
  read(root, nullptr, "out", c.out, source);

  read(root, "paths", "corpus", c.paths.corpus, source);
  read(root, "paths", "lexicon", c.paths.lexicon, source);
  read(root, "paths", "vectors", c.paths.vectors, source);
  read(root, "paths", "annotated", c.paths.annotated, source);
  read(root, "paths", "nlp_model", c.paths.nlp_model, source);
  read(root, "paths", "labels", c.paths.labels, source);
  read(root, "paths", "model", c.paths.model, source);
  read(root, "paths", "input", c.paths.input, source);

  std::string method;
  read(root, "grouping", "method", method, source);
  if (!method.empty()) {
    auto m = influence::parse_group_method(method);
    if (!m) bad(source, "grouping.method", "must be binary, emb or topic");
    c.grouping.method = *m;
  }
  read(root, "grouping", "k", c.grouping.k, source);
  read(root, "grouping", "restarts", c.grouping.kmeans_restarts, source);
  read(root, "grouping", "lda_iterations", c.grouping.lda_iterations, source);

  std::string model;
  read(root, "classifier", "model", model, source);
  if (!model.empty()) {
    auto k = eval::parse_classifier(model);
    if (!k) bad(source, "classifier.model", "must be maxent, svm-linear or svm-rbf");
    c.classifier.kind = *k;
  }
  read(root, "classifier", "C", c.classifier.C, source);
  read(root, "classifier", "gamma", c.classifier.gamma, source);
  read(root, "classifier", "tol", c.classifier.svm_tol, source);
  read(root, "classifier", "l2_lambda", c.classifier.logistic.l2_lambda, source);
  read(root, "classifier", "learning_rate", c.classifier.logistic.learning_rate, source);
  read(root, "classifier", "epochs", c.classifier.logistic.epochs, source);

  if (root.at_path("features.families").node()) {
    c.families = to_families(read_strings(root, "features.families", source), source);
  }
  if (root.at_path("eval.models").node()) {
    c.eval_models.clear();
    for (const auto& name : read_strings(root, "eval.models", source)) {
      auto m = eval::parse_feature_model(name);
      if (!m) bad(source, "eval.models", "entries must be decoration, ngram or embedding");
      c.eval_models.push_back(*m);
    }
  }
  read(root, "eval", "folds", c.folds, source);

  read(root, "nlp", "tagger_epochs", c.tagger_epochs, source);
  read(root, "nlp", "parser_epochs", c.parser_epochs, source);

  read(root, "synth", "n", c.synth.n, source);
  read(root, "synth", "noise", c.synth.noise, source);
  read(root, "synth", "topics", c.synth.topics, source);
  read(root, "synth", "length_mean", c.synth.length_mean, source);
  read(root, "synth", "length_sd", c.synth.length_sd, source);
  read(root, "synth", "annotated_sample", c.annotated_sample, source);
  if (root.at_path("synth.signal").node()) {
    c.synth.signal_families = to_families(read_strings(root, "synth.signal", source), source);
  }

  read(root, "serve", "addr", c.serve_addr, source);
  read(root, "serve", "static_dir", c.static_dir, source);
  read(root, "serve", "log_level", c.log_level, source);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

ordered_json RunConfig::to_json() const {
  ordered_json models = ordered_json::array();
  for (auto m : eval_models) models.push_back(eval::to_string(m));
  return ordered_json{
      {"seed", seed},
      {"out", out.generic_string()},
      {"paths",
       {{"corpus", paths.corpus.generic_string()},
        {"lexicon", paths.lexicon.generic_string()},
        {"vectors", paths.vectors.generic_string()},
        {"annotated", paths.annotated.generic_string()},
        {"nlp_model", paths.nlp_model.generic_string()},
        {"labels", paths.labels.generic_string()},
        {"model", paths.model.generic_string()},
        {"input", paths.input.generic_string()}}},
      {"grouping",
       {{"method", influence::to_string(grouping.method)},
        {"k", grouping.k},
        {"restarts", grouping.kmeans_restarts},
        {"lda_iterations", grouping.lda_iterations}}},
      {"classifier",
       {{"model", eval::to_string(classifier.kind)},
        {"C", classifier.C},
        {"gamma", classifier.gamma},
        {"tol", classifier.svm_tol},
        {"l2_lambda", classifier.logistic.l2_lambda},
        {"learning_rate", classifier.logistic.learning_rate},
        {"epochs", classifier.logistic.epochs}}},
      {"features", {{"families", family_names(families)}}},
      {"eval", {{"models", models}, {"folds", folds}}},
      {"nlp", {{"tagger_epochs", tagger_epochs}, {"parser_epochs", parser_epochs}}},
      {"synth",
       {{"n", synth.n},
        {"noise", synth.noise},
        {"topics", synth.topics},
        {"length_mean", synth.length_mean},
        {"length_sd", synth.length_sd},
        {"signal", family_names(synth.signal_families)},
        {"annotated_sample", annotated_sample}}},
      {"serve", {{"addr", serve_addr}, {"static_dir", static_dir.generic_string()}, {"log_level", log_level}}}};
}

std::string RunConfig::to_toml() const {
  // JSON and TOML share scalar and array syntax for everything stored here,
  // so the sections can be rendered from the JSON form.
  auto j = to_json();
  std::ostringstream out;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() || (v.is_string() && v.get<std::string>().empty())) continue;
    out << k << " = " << v.dump() << '\n';
  }
  for (const auto& [k, v] : j.items()) {
    if (!v.is_object()) continue;
    out << '\n' << '[' << k << "]\n";
    for (const auto& [kk, vv] : v.items()) {
      if (vv.is_string() && vv.get<std::string>().empty()) continue;
      out << kk << " = " << vv.dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace tweetcraft::cli
