#include "tweetcraft/eval/cross_validation.h"

#include <cstdio>
#include <ostream>

#include "tweetcraft/common/rng.h"
#include "tweetcraft/features/embedding.h"

namespace tweetcraft::eval {

namespace {

Matrix embedding_matrix(const Dataset& ds, std::span<const std::size_t> rows, const corpus::WordVectorTable& table) {
  Matrix X(0, table.dimension());
  for (auto i : rows) X.append_row(features::featurize_embedding(table, ds.examples[i].tweet));
  return X;
}

std::vector<int> labels_of(const Dataset& ds, std::span<const std::size_t> rows) {
  std::vector<int> y;
  y.reserve(rows.size());
  for (auto i : rows) y.push_back(ds.examples[i].label);
  return y;
}

void check_supported(const CvConfig& config, const corpus::WordVectorTable* vectors) {
  if (config.features == FeatureModel::ngram && config.classifier.kind != ClassifierKind::maxent) {
    throw ValidationError("the n-gram model is trained with maxent only");
  }
  if (config.features == FeatureModel::embedding && !vectors) {
    throw ValidationError("the embedding model needs a word-vector table");
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string_view to_string(FeatureModel model) {
  switch (model) {
    case FeatureModel::decoration: return "decoration";
    case FeatureModel::ngram: return "ngram";
    case FeatureModel::embedding: return "embedding";
  }
  return "?";
}

std::optional<FeatureModel> parse_feature_model(std::string_view name) {
  if (name == "decoration") return FeatureModel::decoration;
  if (name == "ngram") return FeatureModel::ngram;
  if (name == "embedding") return FeatureModel::embedding;
  return std::nullopt;
}

Matrix decoration_matrix(const Dataset& ds, std::span<const std::size_t> rows,
                         const std::vector<features::Family>& families) {
  Matrix X(0, features::kDecorationDims);
  for (auto i : rows) {
    auto v = ds.examples[i].decoration;
    features::mask_families(v, families);
    X.append_row(v);
  }
  return X;
}

FoldTransform fit_fold_transform(const Dataset& ds, std::span<const std::size_t> train, const CvConfig& config,
                                 const corpus::WordVectorTable* vectors) {
  check_supported(config, vectors);
  FoldTransform t;
  switch (config.features) {
    case FeatureModel::decoration:
      t.standardizer = ml::standardize_fit(decoration_matrix(ds, train, config.families),
                                           features::FeatureSchema::decoration().continuous_mask());
      break;
    case FeatureModel::embedding:
      t.standardizer =
          ml::standardize_fit(embedding_matrix(ds, train, *vectors), std::vector<bool>(vectors->dimension(), true));
      break;
    case FeatureModel::ngram: {
      std::vector<text::TokenizedTweet> tweets;
      tweets.reserve(train.size());
      for (auto i : train) tweets.push_back(ds.examples[i].tweet);
      t.vocabulary = features::fit_ngram_vocab(tweets, config.ngram_min_count);
      break;
    }
  }
  return t;
}

CvResult cross_validate(const Dataset& ds, const CvConfig& config, const corpus::WordVectorTable* vectors) {
  check_supported(config, vectors);
  auto labels = ds.labels();
  auto groups = ds.groups();
  auto split = kfold_split(labels, groups, derive_seed(config.seed, "folds"), config.folds);

  CvResult result;
  for (std::size_t f = 0; f < config.folds; ++f) {
    auto train = split.train_indices(f);
    auto test = split.test_indices(f);
    auto transform = fit_fold_transform(ds, train, config, vectors);
    auto y_train = labels_of(ds, train);
    auto y_test = labels_of(ds, test);
    std::vector<int> y_pred;
    y_pred.reserve(test.size());

    if (config.features == FeatureModel::ngram) {
      std::vector<SparseVector> Xtr, Xte;
      for (auto i : train) Xtr.push_back(features::featurize_ngrams(transform.vocabulary, ds.examples[i].tweet));
      for (auto i : test) Xte.push_back(features::featurize_ngrams(transform.vocabulary, ds.examples[i].tweet));
      auto model = ml::logreg_fit(Xtr, transform.vocabulary.size(), y_train, config.classifier.logistic);
      for (const auto& x : Xte) y_pred.push_back(model.decision(x) >= 0.0 ? 1 : 0);
    } else {
      Matrix Xtr, Xte;
      if (config.features == FeatureModel::decoration) {
        Xtr = decoration_matrix(ds, train, config.families);
        Xte = decoration_matrix(ds, test, config.families);
      } else {
        Xtr = embedding_matrix(ds, train, *vectors);
        Xte = embedding_matrix(ds, test, *vectors);
      }
      Xtr = transform.standardizer.apply(Xtr);
      Xte = transform.standardizer.apply(Xte);
      auto clf = train_classifier(Xtr, y_train, config.classifier);
      for (std::size_t r = 0; r < Xte.rows(); ++r) y_pred.push_back(clf.predict(Xte.row(r)));
    }
    result.folds.push_back(compute_metrics(y_test, y_pred));
  }
  result.mean = mean_metrics(result.folds);
  return result;
}

void write_cv_csv(std::ostream& out, const CvResult& result) {
  out << "fold,precision,recall,f1,tp,fp,fn,tn\n";
  auto row = [&](const std::string& name, const Metrics& m) {
    out << name << ',' << fmt(m.precision) << ',' << fmt(m.recall) << ',' << fmt(m.f1) << ',' << m.tp << ',' << m.fp
        << ',' << m.fn << ',' << m.tn << '\n';
  };
  for (std::size_t f = 0; f < result.folds.size(); ++f) row(std::to_string(f), result.folds[f]);
  row("mean", result.mean);
}

std::string format_cv_table(const CvResult& result) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%-6s %9s %9s %9s\n", "fold", "precision", "recall", "f1");
  out += line;
  auto row = [&](const std::string& name, const Metrics& m) {
    std::snprintf(line, sizeof line, "%-6s %9.4f %9.4f %9.4f\n", name.c_str(), m.precision, m.recall, m.f1);
    out += line;
  };
  for (std::size_t f = 0; f < result.folds.size(); ++f) row(std::to_string(f), result.folds[f]);
  row("mean", result.mean);
  return out;
}

}  // namespace tweetcraft::eval
