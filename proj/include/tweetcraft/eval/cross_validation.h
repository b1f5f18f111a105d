#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetcraft/common/matrix.h"
#include "tweetcraft/corpus/word_vectors.h"
#include "tweetcraft/eval/classifier.h"
#include "tweetcraft/eval/dataset.h"
#include "tweetcraft/eval/folds.h"
#include "tweetcraft/eval/metrics.h"
#include "tweetcraft/features/ngram.h"
#include "tweetcraft/features/schema.h"
#include "tweetcraft/ml/standardizer.h"

namespace tweetcraft::eval {

// decoration: the 30-column schema; ngram: binary 1-5-grams (MaxEnt only);
// embedding: mean pretrained word vector.
enum class FeatureModel { decoration, ngram, embedding };

std::string_view to_string(FeatureModel model);
std::optional<FeatureModel> parse_feature_model(std::string_view name);

struct CvConfig {
  FeatureModel features = FeatureModel::decoration;
  ClassifierConfig classifier;
  std::vector<features::Family> families{features::kAllFamilies.begin(), features::kAllFamilies.end()};
  std::uint64_t seed = 0;
  std::size_t folds = 5;
  std::size_t ngram_min_count = 2;
};

// Dense decoration rows with the families outside `families` zeroed.
Matrix decoration_matrix(const Dataset& ds, std::span<const std::size_t> rows,
                         const std::vector<features::Family>& families);

// Everything a fold learns from its training rows before the classifier.
struct FoldTransform {
  ml::Standardizer standardizer;       // decoration and embedding
  features::NGramVocabulary vocabulary;  // ngram
};

FoldTransform fit_fold_transform(const Dataset& ds, std::span<const std::size_t> train, const CvConfig& config,
                                 const corpus::WordVectorTable* vectors = nullptr);

struct CvResult {
  Metrics mean;
  std::vector<Metrics> folds;
};

// Stratified k-fold CV; vocabulary, standardizer and classifier are refit on
// each fold's training rows. Throws ValidationError for unsupported
// combinations (n-gram with an SVM, embedding without vectors).
CvResult cross_validate(const Dataset& ds, const CvConfig& config, const corpus::WordVectorTable* vectors = nullptr);

void write_cv_csv(std::ostream& out, const CvResult& result);
std::string format_cv_table(const CvResult& result);

}  // namespace tweetcraft::eval
