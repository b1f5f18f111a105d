#include "tweetcraft/ml/lda.h"

#include <random>
#include <stdexcept>

namespace tweetcraft::ml {

namespace {

std::size_t sample(std::vector<double>& weights, std::mt19937_64& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  double target = std::uniform_real_distribution<double>(0.0, total)(rng);
  double acc = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    acc += weights[k];
    if (target < acc) return k;
  }
  return weights.size() - 1;
}

}  // namespace

std::size_t argmax(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

std::vector<double> LdaModel::training_doc_topics(std::size_t d) const {
  std::vector<double> theta(topics_);
  double denom = static_cast<double>(doc_lengths_[d]) + topics_ * alpha_;
  for (std::size_t k = 0; k < topics_; ++k) theta[k] = (doc_topic_[d * topics_ + k] + alpha_) / denom;
  return theta;
}

void LdaModel::check_consistency() const {
  const std::size_t V = words_.size();
  for (std::size_t k = 0; k < topics_; ++k) {
    std::int64_t sum = 0;
    for (std::size_t w = 0; w < V; ++w) {
      if (topic_word_[k * V + w] < 0) throw std::logic_error("negative topic-word count");
      sum += topic_word_[k * V + w];
    }
    if (sum != topic_totals_[k]) throw std::logic_error("topic-word counts do not sum to topic total");
  }
  for (std::size_t d = 0; d < doc_lengths_.size(); ++d) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < topics_; ++k) {
      if (doc_topic_[d * topics_ + k] < 0) throw std::logic_error("negative doc-topic count");
      sum += doc_topic_[d * topics_ + k];
    }
    if (sum != static_cast<std::int64_t>(doc_lengths_[d])) throw std::logic_error("doc-topic counts do not sum to doc length");
  }
}

LdaModel lda_fit(const std::vector<Document>& docs, const LdaOptions& options) {
  if (docs.empty()) throw std::invalid_argument("LDA needs a non-empty corpus");
  if (options.topics < 1) throw std::invalid_argument("LDA needs at least one topic");
  LdaModel m;
  m.topics_ = options.topics;
  m.alpha_ = options.alpha > 0.0 ? options.alpha : 50.0 / static_cast<double>(options.topics);
  m.beta_ = options.beta;
  m.seed_ = options.seed;
  m.inference_iterations_ = options.inference_iterations;

  for (const auto& doc : docs) {
    for (const auto& w : doc) m.index_.emplace(w, 0);
  }
  if (m.index_.empty()) throw std::invalid_argument("LDA needs a non-empty vocabulary");
  for (auto& [w, idx] : m.index_) {
    idx = m.words_.size();
    m.words_.push_back(w);
  }

  const std::size_t K = m.topics_, V = m.words_.size(), D = docs.size();
  m.topic_word_.assign(K * V, 0);
  m.topic_totals_.assign(K, 0);
  m.doc_topic_.assign(D * K, 0);
  m.doc_lengths_.resize(D);
  m.assignments_.resize(D);
  m.doc_words_.resize(D);

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> any_topic(0, K - 1);
  for (std::size_t d = 0; d < D; ++d) {
    m.doc_lengths_[d] = docs[d].size();
    for (const auto& w : docs[d]) {
      std::size_t wi = m.index_.at(w), z = any_topic(rng);
      m.doc_words_[d].push_back(wi);
      m.assignments_[d].push_back(z);
      ++m.topic_word_[z * V + wi];
      ++m.topic_totals_[z];
      ++m.doc_topic_[d * K + z];
    }
  }

  const double vbeta = static_cast<double>(V) * m.beta_;
  std::vector<double> weights(K);
  for (std::size_t it = 0; it < options.iterations; ++it) {
    for (std::size_t d = 0; d < D; ++d) {
      for (std::size_t t = 0; t < m.doc_words_[d].size(); ++t) {
        std::size_t wi = m.doc_words_[d][t], z = m.assignments_[d][t];
        --m.topic_word_[z * V + wi];
        --m.topic_totals_[z];
        --m.doc_topic_[d * K + z];
        for (std::size_t k = 0; k < K; ++k) {
          weights[k] = (m.doc_topic_[d * K + k] + m.alpha_) * (m.topic_word_[k * V + wi] + m.beta_) /
                       (m.topic_totals_[k] + vbeta);
        }
        z = sample(weights, rng);
        m.assignments_[d][t] = z;
        ++m.topic_word_[z * V + wi];
        ++m.topic_totals_[z];
        ++m.doc_topic_[d * K + z];
      }
    }
    m.check_consistency();
  }
  return m;
}

std::vector<double> lda_doc_topics(const LdaModel& model, const Document& doc) {
  const std::size_t K = model.topics_, V = model.words_.size();
  std::vector<std::size_t> known;
  for (const auto& w : doc) {
    auto it = model.index_.find(w);
    if (it != model.index_.end()) known.push_back(it->second);
  }
  if (known.empty()) return std::vector<double>(K, 1.0 / static_cast<double>(K));

  std::mt19937_64 rng(model.seed_ ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> any_topic(0, K - 1);
  std::vector<std::size_t> z(known.size());
  std::vector<std::int64_t> ndk(K, 0);
  for (auto& zi : z) ++ndk[zi = any_topic(rng)];

  const double vbeta = static_cast<double>(V) * model.beta_;
  std::vector<double> weights(K);
  for (std::size_t it = 0; it < model.inference_iterations_; ++it) {
    for (std::size_t t = 0; t < known.size(); ++t) {
      --ndk[z[t]];
      for (std::size_t k = 0; k < K; ++k) {
        weights[k] = (ndk[k] + model.alpha_) * (model.topic_word_[k * V + known[t]] + model.beta_) /
                     (model.topic_totals_[k] + vbeta);
      }
      z[t] = sample(weights, rng);
      ++ndk[z[t]];
    }
  }
  std::vector<double> theta(K);
  double denom = static_cast<double>(known.size()) + K * model.alpha_;
  for (std::size_t k = 0; k < K; ++k) theta[k] = (ndk[k] + model.alpha_) / denom;
  return theta;
}

}  // namespace tweetcraft::ml
