#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tweetcraft::ml {

using Document = std::vector<std::string>;

struct LdaOptions {
  std::size_t topics = 5;
  // Non-positive means the default 50 / topics.
  double alpha = 0.0;
  double beta = 0.01;
  std::size_t iterations = 500;
  std::uint64_t seed = 0;
  // Gibbs sweeps used when folding in an unseen document.
  std::size_t inference_iterations = 50;
};

// Collapsed Gibbs sampler state after training.
class LdaModel {
 public:
  std::size_t topics() const { return topics_; }
  std::size_t vocabulary_size() const { return words_.size(); }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::vector<std::string>& words() const { return words_; }

  // n_kw, indexed [topic * V + word].
  const std::vector<std::int64_t>& topic_word() const { return topic_word_; }
  const std::vector<std::int64_t>& topic_totals() const { return topic_totals_; }
  // n_dk for the training documents, indexed [doc * K + topic].
  const std::vector<std::int64_t>& doc_topic() const { return doc_topic_; }
  std::size_t documents() const { return doc_lengths_.size(); }

  // (n_dk + alpha) / (n_d + K alpha) for training document `d`.
  std::vector<double> training_doc_topics(std::size_t d) const;

  // Throws std::logic_error if the count tables disagree with each other.
  void check_consistency() const;

  friend LdaModel lda_fit(const std::vector<Document>& docs, const LdaOptions& options);
  friend std::vector<double> lda_doc_topics(const LdaModel& model, const Document& doc);

 private:
  std::size_t topics_ = 0;
  double alpha_ = 0.0, beta_ = 0.0;
  std::uint64_t seed_ = 0;
  std::size_t inference_iterations_ = 50;
  std::vector<std::string> words_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::int64_t> topic_word_;
  std::vector<std::int64_t> topic_totals_;
  std::vector<std::int64_t> doc_topic_;
  std::vector<std::size_t> doc_lengths_;
  std::vector<std::vector<std::size_t>> assignments_;
  std::vector<std::vector<std::size_t>> doc_words_;
};

// Throws std::invalid_argument on an empty corpus or vocabulary.
LdaModel lda_fit(const std::vector<Document>& docs, const LdaOptions& options);

// Doc-topic distribution of an unseen document, by Gibbs fold-in with the
// topic-word counts held fixed. Unknown words are ignored; a document with no
// known words gets the uniform vector.
std::vector<double> lda_doc_topics(const LdaModel& model, const Document& doc);

// Index of the largest entry (ties -> lowest index).
std::size_t argmax(const std::vector<double>& values);

}  // namespace tweetcraft::ml
