#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tweetcraft/corpus/corpus.h"
#include "tweetcraft/corpus/lexicon.h"
#include "tweetcraft/corpus/word_vectors.h"
#include "tweetcraft/features/schema.h"
#include "tweetcraft/text/parser.h"

namespace tweetcraft::eval {

// Planted-signal corpus description. Each signal family has one binary
// factor:
//   punctuation - the post ends with '!' instead of '.'
//   mentions    - the single mentioned account is verified with 1e6-1e7
//                 followers (otherwise unverified with 1e2-1e3)
//   complexity  - a hook of two one-word fragments ("deals. exclusive.")
//                 precedes the body, adding two parse roots
// A post is planted-positive when more than half of the signal factors are
// on. Factors of families outside the signal set are drawn at random.
struct SyntheticSpec {
  std::size_t n = 2000;
  double noise = 0.1;  // share of labels flipped, in balanced pairs per topic
  double length_mean = 15.2;
  double length_sd = 5.1;
  std::size_t topics = 5;
  std::vector<features::Family> signal_families{features::Family::punctuation, features::Family::mentions,
                                                features::Family::complexity};
};

struct PlantedFactors {
  bool exclamation = false;
  bool verified_mention = false;
  bool hook = false;
};

struct SyntheticCorpus {
  std::vector<corpus::TweetRecord> records;
  std::vector<std::size_t> topic;
  std::vector<PlantedFactors> factors;
  std::vector<int> planted;  // label implied by the factors
  std::vector<int> gold;     // label after noise; what median-split labeling yields
  std::vector<text::ParsedTweet> annotations;  // gold tags and heads per record
  corpus::WordVectorTable vectors;
  corpus::SentimentLexicon lexicon;
};

// Throws ValidationError for noise outside [0, 0.5), n < 2 * topics, or a
// signal family without a planted factor.
SyntheticCorpus generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

// Gold-annotated posts from the same grammar, for tagger/parser training.
std::vector<text::ParsedTweet> generate_annotated_sample(std::size_t n, std::uint64_t seed);

// Number of signal factors on in `f` among `families`.
std::size_t count_factors(const PlantedFactors& f, const std::vector<features::Family>& families);

}  // namespace tweetcraft::eval
