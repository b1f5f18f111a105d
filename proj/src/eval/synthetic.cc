#include "tweetcraft/eval/synthetic.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "tweetcraft/common/rng.h"
#include "tweetcraft/text/conll.h"

namespace tweetcraft::eval {

namespace {

using text::PosTag;
using features::Family;

const std::vector<std::vector<std::string>> kTopicNouns = {
    {"flights", "hotel", "resort", "cruise", "beach", "vacation", "luggage", "passport", "airport", "island",
     "getaway", "suite", "tour", "lounge", "cabin", "itinerary"},
    {"pizza", "burger", "coffee", "latte", "sandwich", "salad", "dessert", "breakfast", "taco", "donut", "smoothie",
     "bakery", "cookies", "pasta", "noodles", "espresso"},
    {"laptop", "phone", "tablet", "headphones", "charger", "camera", "speaker", "smartwatch", "console", "keyboard",
     "monitor", "router", "earbuds", "gadget", "drone", "printer"},
    {"jacket", "sneakers", "dress", "jeans", "boots", "scarf", "handbag", "sweater", "hoodie", "sunglasses", "denim",
     "blazer", "sandals", "necklace", "bracelet", "outfit"},
    {"policy", "coverage", "quote", "premium", "mortgage", "claim", "deposit", "insurance", "loan", "checking",
     "annuity", "pension", "retirement", "budget", "investment", "portfolio"},
    {"tickets", "concert", "festival", "stadium", "playoffs", "season", "jersey", "arena", "tournament", "league",
     "marathon", "gym", "fitness", "yoga", "workout", "bike"},
    {"sofa", "mattress", "pillow", "lamp", "rug", "curtains", "kitchen", "blender", "cookware", "furniture", "garden",
     "patio", "grill", "candles", "decor", "bedding"},
};
const std::vector<std::string> kGenericNouns = {"deal",  "offer",  "sale",      "price",   "weekend",  "discount",
                                                "gift",  "collection", "store", "members", "friends",  "family",
                                                "event", "raffle", "rewards",   "points",  "shipping", "prizes"};
const std::vector<std::string> kVerbs = {"grab",  "enjoy", "discover", "explore", "try",     "get",
                                         "save",  "shop",  "book",     "order",   "join",    "visit",
                                         "check", "find",  "upgrade",  "treat",   "unlock",  "celebrate"};
const std::vector<std::string> kAdjectives = {"new",   "fresh", "limited", "exclusive", "special", "summer",
                                              "daily", "big",   "weekly",  "bold",      "classic", "local",
                                              "bright", "smart", "early",  "premium"};
const std::vector<std::pair<std::string, double>> kSentimentAdjectives = {
    {"amazing", 4}, {"great", 3},    {"awesome", 4}, {"happy", 3},    {"perfect", 3},  {"lovely", 3},
    {"fantastic", 4}, {"awful", -4}, {"terrible", -3}, {"boring", -2}, {"sad", -2},    {"bad", -3},
    {"worst", -3},  {"annoying", -2}, {"crazy", -1}, {"wild", 1}};
const std::vector<std::string> kAdverbs = {"now", "today", "soon", "together", "instantly", "finally",
                                           "easily", "quickly", "tonight"};
const std::vector<std::string> kDeterminers = {"the", "our", "your", "this", "a"};
const std::vector<std::string> kPrepositions = {"for", "with", "at", "on", "from", "in"};
const std::vector<std::string> kNumbers = {"$5", "$10", "$20", "50%", "2", "3", "24/7", "$99", "30%", "10"};
const std::vector<std::string> kHashtags = {"#deals", "#sale", "#weekend", "#giveaway", "#new", "#shoplocal",
                                            "#travel", "#foodie", "#tech", "#style", "#win"};

constexpr double kPosLow = 0.02, kPosHigh = 0.04;
constexpr double kNegLow = 0.002, kNegHigh = 0.018;
constexpr std::size_t kBodyMin = 8, kBodyMax = 26;
constexpr std::size_t kHookTokens = 4;
constexpr std::size_t kVectorDim = 25;

template <class T>
const T& pick(const std::vector<T>& pool, std::mt19937_64& rng) {
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

// Token with a gold tag and a head given as a token index (-1 = root).
struct GTok {
  std::string text;
  PosTag tag;
  long head;
};

struct Phrase {
  std::vector<GTok> toks;
  // Appends and returns the index of the new token.
  long add(std::string text, PosTag tag, long head) {
    toks.push_back({std::move(text), tag, head});
    return static_cast<long>(toks.size()) - 1;
  }
};

struct BodyPlan {
  std::size_t topic = 0;
  std::size_t length = 0;  // body tokens, hook excluded
  bool exclamation = false;
  bool hook = false;
  bool mention_first = true;
  std::string mention;
  bool hashtag = false, url = false, number = false, sentiment = false;
};

// Shares of noun / adjective / verb / adverb used for hook fragments; they
// follow the body's own mix so the hook moves no part-of-speech share.
constexpr std::array<double, 4> kHookCategoryWeights = {0.55, 0.22, 0.12, 0.11};

// Builds hook + body. Arcs are projective by construction.
Phrase build_post(const BodyPlan& plan, std::mt19937_64& rng) {
  Phrase p;
  if (plan.hook) {
    std::discrete_distribution<int> cat(kHookCategoryWeights.begin(), kHookCategoryWeights.end());
    for (int f = 0; f < 2; ++f) {
      long root;
      switch (cat(rng)) {
        case 0: root = p.add(pick(kGenericNouns, rng), PosTag::common_noun, -1); break;
        case 1: root = p.add(pick(kAdjectives, rng), PosTag::adjective, -1); break;
        case 2: root = p.add(pick(kVerbs, rng), PosTag::verb, -1); break;
        default: root = p.add(pick(kAdverbs, rng), PosTag::adverb, -1); break;
      }
      p.add(".", PosTag::punct, root);
    }
  }

  // Content slots filled after the fixed tokens are counted.
  std::size_t fixed = 4 + plan.hashtag + plan.url + plan.number + plan.sentiment;
  std::size_t spare = plan.length - fixed;

  struct NP {
    bool det = false;
    std::vector<std::string> adjectives;  // includes the sentiment adjective
    std::vector<std::string> compounds;
    std::string number;
    std::string head;
  };
  NP object;
  object.head = pick(kTopicNouns[plan.topic], rng);
  if (plan.number) object.number = pick(kNumbers, rng);
  if (plan.sentiment) object.adjectives.push_back(pick(kSentimentAdjectives, rng).first);
  std::vector<std::pair<std::string, NP>> pps;
  bool adverb = false;
  std::string adverb_word;

  int misses = 0;
  while (spare > 0) {
    int choice = std::uniform_int_distribution<int>(0, 5)(rng);
    if (choice == 0 && spare >= 2 && pps.size() < 2) {
      NP np;
      np.head = coin(rng) ? pick(kTopicNouns[plan.topic], rng) : pick(kGenericNouns, rng);
      pps.emplace_back(pick(kPrepositions, rng), std::move(np));
      spare -= 2;
    } else if (choice == 1 && !object.det) {
      object.det = true;
      --spare;
    } else if (choice == 2 && !adverb) {
      adverb = true;
      adverb_word = pick(kAdverbs, rng);
      --spare;
    } else if (choice == 3 && object.adjectives.size() < 2) {
      object.adjectives.push_back(pick(kAdjectives, rng));
      --spare;
    } else if (choice == 4 && object.compounds.size() < 1) {
      object.compounds.push_back(pick(kGenericNouns, rng));
      --spare;
    } else if (choice == 5 && !pps.empty()) {
      auto& np = pps[std::uniform_int_distribution<std::size_t>(0, pps.size() - 1)(rng)].second;
      if (!np.det) np.det = true;
      else if (np.adjectives.empty()) np.adjectives.push_back(pick(kAdjectives, rng));
      else {
        ++misses;
        continue;
      }
      --spare;
    } else if (++misses > 64) {
      // Nothing else fits: lengthen with another object adjective.
      object.adjectives.push_back(pick(kAdjectives, rng));
      --spare;
    }
  }

  // Emits an NP whose head attaches to `head`; returns the head index.
  auto emit_np = [&](const NP& np, long head) {
    std::vector<long> mods;
    if (np.det) mods.push_back(p.add(pick(kDeterminers, rng), PosTag::other, 0));
    if (!np.number.empty()) mods.push_back(p.add(np.number, PosTag::other, 0));
    for (const auto& a : np.adjectives) mods.push_back(p.add(a, PosTag::adjective, 0));
    for (const auto& c : np.compounds) mods.push_back(p.add(c, PosTag::common_noun, 0));
    long h = p.add(np.head, PosTag::common_noun, head);
    for (long m : mods) p.toks[static_cast<std::size_t>(m)].head = h;
    return h;
  };

  std::vector<long> verb_deps;
  if (plan.mention_first) verb_deps.push_back(p.add("@" + plan.mention, PosTag::mention, 0));
  long verb = p.add(pick(kVerbs, rng), PosTag::verb, -1);
  if (adverb) p.add(adverb_word, PosTag::adverb, verb);
  emit_np(object, verb);
  for (const auto& [prep, np] : pps) {
    long pi = p.add(prep, PosTag::other, verb);
    emit_np(np, pi);
  }
  if (!plan.mention_first) p.add("@" + plan.mention, PosTag::mention, verb);
  p.add(plan.exclamation ? "!" : ".", PosTag::punct, verb);
  if (plan.hashtag) p.add(pick(kHashtags, rng), PosTag::hashtag, verb);
  if (plan.url) {
    std::string slug;
    for (int i = 0; i < 8; ++i) slug.push_back("abcdefghijklmnopqrstuvwxyz0123456789"[rng() % 36]);
    p.add("https://t.co/" + slug, PosTag::url, verb);
  }
  for (long d : verb_deps) p.toks[static_cast<std::size_t>(d)].head = verb;
  return p;
}

// Surface text: tokens separated by spaces except before sentence punctuation.
std::string surface(const Phrase& p) {
  std::string out;
  for (std::size_t i = 0; i < p.toks.size(); ++i) {
    const auto& t = p.toks[i].text;
    bool glue = t == "." || t == "!";
    if (i > 0 && !glue) out.push_back(' ');
    out += t;
  }
  return out;
}

text::ParsedTweet to_parsed(const Phrase& p) {
  std::vector<std::string> words;
  text::ParsedTweet pt;
  for (const auto& t : p.toks) {
    words.push_back(t.text);
    pt.tags.push_back(t.tag);
    pt.tree.heads.push_back(t.head < 0 ? 0 : static_cast<std::size_t>(t.head) + 1);
  }
  pt.tweet = text::from_tokens(words);
  return pt;
}

// P(round(N(mu, sd)) = L | kBodyMin <= L <= kBodyMax), summed into a mean.
double truncated_mean(double mu, double sd) {
  double mass = 0.0, first = 0.0;
  for (std::size_t L = kBodyMin; L <= kBodyMax; ++L) {
    double lo = (static_cast<double>(L) - 0.5 - mu) / sd, hi = (static_cast<double>(L) + 0.5 - mu) / sd;
    double w = 0.5 * (std::erf(hi / std::sqrt(2.0)) - std::erf(lo / std::sqrt(2.0)));
    mass += w;
    first += w * static_cast<double>(L);
  }
  return first / mass;
}

// Location whose truncated, rounded normal has the requested mean.
double solve_location(double target_mean, double sd) {
  double lo = -50.0, hi = 80.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (truncated_mean(mid, sd) < target_mean ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::size_t sample_length(std::normal_distribution<double>& dist, std::mt19937_64& rng) {
  for (;;) {
    double x = std::round(dist(rng));
    if (x >= static_cast<double>(kBodyMin) && x <= static_cast<double>(kBodyMax)) return static_cast<std::size_t>(x);
  }
}

bool has_family(const std::vector<Family>& fams, Family f) { return std::find(fams.begin(), fams.end(), f) != fams.end(); }

}  // namespace

std::size_t count_factors(const PlantedFactors& f, const std::vector<Family>& families) {
  std::size_t on = 0;
  if (has_family(families, Family::punctuation) && f.exclamation) ++on;
  if (has_family(families, Family::mentions) && f.verified_mention) ++on;
  if (has_family(families, Family::complexity) && f.hook) ++on;
  return on;
}

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  if (!(spec.noise >= 0.0 && spec.noise < 0.5)) throw ValidationError("synthetic noise must lie in [0, 0.5)");
  if (spec.topics < 2 || spec.topics > kTopicNouns.size()) {
    throw ValidationError("synthetic topics must lie in [2, " + std::to_string(kTopicNouns.size()) + "]");
  }
  if (spec.n < 2 * spec.topics) throw ValidationError("synthetic corpus needs at least two posts per topic");
  if (spec.signal_families.empty()) throw ValidationError("synthetic spec needs at least one signal family");
  for (auto f : spec.signal_families) {
    if (f != Family::punctuation && f != Family::mentions && f != Family::complexity) {
      throw ValidationError("no planted factor for family " + std::string(features::to_string(f)));
    }
  }
  const auto& signal = spec.signal_families;
  const std::size_t n_signal = signal.size();

  std::mt19937_64 rng(derive_seed(seed, "synthetic"));
  SyntheticCorpus out;

  // Word vectors: topic nouns scattered tightly around one centre per topic.
  out.vectors = corpus::WordVectorTable(kVectorDim);
  {
    std::mt19937_64 vrng(derive_seed(seed, "synthetic-vectors"));
    std::normal_distribution<double> unit(0.0, 1.0), jitter(0.0, 0.15);
    for (const auto& nouns : kTopicNouns) {
      std::vector<double> centre(kVectorDim);
      for (double& c : centre) c = unit(vrng);
      for (const auto& w : nouns) {
        std::vector<double> v = centre;
        for (double& x : v) x += jitter(vrng);
        out.vectors.add(w, std::move(v));
      }
    }
  }
  for (const auto& [w, s] : kSentimentAdjectives) out.lexicon.set(w, s);

  // Hook posts carry kHookTokens more tokens; the body location is solved so
  // the overall mean token count matches the spec.
  double body_mean = spec.length_mean - 0.5 * static_cast<double>(kHookTokens);
  std::normal_distribution<double> body_length(solve_location(body_mean, spec.length_sd), spec.length_sd);

  // Factor patterns split by the planted label.
  std::vector<PlantedFactors> positive_patterns, negative_patterns;
  for (int mask = 0; mask < 8; ++mask) {
    PlantedFactors f{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    (2 * count_factors(f, signal) > n_signal ? positive_patterns : negative_patterns).push_back(f);
  }

  const Timestamp base{std::chrono::sys_days{std::chrono::year{2016} / 1 / 4}};
  const std::array<int, 6> offsets = {-480, -300, 0, 60, 330, 540};
  std::size_t serial = 0;

  for (std::size_t t = 0; t < spec.topics; ++t) {
    std::size_t n_t = spec.n / spec.topics + (t < spec.n % spec.topics ? 1 : 0);
    std::size_t n_pos = n_t / 2;
    std::vector<int> planted(n_t, 0);
    std::fill(planted.begin(), planted.begin() + static_cast<long>(n_pos), 1);
    std::shuffle(planted.begin(), planted.end(), rng);

    // Noise: swap the observed labels of balanced positive/negative pairs.
    std::vector<int> observed = planted;
    std::size_t pairs = static_cast<std::size_t>(std::llround(spec.noise * static_cast<double>(n_t) / 2.0));
    std::vector<std::size_t> pos_idx, neg_idx;
    for (std::size_t i = 0; i < n_t; ++i) (planted[i] ? pos_idx : neg_idx).push_back(i);
    std::shuffle(pos_idx.begin(), pos_idx.end(), rng);
    std::shuffle(neg_idx.begin(), neg_idx.end(), rng);
    pairs = std::min({pairs, pos_idx.size(), neg_idx.size()});
    for (std::size_t k = 0; k < pairs; ++k) {
      observed[pos_idx[k]] = 0;
      observed[neg_idx[k]] = 1;
    }

    for (std::size_t i = 0; i < n_t; ++i) {
      PlantedFactors f = pick(planted[i] ? positive_patterns : negative_patterns, rng);
      if (!has_family(signal, Family::punctuation)) f.exclamation = coin(rng);
      if (!has_family(signal, Family::mentions)) f.verified_mention = coin(rng);
      if (!has_family(signal, Family::complexity)) f.hook = coin(rng);

      ++serial;
      BodyPlan plan;
      plan.topic = t;
      plan.length = sample_length(body_length, rng);
      plan.exclamation = f.exclamation;
      plan.hook = f.hook;
      plan.mention_first = coin(rng);
      plan.hashtag = coin(rng);
      plan.url = coin(rng);
      plan.number = coin(rng);
      plan.sentiment = coin(rng);
      for (int c = 0; c < 6; ++c) plan.mention.push_back("abcdefghijklmnopqrstuvwxyz"[rng() % 26]);
      plan.mention += std::to_string(serial);
      Phrase phrase = build_post(plan, rng);

      corpus::TweetRecord r;
      char id[32];
      std::snprintf(id, sizeof id, "syn-%06zu", serial);
      r.id = id;
      r.text = surface(phrase);
      r.posted_at = base + std::chrono::seconds{std::uniform_int_distribution<long>(0, 364L * 86400)(rng)};
      r.utc_offset_minutes = offsets[std::uniform_int_distribution<std::size_t>(0, offsets.size() - 1)(rng)];
      r.collected_at = r.posted_at + std::chrono::days{30};
      auto& acc = r.account;
      acc.follower_count = static_cast<std::uint64_t>(log_uniform(rng, 5e4, 5e6));
      acc.post_count = static_cast<std::uint64_t>(log_uniform(rng, 100, 1e5));
      acc.favorite_count = static_cast<std::uint64_t>(log_uniform(rng, 10, 5e4));
      acc.listed_count = static_cast<std::uint64_t>(log_uniform(rng, 1, 5e3));
      acc.registered_at = r.posted_at - std::chrono::days{std::uniform_int_distribution<int>(100, 3000)(rng)};
      acc.snapshot_at = r.posted_at;

      corpus::MentionMeta meta;
      meta.username = plan.mention;
      meta.verified = f.verified_mention;
      meta.follower_count = static_cast<std::uint64_t>(f.verified_mention ? log_uniform(rng, 1e6, 1e7)
                                                                           : log_uniform(rng, 1e2, 1e3));
      r.mentions_meta.push_back(meta);

      // Reactions: 2 RT + Fav = round(score * followers), favorites about
      // 2.5 times retweets.
      double score = observed[i] ? std::uniform_real_distribution<double>(kPosLow, kPosHigh)(rng)
                                 : std::uniform_real_distribution<double>(kNegLow, kNegHigh)(rng);
      auto total = static_cast<std::uint64_t>(std::llround(score * static_cast<double>(acc.follower_count)));
      r.retweet_count = static_cast<std::uint64_t>(std::llround(static_cast<double>(total) / 4.5));
      r.favorite_count = total - 2 * r.retweet_count;

      out.records.push_back(std::move(r));
      out.topic.push_back(t);
      out.factors.push_back(f);
      out.planted.push_back(planted[i]);
      out.gold.push_back(observed[i]);
      out.annotations.push_back(to_parsed(phrase));
    }
  }
  return out;
}

std::vector<text::ParsedTweet> generate_annotated_sample(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, "annotated-sample"));
  std::normal_distribution<double> body_length(solve_location(13.2, 5.1), 5.1);
  std::vector<text::ParsedTweet> out;
  for (std::size_t i = 0; i < n; ++i) {
    BodyPlan plan;
    plan.topic = std::uniform_int_distribution<std::size_t>(0, kTopicNouns.size() - 1)(rng);
    plan.length = sample_length(body_length, rng);
    plan.exclamation = coin(rng);
    plan.hook = coin(rng);
    plan.mention_first = coin(rng);
    plan.hashtag = coin(rng);
    plan.url = coin(rng);
    plan.number = coin(rng);
    plan.sentiment = coin(rng);
    for (int c = 0; c < 6; ++c) plan.mention.push_back("abcdefghijklmnopqrstuvwxyz"[rng() % 26]);
    out.push_back(to_parsed(build_post(plan, rng)));
  }
  return out;
}

}  // namespace tweetcraft::eval
