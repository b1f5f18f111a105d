#include "tweetcraft/text/parser.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "tweetcraft/common/error.h"
#include "tweetcraft/common/utf8.h"

namespace tweetcraft::text {
namespace {

constexpr std::size_t kShift = static_cast<std::size_t>(Transition::shift);
constexpr std::size_t kLeft = static_cast<std::size_t>(Transition::left_arc);
constexpr std::size_t kRight = static_cast<std::size_t>(Transition::right_arc);

class Configuration {
 public:
  explicit Configuration(std::size_t n) : n_(n), heads_(n + 1, -1), left_(n + 1, 0), right_(n + 1, 0) {}

  bool done() const { return buffer_ > static_cast<int>(n_) && stack_.size() <= 1; }
  bool buffer_empty() const { return buffer_ > static_cast<int>(n_); }
  std::size_t stack_size() const { return stack_.size(); }
  bool finished() const { return finished_; }

  // Token index (1-based) at stack depth `depth` / buffer offset; 0 if none.
  int stack(std::size_t depth) const {
    return depth < stack_.size() ? stack_[stack_.size() - 1 - depth] : 0;
  }
  int buffer(int offset) const {
    int i = buffer_ + offset;
    return i <= static_cast<int>(n_) ? i : 0;
  }
  int leftmost(int token) const { return token > 0 ? left_[static_cast<std::size_t>(token)] : 0; }
  int rightmost(int token) const { return token > 0 ? right_[static_cast<std::size_t>(token)] : 0; }
  int head(int token) const { return heads_[static_cast<std::size_t>(token)]; }

  std::vector<std::size_t> valid() const {
    std::vector<std::size_t> v{kShift};
    if (stack_.size() >= 2) {
      v.push_back(kLeft);
      v.push_back(kRight);
    }
    return v;
  }

  void apply(std::size_t action) {
    if (action == kShift) {
      if (buffer_empty()) {
        finished_ = true;
      } else {
        stack_.push_back(buffer_++);
      }
      return;
    }
    int s0 = stack_[stack_.size() - 1];
    int s1 = stack_[stack_.size() - 2];
    if (action == kLeft) {
      attach(s1, s0);
      stack_.erase(stack_.end() - 2);
    } else {
      attach(s0, s1);
      stack_.pop_back();
    }
  }

  DependencyTree tree() const {
    DependencyTree t;
    t.heads.resize(n_);
    for (std::size_t i = 1; i <= n_; ++i) t.heads[i - 1] = heads_[i] < 0 ? 0 : heads_[i];
    return t;
  }

 private:
  void attach(int dependent, int head) {
    heads_[static_cast<std::size_t>(dependent)] = head;
    auto h = static_cast<std::size_t>(head);
    if (dependent < head && (left_[h] == 0 || dependent < left_[h])) left_[h] = dependent;
    if (dependent > head && (right_[h] == 0 || dependent > right_[h])) right_[h] = dependent;
  }

  std::size_t n_;
  std::vector<int> stack_;
  int buffer_ = 1;
  bool finished_ = false;
  std::vector<int> heads_;
  std::vector<int> left_;
  std::vector<int> right_;
};

struct SentenceView {
  const TokenizedTweet& tweet;
  const TagSequence& tags;

  std::string word(int i) const {
    if (i <= 0) return "-";
    return utf8::to_lower_ascii(tweet.tokens[static_cast<std::size_t>(i - 1)].text);
  }
  std::string tag(int i) const {
    if (i <= 0) return "-";
    return std::string(tag_code(tags[static_cast<std::size_t>(i - 1)]));
  }
};

std::vector<std::string> features(const Configuration& c, const SentenceView& s) {
  int s0 = c.stack(0), s1 = c.stack(1), s2 = c.stack(2);
  int b0 = c.buffer(0), b1 = c.buffer(1), b2 = c.buffer(2);
  std::string s0w = s.word(s0), s0t = s.tag(s0), s1w = s.word(s1), s1t = s.tag(s1);
  std::string b0w = s.word(b0), b0t = s.tag(b0);
  std::string s0l = s.tag(c.leftmost(s0)), s0r = s.tag(c.rightmost(s0));
  std::string s1l = s.tag(c.leftmost(s1)), s1r = s.tag(c.rightmost(s1));
  int dist = (s0 > 0 && s1 > 0) ? std::min(s0 - s1, 5) : 0;
  std::size_t depth = std::min<std::size_t>(c.stack_size(), 3);

  std::vector<std::string> f;
  f.reserve(32);
  f.emplace_back("bias");
  f.push_back("s0w=" + s0w);
  f.push_back("s0t=" + s0t);
  f.push_back("s0wt=" + s0w + "/" + s0t);
  f.push_back("s1w=" + s1w);
  f.push_back("s1t=" + s1t);
  f.push_back("s1wt=" + s1w + "/" + s1t);
  f.push_back("s2t=" + s.tag(s2));
  f.push_back("b0w=" + b0w);
  f.push_back("b0t=" + b0t);
  f.push_back("b0wt=" + b0w + "/" + b0t);
  f.push_back("b1w=" + s.word(b1));
  f.push_back("b1t=" + s.tag(b1));
  f.push_back("b2t=" + s.tag(b2));
  f.push_back("s0t,s1t=" + s0t + "," + s1t);
  f.push_back("s0t,b0t=" + s0t + "," + b0t);
  f.push_back("s1t,s0t,b0t=" + s1t + "," + s0t + "," + b0t);
  f.push_back("s0w,s1w=" + s0w + "," + s1w);
  f.push_back("s0t,s1w=" + s0t + "," + s1w);
  f.push_back("s0w,s1t=" + s0w + "," + s1t);
  f.push_back("s0t,b0t,b1t=" + s0t + "," + b0t + "," + s.tag(b1));
  f.push_back("s2t,s1t,s0t=" + s.tag(s2) + "," + s1t + "," + s0t);
  f.push_back("s0l=" + s0l);
  f.push_back("s0r=" + s0r);
  f.push_back("s1l=" + s1l);
  f.push_back("s1r=" + s1r);
  f.push_back("s1t,s0t,s0l=" + s1t + "," + s0t + "," + s0l);
  f.push_back("s1t,s0t,s1r=" + s1t + "," + s0t + "," + s1r);
  f.push_back("dist=" + std::to_string(dist) + "," + s0t + "," + s1t);
  f.push_back("depth=" + std::to_string(depth) + (c.buffer_empty() ? ",end" : ",more"));
  return f;
}

struct GoldIndex {
  std::vector<int> heads;  // 1-based, heads[0] unused
  std::vector<int> child_count;
};

GoldIndex index_gold(const DependencyTree& gold) {
  GoldIndex g;
  g.heads.assign(gold.size() + 1, 0);
  g.child_count.assign(gold.size() + 1, 0);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    g.heads[i + 1] = gold.heads[i];
    if (gold.heads[i] > 0) ++g.child_count[static_cast<std::size_t>(gold.heads[i])];
  }
  return g;
}

std::size_t gold_action(const Configuration& c, const GoldIndex& g, const std::vector<int>& attached) {
  if (c.stack_size() >= 2) {
    int s0 = c.stack(0), s1 = c.stack(1);
    auto u0 = static_cast<std::size_t>(s0), u1 = static_cast<std::size_t>(s1);
    if (g.heads[u1] == s0 && attached[u1] == g.child_count[u1]) return kLeft;
    if (g.heads[u0] == s1 && attached[u0] == g.child_count[u0]) return kRight;
  }
  return kShift;
}

void count_attachment(std::size_t action, const Configuration& before, std::vector<int>& attached) {
  if (action == kLeft) ++attached[static_cast<std::size_t>(before.stack(0))];
  if (action == kRight) ++attached[static_cast<std::size_t>(before.stack(1))];
}

}  // namespace

std::optional<std::vector<Transition>> oracle_transitions(const DependencyTree& gold) {
  auto g = index_gold(gold);
  Configuration c(gold.size());
  std::vector<int> attached(gold.size() + 1, 0);
  std::vector<Transition> out;
  while (!c.done() && !c.finished()) {
    std::size_t a = gold_action(c, g, attached);
    count_attachment(a, c, attached);
    c.apply(a);
    out.push_back(static_cast<Transition>(a));
  }
  if (c.tree() != gold) return std::nullopt;
  return out;
}

ParserModel train_parser(std::span<const ParsedTweet> corpus, int epochs, std::uint64_t seed) {
  if (corpus.empty()) throw ValidationError("cannot train a parser on an empty corpus");
  if (epochs < 1) throw ValidationError("parser epochs must be at least 1");

  ParserModel model;
  model.epochs = epochs;
  model.seed = seed;
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& ex = corpus[i];
    if (ex.tags.size() != ex.tweet.size() || ex.tree.size() != ex.tweet.size()) {
      throw ValidationError("parser training example " + std::to_string(i + 1) + " is misaligned");
    }
    if (auto err = validate_tree(ex.tree)) {
      throw ValidationError("parser training example " + std::to_string(i + 1) + ": " + *err);
    }
    if (oracle_transitions(ex.tree)) {
      usable.push_back(i);
    } else {
      ++model.skipped;
    }
  }

  std::mt19937_64 rng(seed);
  for (int epoch = 0; epoch < epochs; ++epoch) {
    std::shuffle(usable.begin(), usable.end(), rng);
    for (std::size_t idx : usable) {
      const auto& ex = corpus[idx];
      SentenceView view{ex.tweet, ex.tags};
      auto g = index_gold(ex.tree);
      Configuration c(ex.tree.size());
      std::vector<int> attached(ex.tree.size() + 1, 0);
      while (!c.done() && !c.finished()) {
        auto f = features(c, view);
        std::size_t truth = gold_action(c, g, attached);
        std::size_t guess = model.perceptron.predict(f, c.valid());
        model.perceptron.observe(f, truth, guess);
        count_attachment(truth, c, attached);
        c.apply(truth);
      }
    }
  }
  model.perceptron.average();
  return model;
}

DependencyTree parse(const ParserModel& model, const TokenizedTweet& tweet, const TagSequence& tags) {
  if (tags.size() != tweet.size()) throw std::invalid_argument("parse: tags not aligned with tokens");
  SentenceView view{tweet, tags};
  Configuration c(tweet.size());
  while (!c.done() && !c.finished()) {
    auto f = features(c, view);
    c.apply(model.perceptron.predict(f, c.valid()));
  }
  return c.tree();
}

nlohmann::json ParserModel::to_json() const {
  return {{"epochs", epochs}, {"seed", seed}, {"skipped", skipped}, {"perceptron", perceptron.to_json()}};
}

ParserModel ParserModel::from_json(const nlohmann::json& j) {
  ParserModel m;
  m.epochs = j.at("epochs").get<int>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.skipped = j.at("skipped").get<std::size_t>();
  m.perceptron = AveragedPerceptron::from_json(j.at("perceptron"));
  return m;
}

}  // namespace tweetcraft::text
