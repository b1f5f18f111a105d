#include "tweetcraft/eval/metrics.h"

#include <stdexcept>

namespace tweetcraft::eval {

Metrics compute_metrics(std::span<const int> y_true, std::span<const int> y_pred) {
  if (y_true.empty()) throw std::invalid_argument("metrics need at least one prediction");
  if (y_true.size() != y_pred.size()) throw std::invalid_argument("y_true and y_pred differ in length");
  Metrics m;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    bool t = y_true[i] != 0, p = y_pred[i] != 0;
    if (t && p) ++m.tp;
    else if (!t && p) ++m.fp;
    else if (t && !p) ++m.fn;
    else ++m.tn;
  }
  if (m.tp + m.fp > 0) m.precision = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp);
  if (m.tp + m.fn > 0) m.recall = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
  if (m.precision + m.recall > 0) m.f1 = 2 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

Metrics mean_metrics(std::span<const Metrics> folds) {
  Metrics out;
  if (folds.empty()) return out;
  for (const auto& f : folds) {
    out.tp += f.tp;
    out.fp += f.fp;
    out.fn += f.fn;
    out.tn += f.tn;
    out.precision += f.precision;
    out.recall += f.recall;
    out.f1 += f.f1;
  }
  const double n = static_cast<double>(folds.size());
  out.precision /= n;
  out.recall /= n;
  out.f1 /= n;
  return out;
}

}  // namespace tweetcraft::eval
