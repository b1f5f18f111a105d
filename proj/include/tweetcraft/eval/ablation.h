#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tweetcraft/eval/cross_validation.h"

namespace tweetcraft::eval {

struct AblationRow {
  features::Family family;
  Metrics metrics;
  double delta_precision = 0.0;
  double delta_recall = 0.0;
  double delta_f1 = 0.0;  // ablated minus full
};

struct AblationReport {
  Metrics full;
  std::vector<AblationRow> rows;  // one per schema family, schema order
  std::size_t cv_runs = 0;
};

// One CV run with config.families, then one per schema family with that
// family's columns zeroed in both train and test. Decoration model only.
AblationReport ablate(const Dataset& ds, const CvConfig& config);

void write_ablation_csv(std::ostream& out, const AblationReport& report);
std::string format_ablation_table(const AblationReport& report);

}  // namespace tweetcraft::eval
