#include "tweetcraft/eval/ablation.h"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace tweetcraft::eval {

AblationReport ablate(const Dataset& ds, const CvConfig& config) {
  if (config.features != FeatureModel::decoration) throw ValidationError("ablation applies to the decoration model");
  AblationReport report;
  report.full = cross_validate(ds, config).mean;
  ++report.cv_runs;
  for (auto family : features::kAllFamilies) {
    CvConfig reduced = config;
    std::erase(reduced.families, family);
    AblationRow row{family, cross_validate(ds, reduced).mean};
    ++report.cv_runs;
    row.delta_precision = row.metrics.precision - report.full.precision;
    row.delta_recall = row.metrics.recall - report.full.recall;
    row.delta_f1 = row.metrics.f1 - report.full.f1;
    report.rows.push_back(row);
  }
  return report;
}

void write_ablation_csv(std::ostream& out, const AblationReport& report) {
  char line[160];
  out << "model,precision,recall,f1,delta_precision,delta_recall,delta_f1\n";
  std::snprintf(line, sizeof line, "full,%.4f,%.4f,%.4f,0,0,0\n", report.full.precision, report.full.recall,
                report.full.f1);
  out << line;
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "-%s,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f\n", std::string(features::to_string(r.family)).c_str(),
                  r.metrics.precision, r.metrics.recall, r.metrics.f1, r.delta_precision, r.delta_recall, r.delta_f1);
    out << line;
  }
}

std::string format_ablation_table(const AblationReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-14s %9s %9s %9s %9s\n", "model", "precision", "recall", "f1", "delta_f1");
  out += line;
  std::snprintf(line, sizeof line, "%-14s %9.4f %9.4f %9.4f %9s\n", "full", report.full.precision, report.full.recall,
                report.full.f1, "");
  out += line;
  for (const auto& r : report.rows) {
    std::string name = "-" + std::string(features::to_string(r.family));
    std::snprintf(line, sizeof line, "%-14s %9.4f %9.4f %9.4f %+9.4f\n", name.c_str(), r.metrics.precision,
                  r.metrics.recall, r.metrics.f1, r.delta_f1);
    out += line;
  }
  return out;
}

}  // namespace tweetcraft::eval
