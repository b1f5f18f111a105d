#include "tweetcraft/service/service.h"

#include <algorithm>
#include <numeric>

#include "tweetcraft/common/utf8.h"

namespace tweetcraft::service {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

HttpResult error(int status, std::string_view message) {
  return {status, ordered_json{{"error", message}}.dump()};
}

json parse_body(std::string_view body) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("request body is not valid JSON: ") + e.what());
  }
}

Timestamp system_now() { return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()); }

}  // namespace

corpus::TweetRecord request_to_record(const json& request, Timestamp now) {
  if (!request.is_object()) throw ValidationError("request must be a JSON object");
  auto text = request.find("text");
  if (text == request.end() || !text->is_string()) throw ValidationError("field 'text' must be a string");
  const auto& s = text->get_ref<const std::string&>();
  if (s.empty()) throw ValidationError("field 'text' is empty");
  if (utf8::count_code_points(s) > corpus::kMaxTextLength) {
    throw PayloadTooLarge("text exceeds " + std::to_string(corpus::kMaxTextLength) + " characters");
  }
  auto account = request.find("account");
  if (account == request.end() || !account->is_object()) throw ValidationError("field 'account' must be an object");

  json full = {{"id", "request"}, {"text", s}};
  std::string posted = format_rfc3339(now);
  if (auto p = request.find("posted_at"); p != request.end()) {
    if (!p->is_string()) throw ValidationError("field 'posted_at' must be an RFC 3339 string");
    posted = p->get<std::string>();
  }
  full["posted_at"] = posted;
  full["utc_offset_minutes"] = request.value("utc_offset_minutes", json(0));
  full["collected_at"] = posted;
  full["retweet_count"] = 0;
  full["favorite_count"] = 0;
  full["account"] = *account;
  if (!account->contains("snapshot_at")) full["account"]["snapshot_at"] = posted;
  if (auto m = request.find("mentions_meta"); m != request.end()) full["mentions_meta"] = *m;
  try {
    return corpus::record_from_json(full);
  } catch (const json::exception& e) {
    throw ValidationError(e.what());
  }
}

PredictionService::PredictionService(std::shared_ptr<const model::TrainedPipeline> model, Clock clock)
    : model_(std::move(model)), clock_(clock ? std::move(clock) : Clock(system_now)) {}

void PredictionService::set_model(std::shared_ptr<const model::TrainedPipeline> model) {
  std::lock_guard lock(mutex_);
  model_ = std::move(model);
}

std::shared_ptr<const model::TrainedPipeline> PredictionService::model() const {
  std::lock_guard lock(mutex_);
  return model_;
}

void PredictionService::set_model_path(std::filesystem::path path) {
  std::lock_guard lock(mutex_);
  model_path_ = std::move(path);
}

ordered_json PredictionService::prediction_json(const model::TrainedPipeline& m, const corpus::TweetRecord& r) const {
  auto p = m.predict(r);
  const auto& schema = features::FeatureSchema::decoration();
  ordered_json breakdown = ordered_json::array();
  for (std::size_t i = 0; i < schema.size(); ++i) {
    breakdown.push_back(
        {{"name", schema[i].name}, {"family", features::to_string(schema[i].family)}, {"value", p.decoration[i]}});
  }
  return ordered_json{{"label", p.label ? "positive" : "negative"},
                      {"score", p.score},
                      {"decision", p.decision},
                      {"feature_breakdown", breakdown},
                      {"schema_version", schema.version()},
                      {"model_id", m.model_id()}};
}

HttpResult PredictionService::predict(std::string_view body) const {
  auto m = model();
  if (!m) return error(503, "no model loaded");
  try {
    auto record = request_to_record(parse_body(body), clock_());
    return {200, prediction_json(*m, record).dump()};
  } catch (const PayloadTooLarge& e) {
    return error(413, e.what());
  } catch (const ValidationError& e) {
    return error(400, e.what());
  }
}

HttpResult PredictionService::compare(std::string_view body) const {
  auto m = model();
  if (!m) return error(503, "no model loaded");
  try {
    json request = parse_body(body);
    const json* variants = &request;
    if (request.is_object()) {
      auto it = request.find("variants");
      if (it == request.end()) throw ValidationError("field 'variants' is missing");
      variants = &*it;
    }
    if (!variants->is_array()) throw ValidationError("variants must be an array");
    if (variants->empty()) throw ValidationError("at least one variant is required");
    if (variants->size() > kMaxVariants) {
      throw ValidationError("at most " + std::to_string(kMaxVariants) + " variants are allowed");
    }
    Timestamp now = clock_();
    std::vector<ordered_json> results;
    for (const auto& v : *variants) results.push_back(prediction_json(*m, request_to_record(v, now)));

    std::vector<std::size_t> order(results.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return results[a]["decision"].get<double>() > results[b]["decision"].get<double>();
    });
    for (std::size_t r = 0; r < order.size(); ++r) results[order[r]]["rank"] = r + 1;
    ordered_json out = {{"model_id", m->model_id()}, {"results", results}};
    return {200, out.dump()};
  } catch (const PayloadTooLarge& e) {
    return error(413, e.what());
  } catch (const ValidationError& e) {
    return error(400, e.what());
  }
}

HttpResult PredictionService::model_info() const {
  auto m = model();
  if (!m) return error(503, "no model loaded");
  ordered_json families = ordered_json::array();
  for (auto f : features::kAllFamilies) families.push_back(features::to_string(f));
  ordered_json active = ordered_json::array();
  for (auto f : m->families()) active.push_back(features::to_string(f));
  ordered_json out = {{"model_id", m->model_id()},
                      {"schema_version", features::FeatureSchema::decoration().version()},
                      {"families", families},
                      {"active_families", active},
                      {"classifier", eval::to_string(m->classifier_kind())},
                      {"training_metrics", ordered_json::parse(m->training_metrics().dump())}};
  return {200, out.dump()};
}

HttpResult PredictionService::reload(std::string_view body) {
  std::filesystem::path path;
  {
    std::lock_guard lock(mutex_);
    path = model_path_;
  }
  try {
    if (!body.empty()) {
      json request = parse_body(body);
      if (!request.is_object()) throw ValidationError("reload body must be an object");
      if (request.contains("path")) path = request["path"].get<std::string>();
    }
    if (path.empty()) throw ValidationError("no model path configured");
    auto loaded = std::make_shared<const model::TrainedPipeline>(model::TrainedPipeline::load(path));
    {
      std::lock_guard lock(mutex_);
      model_ = loaded;
      model_path_ = path;
    }
    return model_info();
  } catch (const ValidationError& e) {
    return error(400, e.what());
  } catch (const RuntimeFailure& e) {
    return error(500, e.what());
  } catch (const json::exception& e) {
    return error(400, e.what());
  }
}

}  // namespace tweetcraft::service
