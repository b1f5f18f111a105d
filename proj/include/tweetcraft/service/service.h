#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tweetcraft/common/time.h"
#include "tweetcraft/model/pipeline.h"

namespace tweetcraft::service {

inline constexpr std::size_t kMaxVariants = 20;

struct HttpResult {
  int status = 200;
  std::string body;  // JSON
};

// Thrown for a text longer than the record limit; maps to 413.
class PayloadTooLarge : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Builds a record from a predict request. Missing posted_at means `now`,
// missing utc_offset_minutes means 0, and missing account.snapshot_at means
// posted_at. Throws ValidationError or PayloadTooLarge.
corpus::TweetRecord request_to_record(const nlohmann::json& request, Timestamp now);

// JSON handlers behind the HTTP routes. The loaded model is immutable and
// swapped whole on reload, so handlers may run concurrently.
class PredictionService {
 public:
  using Clock = std::function<Timestamp()>;

  explicit PredictionService(std::shared_ptr<const model::TrainedPipeline> model = nullptr, Clock clock = {});

  void set_model(std::shared_ptr<const model::TrainedPipeline> model);
  std::shared_ptr<const model::TrainedPipeline> model() const;
  void set_model_path(std::filesystem::path path);

  HttpResult predict(std::string_view body) const;
  HttpResult compare(std::string_view body) const;
  HttpResult model_info() const;
  // Body may name {"path": ...}; otherwise the configured model path is
  // reloaded. A failed load keeps the current model.
  HttpResult reload(std::string_view body);

 private:
  nlohmann::ordered_json prediction_json(const model::TrainedPipeline& m, const corpus::TweetRecord& r) const;

  mutable std::mutex mutex_;
  std::shared_ptr<const model::TrainedPipeline> model_;
  std::filesystem::path model_path_;
  Clock clock_;
};

}  // namespace tweetcraft::service
