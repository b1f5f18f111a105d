#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "tweetcraft/service/service.h"

namespace httplib {
class Server;
}

namespace tweetcraft::service {

// HTTP/1.1 front end for PredictionService:
//   POST /v1/predict, POST /v1/compare, GET /v1/model, POST /v1/reload
// Each request is logged to stderr as one key=value line.
class HttpServer {
 public:
  explicit HttpServer(PredictionService& service, std::filesystem::path static_dir = {});
  ~HttpServer();

  // Port 0 binds any free port. Returns the bound port; throws RuntimeFailure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void run();
  void stop();

 private:
  PredictionService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace tweetcraft::service
