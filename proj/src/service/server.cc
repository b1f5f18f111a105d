#include "tweetcraft/service/server.h"

#include <chrono>

#include <httplib.h>
#include <spdlog/spdlog.h>

namespace tweetcraft::service {

namespace {

void send(httplib::Response& res, const HttpResult& r) {
  res.status = r.status;
  res.set_content(r.body, "application/json");
}

}  // namespace

HttpServer::HttpServer(PredictionService& service, std::filesystem::path static_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  s.Post("/v1/predict", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.predict(req.body));
  });
  s.Post("/v1/compare", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.compare(req.body));
  });
  s.Get("/v1/model", [this](const httplib::Request&, httplib::Response& res) { send(res, service_.model_info()); });
  s.Post("/v1/reload", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.reload(req.body));
  });
  s.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Headers", "Content-Type"},
                         {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(nlohmann::ordered_json{{"error", what}}.dump(), "application/json");
  });
  if (!static_dir.empty()) s.set_mount_point("/", static_dir.string());

  s.set_pre_routing_handler([](const httplib::Request& req, httplib::Response&) {
    const_cast<httplib::Request&>(req).set_header(
        "X-Start-Ns", std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    return httplib::Server::HandlerResponse::Unhandled;
  });
  s.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    double ms = 0.0;
    if (req.has_header("X-Start-Ns")) {
      auto start = std::stoll(req.get_header_value("X-Start-Ns"));
      ms = static_cast<double>(std::chrono::steady_clock::now().time_since_epoch().count() - start) / 1e6;
    }
    spdlog::info("method={} path={} status={} bytes={} ms={:.3f}", req.method, req.path, res.status, res.body.size(),
                 ms);
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw RuntimeFailure("cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::run() { server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

}  // namespace tweetcraft::service
