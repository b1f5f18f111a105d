#include <doctest.h>

#include <httplib.h>

#include <thread>

#include <spdlog/spdlog.h>

#include "support/fixtures.h"
#include "tweetcraft/corpus/corpus.h"
#include "tweetcraft/model/pipeline.h"
#include "tweetcraft/service/server.h"
#include "tweetcraft/service/service.h"

using namespace tweetcraft;
using namespace tweetcraft::service;
using nlohmann::json;
using tweetcraft::testing::planted_2000;

namespace {

std::shared_ptr<const model::TrainedPipeline> planted_model() {
  static auto model = [] {
    const auto& fx = planted_2000();
    auto m = model::TrainedPipeline::train(fx.dataset, fx.annotator, fx.syn.lexicon, {});
    m.set_training_metrics({{"cv_f1", 0.9}});
    return std::make_shared<const model::TrainedPipeline>(std::move(m));
  }();
  return model;
}

Timestamp fixed_now() { return tweetcraft::testing::at(2016, 3, 1, 12); }

json request_for(const corpus::TweetRecord& r) {
  auto full = json::parse(corpus::to_json_line(r));
  json req = {{"text", full["text"]},
              {"account", full["account"]},
              {"posted_at", full["posted_at"]},
              {"utc_offset_minutes", full["utc_offset_minutes"]},
              {"mentions_meta", full["mentions_meta"]}};
  return req;
}

json minimal_request(const std::string& text) {
  return {{"text", text},
          {"account",
           {{"follower_count", 5000},
            {"post_count", 1200},
            {"favorite_count", 40},
            {"listed_count", 12},
            {"registered_at", "2012-01-01T00:00:00Z"}}}};
}

}  // namespace

TEST_CASE("requests become records with documented defaults") {
  auto r = request_to_record(minimal_request("Hello @x"), fixed_now());
  CHECK(r.posted_at == fixed_now());
  CHECK(r.utc_offset_minutes == 0);
  CHECK(r.account.snapshot_at == fixed_now());
  CHECK(r.mentions_meta.empty());
  CHECK_THROWS_AS(request_to_record(minimal_request(""), fixed_now()), ValidationError);
  CHECK_THROWS_AS(request_to_record(minimal_request(std::string(501, 'a')), fixed_now()), PayloadTooLarge);
  CHECK_THROWS_AS(request_to_record(json::array(), fixed_now()), ValidationError);
  auto bad = minimal_request("x");
  bad["posted_at"] = 5;
  CHECK_THROWS_AS(request_to_record(bad, fixed_now()), ValidationError);
  bad = minimal_request("x");
  bad["account"].erase("follower_count");
  CHECK_THROWS_AS(request_to_record(bad, fixed_now()), ValidationError);
}

TEST_CASE("endpoints without a model answer 503") {
  PredictionService svc(nullptr, fixed_now);
  CHECK(svc.model_info().status == 503);
  CHECK(svc.predict(minimal_request("hi").dump()).status == 503);
  CHECK(svc.compare(json::array({minimal_request("hi")}).dump()).status == 503);
}

TEST_CASE("predict validates its payload") {
  PredictionService svc(planted_model(), fixed_now);
  CHECK(svc.predict("not json").status == 400);
  CHECK(svc.predict(minimal_request("").dump()).status == 400);
  CHECK(svc.predict(minimal_request(std::string(600, 'a')).dump()).status == 413);
  auto ok = svc.predict(minimal_request("Get the new deals today!").dump());
  REQUIRE(ok.status == 200);
  auto body = json::parse(ok.body);
  CHECK((body["label"] == "positive" || body["label"] == "negative"));
  CHECK(body["score"].get<double>() >= 0.0);
  CHECK(body["score"].get<double>() <= 1.0);
  CHECK(body["feature_breakdown"].size() == 30);
  CHECK(body["schema_version"] == "decoration-v1");
  CHECK(body["model_id"] == planted_model()->model_id());
  // Identical requests give byte-identical responses.
  CHECK(svc.predict(minimal_request("Get the new deals today!").dump()).body == ok.body);
}

TEST_CASE("model metadata") {
  PredictionService svc(planted_model(), fixed_now);
  auto r = svc.model_info();
  REQUIRE(r.status == 200);
  auto body = json::parse(r.body);
  CHECK(body["model_id"] == planted_model()->model_id());
  CHECK(body["families"].size() == 9);
  CHECK(body["classifier"] == "svm-rbf");
  CHECK(body["training_metrics"]["cv_f1"] == 0.9);
}

TEST_CASE("online predictions match offline predictions on 500 records") {
  const auto& fx = planted_2000();
  auto model = planted_model();
  PredictionService svc(model, fixed_now);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const auto& rec = fx.syn.records[i];
    auto offline = model->predict(rec);
    auto online = json::parse(svc.predict(request_for(rec).dump()).body);
    bool same = online["label"] == (offline.label ? "positive" : "negative") &&
                online["decision"].get<double>() == offline.decision;
    agree += same;
  }
  CHECK(agree == 500);
}

TEST_CASE("compare ranks variants") {
  PredictionService svc(planted_model(), fixed_now);
  auto one = json::parse(svc.compare(json::array({minimal_request("Shop the sale.")}).dump()).body);
  CHECK(one["results"][0]["rank"] == 1);

  auto same = json::parse(
      svc.compare(json{{"variants", {minimal_request("Shop the sale."), minimal_request("Shop the sale.")}}}.dump())
          .body);
  CHECK(same["results"][0]["score"] == same["results"][1]["score"]);
  CHECK(same["results"][0]["rank"] == 1);
  CHECK(same["results"][1]["rank"] == 2);

  json many = json::array();
  for (int i = 0; i < 21; ++i) many.push_back(minimal_request("v" + std::to_string(i)));
  CHECK(svc.compare(many.dump()).status == 400);
  many.erase(many.begin());
  CHECK(svc.compare(many.dump()).status == 200);
  CHECK(svc.compare("[]").status == 400);
  CHECK(svc.compare("{}").status == 400);
}

TEST_CASE("a hook variant outranks the same post without it") {
  const auto& fx = planted_2000();
  PredictionService svc(planted_model(), fixed_now);
  std::size_t tried = 0, won = 0;
  for (std::size_t i = 0; i < fx.syn.records.size() && tried < 40; ++i) {
    if (fx.syn.factors[i].hook) continue;
    ++tried;
    auto plain = request_for(fx.syn.records[i]);
    auto hooked = plain;
    hooked["text"] = "deals. exclusive. " + plain["text"].get<std::string>();
    auto out = json::parse(svc.compare(json::array({plain, hooked}).dump()).body);
    won += out["results"][1]["rank"] == 1;
  }
  MESSAGE("hook variant ranked first in " << won << "/" << tried);
  CHECK(won == tried);
}

TEST_CASE("reload swaps the model and keeps it on failure") {
  auto dir = tweetcraft::testing::fresh_dir("reload");
  planted_model()->save(dir / "model.json");
  PredictionService svc(nullptr, fixed_now);
  CHECK(svc.reload("").status == 400);
  auto r = svc.reload(json{{"path", (dir / "model.json").string()}}.dump());
  REQUIRE(r.status == 200);
  CHECK(json::parse(r.body)["model_id"] == planted_model()->model_id());
  tweetcraft::testing::write_file(dir / "bad.json", "{}");
  CHECK(svc.reload(json{{"path", (dir / "bad.json").string()}}.dump()).status == 400);
  CHECK(svc.model() != nullptr);
  CHECK(svc.reload("").status == 200);
}

TEST_CASE("live HTTP round trip") {
  spdlog::set_level(spdlog::level::warn);
  PredictionService svc(planted_model(), fixed_now);
  HttpServer server(svc);
  int port = server.bind("127.0.0.1", 0);
  std::thread runner([&] { server.run(); });

  httplib::Client client("127.0.0.1", port);
  auto info = client.Get("/v1/model");
  REQUIRE(info);
  CHECK(info->status == 200);
  CHECK(info->get_header_value("Access-Control-Allow-Origin") == "*");

  auto req = minimal_request("Get the new deals today!");
  auto pred = client.Post("/v1/predict", req.dump(), "application/json");
  REQUIRE(pred);
  CHECK(pred->status == 200);
  CHECK(pred->body == svc.predict(req.dump()).body);

  auto bad = client.Post("/v1/predict", "{", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  auto cmp = client.Post("/v1/compare", json::array({req, req}).dump(), "application/json");
  REQUIRE(cmp);
  CHECK(json::parse(cmp->body)["results"].size() == 2);

  auto opt = client.Options("/v1/predict");
  REQUIRE(opt);
  CHECK(opt->status == 204);

  // Concurrent requests all see the same immutable model.
  std::vector<std::thread> pool;
  std::atomic<int> ok{0};
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&] {
      httplib::Client c("127.0.0.1", port);
      for (int i = 0; i < 10; ++i) {
        auto r = c.Post("/v1/predict", req.dump(), "application/json");
        if (r && r->status == 200 && r->body == pred->body) ++ok;
      }
    });
  }
  for (auto& t : pool) t.join();
  CHECK(ok == 80);

  server.stop();
  runner.join();
}

TEST_CASE("save and load round-trip bit-exactly") {
  const auto& fx = planted_2000();
  auto dir = tweetcraft::testing::fresh_dir("roundtrip");
  auto model = planted_model();
  model->save(dir / "a.json");
  auto loaded = model::TrainedPipeline::load(dir / "a.json");
  CHECK(loaded.model_id() == model->model_id());
  loaded.save(dir / "b.json");
  CHECK(tweetcraft::testing::read_file(dir / "a.json") == tweetcraft::testing::read_file(dir / "b.json"));
  std::size_t same = 0;
  for (const auto& r : fx.syn.records) {
    auto p = model->predict(r), q = loaded.predict(r);
    same += p.label == q.label && p.decision == q.decision && p.score == q.score;
  }
  CHECK(same == fx.syn.records.size());

  tweetcraft::testing::write_file(dir / "broken.json", "{\"version\": 1");
  CHECK_THROWS_AS(model::TrainedPipeline::load(dir / "broken.json"), ValidationError);
  CHECK_THROWS_AS(model::TrainedPipeline::load(dir / "absent.json"), RuntimeFailure);
}
