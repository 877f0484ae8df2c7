#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"
#include "hyperdoc/service.h"
#include "json.hpp"
#include "support/random_bundle.h"

namespace hyperdoc {
namespace {

using nlohmann::json;

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override { service_ = std::make_unique<Service>(std::make_shared<Engine>(testing::load_shipped("ate"))); }

  std::string open_session(const std::string& model = "Skilled", const std::string& task = "Task") {
    const auto r = service_->handle("POST", "/sessions", json{{"expertise", model}, {"task", task}}.dump());
    EXPECT_EQ(r.status, 201) << r.body;
    return json::parse(r.body).at("session_id").get<std::string>();
  }

  std::unique_ptr<Service> service_;
};

TEST_F(ServiceTest, QueryReturnsAnnotatedText) {
  const std::string id = open_session();
  const auto r = service_->handle("POST", "/sessions/" + id + "/query",
                                  json{{"question", "WhatIsIt"}, {"component", "Llever-test-head12"}}.dump());
  ASSERT_EQ(r.status, 200) << r.body;
  const json j = json::parse(r.body);
  std::string text;
  for (const auto& s : j.at("body")) text += s.at("text").get<std::string>();
  EXPECT_EQ(text, "It is a black locking lever.");
  ASSERT_EQ(j.at("followups").size(), 1u);
  EXPECT_EQ(j.at("followups")[0].at("label"), "WHERE");
}

TEST_F(ServiceTest, ModelSwitchChangesWording) {
  const std::string id = open_session();
  const json q = {{"question", "WhatAreItsParts"}, {"component", "ATE-1"}};
  const std::string skilled = service_->handle("POST", "/sessions/" + id + "/query", q.dump()).body;
  EXPECT_EQ(service_->handle("PUT", "/sessions/" + id + "/model", json{{"expertise", "Naive"}}.dump()).status, 204);
  const std::string naive = service_->handle("POST", "/sessions/" + id + "/query", q.dump()).body;
  EXPECT_NE(skilled.find("DC power supply"), std::string::npos);
  EXPECT_NE(naive.find("silver"), std::string::npos);
}

TEST_F(ServiceTest, ErrorStatuses) {
  const std::string id = open_session();
  auto status = [&](const std::string& m, const std::string& p, const std::string& b) {
    const auto r = service_->handle(m, p, b);
    if (r.status >= 400) {
      const json j = json::parse(r.body);
      EXPECT_TRUE(j.contains("error"));
      EXPECT_TRUE(j.contains("message"));
    }
    return r.status;
  };
  EXPECT_EQ(status("POST", "/sessions/nope/query", R"({"question":"WhatIsIt","component":"ATE-1"})"), 404);
  EXPECT_EQ(status("POST", "/sessions/" + id + "/query", R"({"question":"WhatIsIt","component":"Nope"})"), 404);
  EXPECT_EQ(status("POST", "/sessions/" + id + "/query", R"({"question":"WhyIsIt","component":"ATE-1"})"), 400);
  EXPECT_EQ(status("POST", "/sessions/" + id + "/query", "not json"), 400);
  EXPECT_EQ(status("POST", "/sessions/" + id + "/query",
                   R"({"question":"HowDoIPerform","component":"Llever-test-head12","action":"polish"})"),
            422);
  EXPECT_EQ(status("POST", "/sessions", R"({"expertise":"Nobody","task":"Task"})"), 404);
  EXPECT_EQ(status("PUT", "/sessions/" + id + "/model", R"({"expertise":"Nobody"})"), 404);
  EXPECT_EQ(status("GET", "/sessions", ""), 405);
  EXPECT_EQ(status("GET", "/nowhere", ""), 404);
}

TEST_F(ServiceTest, KbEndpoints) {
  const auto comps = service_->handle("GET", "/kb/components", "");
  ASSERT_EQ(comps.status, 200);
  const json c = json::parse(comps.body);
  bool lever = false;
  for (const auto& e : c) {
    if (e.at("id") == "Llever-test-head12") {
      lever = true;
      EXPECT_EQ(e.at("part_of"), "Test-Head12");
    }
  }
  EXPECT_TRUE(lever);
  const auto qs = service_->handle("GET", "/kb/questions", "");
  ASSERT_EQ(qs.status, 200);
  EXPECT_EQ(json::parse(qs.body).size(), 7u);
}

TEST_F(ServiceTest, HttpRoundTrip) {
  const int port = service_->bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread server([&] { service_->listen(); });
  service_->wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/sessions", R"({"expertise":"Skilled","task":"Operations"})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const std::string id = json::parse(created->body).at("session_id").get<std::string>();
  auto answered = client.Post("/sessions/" + id + "/query",
                              R"({"question":"WhatIsIt","component":"DC-Power-Supply-23"})", "application/json");
  ASSERT_TRUE(answered);
  EXPECT_EQ(answered->status, 200);
  EXPECT_NE(answered->body.find("DC power supply"), std::string::npos);
  auto comps = client.Get("/kb/components");
  ASSERT_TRUE(comps);
  EXPECT_EQ(comps->status, 200);

  service_->stop();
  server.join();
}

}  // namespace
}  // namespace hyperdoc
