#include "wcp/service.h"

#include <gtest/gtest.h>

#include <future>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "support/test_farms.h"
#include "wcp/generator.h"
#include "wcp/io.h"

namespace wcp {
namespace {

using nlohmann::json;

json FarmJson(std::int64_t turbines, std::uint64_t seed) {
  GeneratorSpec spec = DefaultGeneratorSpec(SizeClass::kN1);
  spec.min_turbines = spec.max_turbines = turbines;
  spec.seed = seed;
  return InstanceToJson(Generate(spec));
}

TEST(PlannerServiceTest, TrivialFarmSolves) {
  const json instance = InstanceToJson(testing::MakeFarm(
      {testing::Turbine(1), testing::Substation(2, 1)}, {{1, 2, 4}}, {{1, 2.5}}));
  PlannerService service;
  const HttpReply reply = service.Solve(json{{"instance", instance}}.dump());
  ASSERT_EQ(reply.status, 200) << reply.body;
  const json body = json::parse(reply.body);
  EXPECT_EQ(body["solution"]["total_cost"], 10.0);
  EXPECT_EQ(body["solution"]["edge_flows"][0]["flow"], 1);
  EXPECT_EQ(body["trace_summary"]["init"], "collecting-dijkstra-any");
  EXPECT_EQ(body["trace_summary"]["delta"], "inc-dec");
  EXPECT_TRUE(body.contains("wall_time_ms"));
}

TEST(PlannerServiceTest, ErrorStatuses) {
  PlannerService service;
  EXPECT_EQ(service.Solve("not json").status, 400);
  EXPECT_EQ(service.Solve(R"({"instance": {"turbines": 3}})").status, 400);
  const json infeasible = InstanceToJson(testing::MakeFarm(
      {testing::Turbine(1), testing::Turbine(2), testing::Substation(3, 1)},
      {{1, 3, 1}, {2, 3, 1}}, {{5, 1}}));
  EXPECT_EQ(service.Solve(json{{"instance", infeasible}}.dump()).status, 422);
  EXPECT_EQ(service.Oracle(json{{"instance", infeasible}}.dump()).status, 422);
  EXPECT_EQ(
      service.Solve(json{{"instance", FarmJson(5, 1)}, {"delta", "sideways"}}.dump()).status,
      400);
  EXPECT_EQ(service.Oracle(json{{"instance", FarmJson(50, 1)}}.dump()).status, 413);
  EXPECT_EQ(service.Dispatch("/nope", "{}").status, 404);
}

TEST(PlannerServiceTest, SameSeedSameSolution) {
  PlannerService service;
  const std::string request =
      json{{"instance", FarmJson(30, 2)}, {"delta", "random"}, {"seed", 11}}.dump();
  const json a = json::parse(service.Solve(request).body);
  const json b = json::parse(service.Solve(request).body);
  EXPECT_EQ(a["solution"].dump(), b["solution"].dump());
}

TEST(PlannerServiceTest, OracleProvesOptimality) {
  PlannerService service;
  const json instance = InstanceToJson(testing::SmallExampleFarm());
  const HttpReply reply = service.Oracle(json{{"instance", instance}}.dump());
  ASSERT_EQ(reply.status, 200) << reply.body;
  const json body = json::parse(reply.body);
  EXPECT_EQ(body["proved_optimal"], true);
  EXPECT_EQ(body["solution"]["total_cost"], 9.0);
}

TEST(PlannerServiceTest, GenerateIsDeterministic) {
  PlannerService service;
  const std::string request = R"({"class": "n2-like", "divisor": 2, "seed": 6})";
  const HttpReply a = service.Generate(request);
  ASSERT_EQ(a.status, 200) << a.body;
  EXPECT_EQ(a.body, service.Generate(request).body);
  EXPECT_NO_THROW(InstanceFromJson(json::parse(a.body)));
  const json fixed = json::parse(
      service.Generate(R"({"turbines": 10, "substations": 2, "connectivity": "complete"})")
          .body);
  EXPECT_EQ(fixed["edges"].size(), 65u);
  EXPECT_EQ(service.Generate(R"({"class": "n7"})").status, 400);
}

TEST(PlannerServiceTest, SaturationGives503) {
  PlannerService service({.workers = 1});
  auto ticket = service.TryAdmit();
  ASSERT_TRUE(ticket);
  EXPECT_EQ(service.Dispatch("/generate", "{}").status, 503);
  ticket.reset();
  EXPECT_EQ(service.in_flight(), 0);
  EXPECT_EQ(service.Dispatch("/generate", "{}").status, 200);
}

TEST(PlannerServiceTimingTest, TimeLimitIsHonored) {
  PlannerService service;
  GeneratorSpec spec = DefaultGeneratorSpec(SizeClass::kN4);
  spec.min_turbines = spec.max_turbines = 300;
  spec.seed = 1;
  const json request = {{"instance", InstanceToJson(Generate(spec))},
                        {"time_limit_ms", 100}};
  const json body = json::parse(service.Solve(request.dump()).body);
  EXPECT_LE(body["wall_time_ms"].get<double>(), 110.0);
}

// Concurrent requests give the same responses as serial ones.
TEST(PlannerServerTest, HttpEndpointsAndStatelessness) {
  PlannerServer server({.workers = 4});
  const int port = server.Start("127.0.0.1", 0);
  std::vector<std::string> requests;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    requests.push_back(json{{"instance", FarmJson(20, seed)},
                            {"delta", "stay-random"},
                            {"seed", seed}}
                           .dump());
  }
  auto post = [port](const std::string& path, const std::string& body) {
    httplib::Client client("127.0.0.1", port);
    auto res = client.Post(path, body, "application/json");
    EXPECT_TRUE(res);
    return std::pair(res ? res->status : 0, res ? res->body : std::string());
  };
  std::vector<std::string> serial;
  for (const auto& r : requests) {
    const auto [status, body] = post("/solve", r);
    ASSERT_EQ(status, 200);
    serial.push_back(json::parse(body)["solution"].dump());
  }
  std::vector<std::future<std::pair<int, std::string>>> futures;
  for (const auto& r : requests) {
    futures.push_back(std::async(std::launch::async, [&, r] { return post("/solve", r); }));
  }
  for (std::size_t i = 0; i < futures.size(); ++i) {
    const auto [status, body] = futures[i].get();
    if (status == 503) continue;  // saturated; admission control is allowed
    ASSERT_EQ(status, 200);
    EXPECT_EQ(json::parse(body)["solution"].dump(), serial[i]);
  }

  httplib::Client client("127.0.0.1", port);
  auto options = client.Options("/solve");
  ASSERT_TRUE(options);
  EXPECT_EQ(options->get_header_value("Access-Control-Allow-Origin"), "*");
  auto generated = client.Post("/generate", R"({"seed": 3})", "application/json");
  ASSERT_TRUE(generated);
  EXPECT_EQ(generated->status, 200);
  EXPECT_EQ(generated->get_header_value("Access-Control-Allow-Origin"), "*");
  auto oracle = client.Post("/oracle", json{{"instance", FarmJson(50, 1)}}.dump(),
                            "application/json");
  ASSERT_TRUE(oracle);
  EXPECT_EQ(oracle->status, 413);
  server.Stop();
}

}  // namespace
}  // namespace wcp
