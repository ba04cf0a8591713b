#include "wcp/service.h"

#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "wcp/errors.h"
#include "wcp/generator.h"
#include "wcp/io.h"
#include "wcp/oracle.h"
#include "wcp/solver.h"

namespace wcp {

using nlohmann::json;

namespace {

HttpReply Error(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

json ParseBody(std::string_view body) {
  json doc = json::parse(body.begin(), body.end(), nullptr, false);
  if (doc.is_discarded()) throw InputError("request body is not valid JSON");
  if (!doc.is_object()) throw InputError("request body must be an object");
  return doc;
}

template <typename T>
T Optional(const json& doc, const char* key, T fallback) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("\"") + key + "\" has the wrong type");
  }
}

const json& Instance(const json& doc) {
  auto it = doc.find("instance");
  if (it == doc.end()) throw InputError("request is missing \"instance\"");
  return *it;
}

template <typename Handler>
HttpReply Guard(Handler&& handler) {
  try {
    return handler();
  } catch (const InputError& e) {
    return Error(400, e.what());
  } catch (const json::exception& e) {
    return Error(400, e.what());
  } catch (const OracleRefusal& e) {
    return Error(413, e.what());
  } catch (const InitializationError& e) {
    return Error(422, e.what());
  } catch (const std::exception& e) {
    return Error(500, e.what());
  }
}

}  // namespace

PlannerService::PlannerService(ServiceOptions options)
    : options_(std::move(options)) {
  if (options_.workers < 1) throw InputError("workers must be positive");
}

HttpReply PlannerService::Solve(std::string_view body) const {
  return Guard([&] {
    const json request = ParseBody(body);
    const WindFarm farm = InstanceFromJson(Instance(request));
    SolveOptions solve;
    const auto init_name =
        Optional<std::string>(request, "init", "collecting-dijkstra-any");
    const auto init = ParseInitStrategy(init_name);
    if (!init) throw InputError("unknown init strategy: " + init_name);
    const auto delta_name = Optional<std::string>(request, "delta", "inc-dec");
    const auto delta = ParseDeltaKind(delta_name);
    if (!delta) throw InputError("unknown delta strategy: " + delta_name);
    solve.init = *init;
    solve.delta = *delta;
    solve.seed = Optional<std::uint64_t>(request, "seed", 0);
    const auto limit = Optional<std::int64_t>(request, "time_limit_ms",
                                              options_.default_time_limit_ms);
    if (limit < 0) throw InputError("time_limit_ms must be non-negative");
    solve.limits.time = std::chrono::milliseconds(limit);

    const Solution solution = wcp::Solve(farm, solve);
    if (!CheckFeasible(farm, solution.flow).ok()) {
      throw InvariantError("solver returned an infeasible flow");
    }
    json reply;
    reply["solution"] = SolutionToJson(farm, solution.flow, solution.cost);
    reply["trace_summary"] = {
        {"init", InitName(*init)},
        {"delta", DeltaName(*delta)},
        {"seed", solution.seed},
        {"iterations", solution.iterations},
        {"cancels", solution.trace.size()},
        {"initial_cost", solution.initial_cost.ToDouble()},
        {"final_cost", solution.cost.ToDouble()},
        {"stop", StopReasonName(solution.stop)},
    };
    reply["wall_time_ms"] = solution.wall_ms;
    return HttpReply{200, reply.dump()};
  });
}

HttpReply PlannerService::Oracle(std::string_view body) const {
  return Guard([&] {
    const json request = ParseBody(body);
    const WindFarm farm = InstanceFromJson(Instance(request));
    const OracleResult result = SolveExactly(farm);
    if (!result.feasible) {
      throw InitializationError("instance has no feasible flow");
    }
    json reply;
    reply["solution"] = SolutionToJson(farm, result.flow, result.cost);
    reply["proved_optimal"] = true;
    reply["nodes_visited"] = result.nodes_visited;
    return HttpReply{200, reply.dump()};
  });
}

HttpReply PlannerService::Generate(std::string_view body) const {
  return Guard([&] {
    const json request = body.empty() ? json::object() : ParseBody(body);
    const auto class_name = Optional<std::string>(request, "class", "n1-like");
    const auto size_class = ParseSizeClass(class_name);
    if (!size_class) throw InputError("unknown size class: " + class_name);
    GeneratorSpec spec = DefaultGeneratorSpec(
        *size_class, Optional<std::int64_t>(request, "divisor", 1));
    spec.seed = Optional<std::uint64_t>(request, "seed", 0);
    if (request.contains("turbines")) {
      spec.min_turbines = spec.max_turbines =
          Optional<std::int64_t>(request, "turbines", 0);
    }
    if (request.contains("substations")) {
      spec.min_substations = spec.max_substations =
          Optional<std::int64_t>(request, "substations", 0);
    }
    spec.k = Optional<std::int64_t>(request, "k", spec.k);
    const auto connectivity = Optional<std::string>(request, "connectivity", "");
    if (connectivity == "complete") {
      spec.connectivity = Connectivity::kComplete;
    } else if (connectivity == "k-nearest") {
      spec.connectivity = Connectivity::kKNearest;
    } else if (!connectivity.empty()) {
      throw InputError("unknown connectivity: " + connectivity);
    }
    return HttpReply{200, InstanceToJson(wcp::Generate(spec)).dump()};
  });
}

std::optional<PlannerService::Ticket> PlannerService::TryAdmit() {
  int current = in_flight_.load();
  while (current < options_.workers) {
    if (in_flight_.compare_exchange_weak(current, current + 1)) {
      return Ticket(&in_flight_);
    }
  }
  return std::nullopt;
}

HttpReply PlannerService::Dispatch(std::string_view path, std::string_view body) {
  HttpReply (PlannerService::*handler)(std::string_view) const = nullptr;
  if (path == "/solve") {
    handler = &PlannerService::Solve;
  } else if (path == "/oracle") {
    handler = &PlannerService::Oracle;
  } else if (path == "/generate") {
    handler = &PlannerService::Generate;
  } else {
    return Error(404, "no such endpoint");
  }
  const auto ticket = TryAdmit();
  if (!ticket) return Error(503, "all workers are busy");
  return (this->*handler)(body);
}

struct PlannerServer::Impl {
  explicit Impl(ServiceOptions options) : service(std::move(options)) {}
  PlannerService service;
  httplib::Server server;
  std::thread thread;
};

PlannerServer::PlannerServer(ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {
  auto& server = impl_->server;
  const int workers = impl_->service.options().workers;
  // Spare connection threads so that excess requests get a prompt 503.
  server.new_task_queue = [workers] {
    return new httplib::ThreadPool(static_cast<size_t>(workers) + 4);
  };
  const std::string origin = impl_->service.options().cors_origin;
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Methods", "POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  for (const char* path : {"/solve", "/oracle", "/generate"}) {
    server.Post(path, [this, path](const httplib::Request& req,
                                   httplib::Response& res) {
      const HttpReply reply = impl_->service.Dispatch(path, req.body);
      res.status = reply.status;
      res.set_content(reply.body, "application/json");
    });
  }
}

PlannerServer::~PlannerServer() { Stop(); }

int PlannerServer::Start(const std::string& host, int port) {
  auto& server = impl_->server;
  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw std::runtime_error("cannot bind " + host);
  impl_->thread = std::thread([&server] { server.listen_after_bind(); });
  server.wait_until_ready();
  return bound;
}

void PlannerServer::Run(const std::string& host, int port) {
  if (!impl_->server.listen(host, port)) {
    throw std::runtime_error("cannot listen on " + host + ":" +
                             std::to_string(port));
  }
}

void PlannerServer::Stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace wcp
