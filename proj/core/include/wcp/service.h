#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace wcp {

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

struct ServiceOptions {
  // Requests computing at the same time; more are refused with 503.
  int workers = 4;
  std::string cors_origin = "*";
  std::int64_t default_time_limit_ms = 2000;
};

// Stateless JSON handlers behind the HTTP endpoints.
//
//   POST /solve     {"instance", "init"?, "delta"?, "seed"?, "time_limit_ms"?}
//                   -> {"solution", "trace_summary", "wall_time_ms"}
//   POST /oracle    {"instance"} -> {"solution", "proved_optimal", ...}
//   POST /generate  {"class"?, "divisor"?, "seed"?, ...} -> instance
//
// Status codes: 400 malformed request or instance, 413 instance beyond the
// oracle caps, 422 no feasible flow, 500 internal invariant breach, 503 all
// workers busy.
class PlannerService {
 public:
  explicit PlannerService(ServiceOptions options = {});

  HttpReply Solve(std::string_view body) const;
  HttpReply Oracle(std::string_view body) const;
  HttpReply Generate(std::string_view body) const;

  // Admission control around the handlers above. Unknown paths give 404.
  HttpReply Dispatch(std::string_view path, std::string_view body);

  class Ticket {
   public:
    explicit Ticket(std::atomic<int>* in_flight) : in_flight_(in_flight) {}
    Ticket(Ticket&& other) noexcept : in_flight_(other.in_flight_) {
      other.in_flight_ = nullptr;
    }
    Ticket(const Ticket&) = delete;
    Ticket& operator=(const Ticket&) = delete;
    ~Ticket() {
      if (in_flight_) --*in_flight_;
    }

   private:
    std::atomic<int>* in_flight_;
  };
  std::optional<Ticket> TryAdmit();
  int in_flight() const { return in_flight_.load(); }

  const ServiceOptions& options() const { return options_; }

 private:
  ServiceOptions options_;
  std::atomic<int> in_flight_{0};
};

// HTTP front end. Start() binds and serves on a background thread.
class PlannerServer {
 public:
  explicit PlannerServer(ServiceOptions options = {});
  ~PlannerServer();
  PlannerServer(const PlannerServer&) = delete;
  PlannerServer& operator=(const PlannerServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws on failure.
  int Start(const std::string& host, int port);
  // Blocks until Stop() is called from elsewhere.
  void Run(const std::string& host, int port);
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wcp
