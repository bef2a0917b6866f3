#include "stegocanary/proxy.hpp"

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>

namespace stegocanary::proxy {

namespace {

using nlohmann::json;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      now.time_since_epoch())
                      .count() %
                  1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

struct Upstream {
  std::string host;
  int port = 80;
};

template <typename T>
std::string header_or(const T& msg, const std::string& key,
                      const std::string& fallback) {
  return msg.has_header(key) ? msg.get_header_value(key) : fallback;
}

// Accepts http://host[:port][/]; anything else is a config error.
std::optional<Upstream> parse_upstream(const std::string& url) {
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) return std::nullopt;
  std::string rest = url.substr(kScheme.size());
  if (const auto slash = rest.find('/'); slash != std::string::npos)
    rest = rest.substr(0, slash);
  Upstream up;
  if (const auto colon = rest.find(':'); colon != std::string::npos) {
    up.host = rest.substr(0, colon);
    try {
      up.port = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  } else {
    up.host = rest;
  }
  if (up.host.empty() || up.port <= 0 || up.port > 65535) return std::nullopt;
  return up;
}

}  // namespace

struct ProxyServer::Impl {
  ProxyConfig cfg;
  std::shared_ptr<const scan::ScanEngine> engine;
  Upstream upstream;
  httplib::Server server;
  std::thread worker;
  int port = -1;
  std::atomic<bool> locked{false};
  std::mutex audit_mu;
  std::ofstream audit_file;

  void audit(json entry) {
    entry["ts"] = iso_timestamp();
    std::lock_guard lock(audit_mu);
    if (audit_file.is_open())
      audit_file << entry.dump() << '\n' << std::flush;
    else
      std::cerr << entry.dump() << '\n';
  }

  httplib::Client make_client() {
    httplib::Client cli(upstream.host, upstream.port);
    cli.set_connection_timeout(5, 0);
    cli.set_read_timeout(30, 0);
    return cli;
  }

  // Forwards the request with the body byte-identical to what arrived and
  // relays the upstream response. Host/Content-Length are recomputed.
  void forward(const httplib::Request& req, httplib::Response& res) {
    httplib::Headers headers;
    for (const auto& [k, v] : req.headers)
      if (k != "Host" && k != "Content-Length" && k != "REMOTE_ADDR" &&
          k != "REMOTE_PORT" && k != "LOCAL_ADDR" && k != "LOCAL_PORT")
        headers.emplace(k, v);
    auto cli = make_client();
    httplib::Result upstream_res;
    const std::string content_type = header_or(
        req, "Content-Type", req.method == "POST" ? "application/json" : "");
    if (req.method == "POST")
      upstream_res = cli.Post(req.path, headers, req.body, content_type);
    else
      upstream_res = cli.Get(req.path, headers);
    if (!upstream_res) {
      res.status = 502;
      res.set_content(json{{"error", "upstream unreachable"}}.dump(),
                      "application/json");
      audit({{"event", "upstream_error"}, {"path", req.path}});
      return;
    }
    res.status = upstream_res->status;
    res.set_content(upstream_res->body,
                    header_or(*upstream_res, "Content-Type",
                              "application/json"));
  }

  void handle_chat(const httplib::Request& req, httplib::Response& res) {
    if (locked.load()) {
      res.status = 423;
      res.set_content(json{{"locked", true}}.dump(), "application/json");
      audit({{"event", "locked_reject"}, {"path", req.path}});
      return;
    }
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.contains("messages") ||
        !body["messages"].is_array()) {
      res.status = 400;
      res.set_content(json{{"error", "malformed chat request"}}.dump(),
                      "application/json");
      audit({{"event", "bad_request"}, {"path", req.path}});
      return;
    }
    double scan_ms = 0.0;
    for (const auto& msg : body["messages"]) {
      if (!msg.contains("content") || !msg["content"].is_string()) continue;
      const auto verdict =
          engine->scan(msg["content"].get_ref<const std::string&>());
      scan_ms += verdict.total_latency_ms;
      if (!verdict.matched) continue;
      const std::string digest =
          verdict.identity ? verdict.identity->token_digest : "";
      audit({{"event",
              cfg.response_mode == ResponseMode::kBlock ? "blocked" : "flagged"},
             {"layer", verdict.matched_layer},
             {"identity_digest", digest},
             {"latency_ms", scan_ms}});
      if (cfg.response_mode == ResponseMode::kBlock) {
        if (cfg.lockdown_enabled) locked.store(true);
        res.status = 403;
        res.set_content(json{{"blocked", true},
                             {"layer", verdict.matched_layer},
                             {"identity_digest", digest}}
                            .dump(),
                        "application/json");
        return;
      }
      break;  // flag mode: logged, never blocked
    }
    if (scan_ms > cfg.scan_budget_ms)
      audit({{"event", "scan_budget_exceeded"}, {"latency_ms", scan_ms}});
    forward(req, res);
    audit({{"event", "forwarded"},
           {"path", req.path},
           {"verdict", "clean"},
           {"latency_ms", scan_ms}});
  }

  void handle_reset(const httplib::Request& req, httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, false);
    const std::string token =
        body.is_object() && body.contains("token") && body["token"].is_string()
            ? body["token"].get<std::string>()
            : "";
    if (cfg.admin_token.empty() || token != cfg.admin_token) {
      res.status = 401;
      res.set_content(json{{"error", "unauthorized"}}.dump(),
                      "application/json");
      audit({{"event", "reset_denied"}});
      return;
    }
    locked.store(false);
    res.set_content(json{{"ok", true}}.dump(), "application/json");
    audit({{"event", "lockdown_reset"}});
  }
};

ProxyServer::ProxyServer(ProxyConfig config,
                         std::shared_ptr<const scan::ScanEngine> engine)
    : impl_(std::make_unique<Impl>()) {
  impl_->cfg = std::move(config);
  impl_->engine = std::move(engine);
  if (!impl_->engine) throw std::invalid_argument("ProxyServer: engine required");
  const auto up = parse_upstream(impl_->cfg.upstream);
  if (!up)
    throw std::invalid_argument("ProxyServer: bad upstream URL: " +
                                impl_->cfg.upstream);
  impl_->upstream = *up;
  if (!impl_->cfg.audit_log_path.empty()) {
    impl_->audit_file.open(impl_->cfg.audit_log_path, std::ios::app);
    if (!impl_->audit_file)
      throw std::runtime_error("cannot open audit log: " +
                               impl_->cfg.audit_log_path);
  }
}

ProxyServer::~ProxyServer() { stop(); }

bool ProxyServer::start() {
  auto* impl = impl_.get();
  impl->server.Post(impl->cfg.chat_path,
                    [impl](const httplib::Request& req, httplib::Response& res) {
                      impl->handle_chat(req, res);
                    });
  impl->server.Post("/admin/reset-lockdown",
                    [impl](const httplib::Request& req, httplib::Response& res) {
                      impl->handle_reset(req, res);
                    });
  // Everything else passes through untouched (and is still audited).
  const auto passthrough = [impl](const httplib::Request& req,
                                  httplib::Response& res) {
    impl->forward(req, res);
    impl->audit({{"event", "forwarded_other"}, {"path", req.path}});
  };
  impl->server.Post(".*", passthrough);
  impl->server.Get(".*", passthrough);

  if (impl->cfg.listen_port == 0) {
    impl->port = impl->server.bind_to_any_port(impl->cfg.listen_host);
    if (impl->port <= 0) return false;
  } else {
    if (!impl->server.bind_to_port(impl->cfg.listen_host, impl->cfg.listen_port))
      return false;
    impl->port = impl->cfg.listen_port;
  }

  // The upstream must answer at startup; any HTTP status counts.
  auto cli = impl->make_client();
  if (!cli.Get("/")) {
    impl->audit({{"event", "startup_failed"},
                 {"error", "upstream unreachable"},
                 {"upstream", impl->cfg.upstream}});
    impl->server.stop();
    return false;
  }

  impl->worker = std::thread([impl] { impl->server.listen_after_bind(); });
  while (!impl->server.is_running())
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  impl->audit({{"event", "started"}, {"port", impl->port}});
  return true;
}

void ProxyServer::stop() {
  if (!impl_) return;
  if (impl_->worker.joinable()) {
    impl_->server.stop();
    impl_->worker.join();
  }
}

int ProxyServer::port() const { return impl_->port; }

bool ProxyServer::locked() const { return impl_->locked.load(); }

bool ProxyServer::reset_lockdown(const std::string& admin_token) {
  if (impl_->cfg.admin_token.empty() || admin_token != impl_->cfg.admin_token)
    return false;
  impl_->locked.store(false);
  return true;
}

}  // namespace stegocanary::proxy
