#pragma once

#include <memory>
#include <string>

#include "stegocanary/scanner.hpp"

namespace stegocanary::proxy {

enum class ResponseMode { kBlock, kFlag };

struct ProxyConfig {
  std::string listen_host = "127.0.0.1";
  int listen_port = 0;  // 0 picks an ephemeral port
  std::string upstream;  // e.g. "http://127.0.0.1:8081"
  std::string chat_path = "/v1/chat/completions";
  ResponseMode response_mode = ResponseMode::kBlock;
  bool lockdown_enabled = true;
  std::string admin_token;
  std::string audit_log_path;  // empty logs to stderr
  double scan_budget_ms = 2000.0;
};

// Scanning reverse proxy for an OpenAI-style chat-completions API. Message
// contents are scanned before forwarding; a verified canary yields 403 and,
// if enabled, latches lockdown so later requests get 423 until an admin
// reset. Unmatched requests are forwarded with the body byte-identical to
// what was received. Admin endpoint: POST /admin/reset-lockdown with JSON
// {"token": "..."}; wrong token gets 401.
class ProxyServer {
 public:
  ProxyServer(ProxyConfig config, std::shared_ptr<const scan::ScanEngine> engine);
  ~ProxyServer();

  ProxyServer(const ProxyServer&) = delete;
  ProxyServer& operator=(const ProxyServer&) = delete;

  // Binds, probes the upstream (any HTTP response counts as reachable), and
  // starts serving on a background thread. False when either step fails.
  bool start();
  void stop();

  int port() const;
  bool locked() const;
  bool reset_lockdown(const std::string& admin_token);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace stegocanary::proxy
