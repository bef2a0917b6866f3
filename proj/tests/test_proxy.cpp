#include <doctest.h>

#include <httplib.h>

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <thread>

#include "stegocanary/proxy.hpp"
#include "stegocanary/symbolic.hpp"

using namespace stegocanary;
using namespace stegocanary::proxy;
using json = nlohmann::json;

namespace {

constexpr const char* kChatPath = "/v1/chat/completions";

// Minimal chat-completions upstream: echoes the request body, with a teapot
// trigger for status-relay checks and one extra route for the catch-all.
struct StubUpstream {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::mutex mu;
  std::string last_chat_body;

  StubUpstream() {
    server.Post(kChatPath, [this](const httplib::Request& req,
                                  httplib::Response& res) {
      {
        std::lock_guard lock(mu);
        last_chat_body = req.body;
      }
      if (req.body.find("teapot") != std::string::npos) {
        res.status = 418;
        res.set_content("short and stout", "text/plain");
        return;
      }
      res.set_content(req.body, "application/json");
    });
    server.Get("/other/path",
               [](const httplib::Request&, httplib::Response& res) {
                 res.set_content("other-ok", "text/plain");
               });
    port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    thread = std::thread([this] { server.listen_after_bind(); });
    while (!server.is_running())
      std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }

  ~StubUpstream() {
    server.stop();
    thread.join();
  }

  std::string chat_body() {
    std::lock_guard lock(mu);
    return last_chat_body;
  }
};

struct Fixture {
  StubUpstream stub;
  tokens::OrgKey key{Bytes(32, 0x6E)};
  Bytes token = tokens::derive_hmac_token(key, "corpus/doc");
  std::shared_ptr<const scan::ScanEngine> engine;
  std::string marked;

  Fixture() {
    auto registry = std::make_shared<tokens::TokenRegistry>();
    tokens::TokenRegistry::HmacEntry e{};
    std::copy(token.begin(), token.end(), e.begin());
    registry->add_hmac_token(e);
    registry->seal();
    engine = std::make_shared<const scan::ScanEngine>(registry, scan::ScanPolicy{});

    std::string cover;
    for (int i = 0; i < 120; ++i) cover += "plain cover words here ";
    const auto enc = codec::zw_encode(cover, token);
    REQUIRE(enc);
    marked = *enc;
  }

  ProxyConfig config() const {
    ProxyConfig cfg;
    cfg.upstream = "http://127.0.0.1:" + std::to_string(stub.port);
    cfg.admin_token = "sesame";
    return cfg;
  }
};

std::string chat_request(const std::string& content) {
  return json{{"model", "stub-chat"},
              {"messages", {{{"role", "user"}, {"content", content}}}}}
      .dump();
}

httplib::Client client_for(const ProxyServer& proxy) {
  httplib::Client cli("127.0.0.1", proxy.port());
  cli.set_connection_timeout(5, 0);
  cli.set_read_timeout(5, 0);
  return cli;
}

}  // namespace

TEST_CASE("constructor rejects bad wiring") {
  Fixture fx;
  CHECK_THROWS_AS(ProxyServer({}, fx.engine), std::invalid_argument);
  ProxyConfig bad = fx.config();
  bad.upstream = "ftp://127.0.0.1:9";
  CHECK_THROWS_AS(ProxyServer(bad, fx.engine), std::invalid_argument);
  CHECK_THROWS_AS(ProxyServer(fx.config(), nullptr), std::invalid_argument);
}

TEST_CASE("start fails against an unreachable upstream") {
  Fixture fx;
  ProxyConfig cfg = fx.config();
  cfg.upstream = "http://127.0.0.1:1";
  ProxyServer proxy(cfg, fx.engine);
  CHECK_FALSE(proxy.start());
  proxy.stop();
}

TEST_CASE("benign requests are forwarded byte-identically") {
  Fixture fx;
  ProxyServer proxy(fx.config(), fx.engine);
  REQUIRE(proxy.start());
  CHECK(proxy.port() > 0);
  auto cli = client_for(proxy);

  const std::string body = chat_request("an ordinary question");
  const auto res = cli.Post(kChatPath, body, "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(fx.stub.chat_body() == body);  // body untouched by the proxy
  CHECK(res->body == body);            // echo relayed untouched
  proxy.stop();
}

TEST_CASE("upstream status codes are relayed") {
  Fixture fx;
  ProxyServer proxy(fx.config(), fx.engine);
  REQUIRE(proxy.start());
  auto cli = client_for(proxy);

  const auto res =
      cli.Post(kChatPath, chat_request("teapot request"), "application/json");
  REQUIRE(res);
  CHECK(res->status == 418);
  CHECK(res->body == "short and stout");
  proxy.stop();
}

TEST_CASE("malformed chat requests get 400 without touching the upstream") {
  Fixture fx;
  ProxyServer proxy(fx.config(), fx.engine);
  REQUIRE(proxy.start());
  auto cli = client_for(proxy);

  for (const std::string body :
       {std::string("{not json"), json{{"no", "messages"}}.dump(),
        json{{"messages", "not an array"}}.dump()}) {
    const auto res = cli.Post(kChatPath, body, "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
  }
  // Non-string content is skipped by the scanner, not an error.
  const auto odd = cli.Post(
      kChatPath,
      json{{"messages", {{{"role", "user"}, {"content", 7}}}}}.dump(),
      "application/json");
  REQUIRE(odd);
  CHECK(odd->status == 200);
  proxy.stop();
}

TEST_CASE("block mode returns 403, latches lockdown, and resets by token") {
  Fixture fx;
  const auto audit_path =
      std::filesystem::temp_directory_path() / "stego_proxy_audit.jsonl";
  std::filesystem::remove(audit_path);
  ProxyConfig cfg = fx.config();
  cfg.audit_log_path = audit_path.string();
  ProxyServer proxy(cfg, fx.engine);
  REQUIRE(proxy.start());
  auto cli = client_for(proxy);

  const auto blocked =
      cli.Post(kChatPath, chat_request(fx.marked), "application/json");
  REQUIRE(blocked);
  CHECK(blocked->status == 403);
  const json verdict = json::parse(blocked->body);
  CHECK(verdict["blocked"] == true);
  CHECK(verdict["layer"] == "zw");
  CHECK(verdict["identity_digest"] == to_hex(fx.token));
  CHECK(proxy.locked());

  // Everything afterwards bounces until an authorized reset.
  const auto benign =
      cli.Post(kChatPath, chat_request("harmless"), "application/json");
  REQUIRE(benign);
  CHECK(benign->status == 423);

  const auto denied = cli.Post("/admin/reset-lockdown",
                               json{{"token", "wrong"}}.dump(),
                               "application/json");
  REQUIRE(denied);
  CHECK(denied->status == 401);
  CHECK(proxy.locked());

  const auto reset = cli.Post("/admin/reset-lockdown",
                              json{{"token", "sesame"}}.dump(),
                              "application/json");
  REQUIRE(reset);
  CHECK(reset->status == 200);
  CHECK_FALSE(proxy.locked());

  const auto after =
      cli.Post(kChatPath, chat_request("harmless again"), "application/json");
  REQUIRE(after);
  CHECK(after->status == 200);
  proxy.stop();

  // Audit trail: every line is JSON with a timestamp and event; the block
  // event names the layer and the matched token digest.
  std::ifstream audit(audit_path);
  REQUIRE(audit);
  std::string line;
  bool saw_blocked = false, saw_reset = false;
  while (std::getline(audit, line)) {
    const json entry = json::parse(line);
    CHECK(entry.contains("ts"));
    CHECK(entry.contains("event"));
    if (entry["event"] == "blocked") {
      saw_blocked = true;
      CHECK(entry["layer"] == "zw");
      CHECK(entry["identity_digest"] == to_hex(fx.token));
    }
    if (entry["event"] == "lockdown_reset") saw_reset = true;
  }
  CHECK(saw_blocked);
  CHECK(saw_reset);
  std::filesystem::remove(audit_path);
}

TEST_CASE("flag mode forwards canary traffic and never locks") {
  Fixture fx;
  ProxyConfig cfg = fx.config();
  cfg.response_mode = ResponseMode::kFlag;
  ProxyServer proxy(cfg, fx.engine);
  REQUIRE(proxy.start());
  auto cli = client_for(proxy);

  const auto res =
      cli.Post(kChatPath, chat_request(fx.marked), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK_FALSE(proxy.locked());
  proxy.stop();
}

TEST_CASE("block mode without lockdown rejects but does not latch") {
  Fixture fx;
  ProxyConfig cfg = fx.config();
  cfg.lockdown_enabled = false;
  ProxyServer proxy(cfg, fx.engine);
  REQUIRE(proxy.start());
  auto cli = client_for(proxy);

  const auto blocked =
      cli.Post(kChatPath, chat_request(fx.marked), "application/json");
  REQUIRE(blocked);
  CHECK(blocked->status == 403);
  CHECK_FALSE(proxy.locked());

  const auto next =
      cli.Post(kChatPath, chat_request("still serving"), "application/json");
  REQUIRE(next);
  CHECK(next->status == 200);
  proxy.stop();
}

TEST_CASE("unmatched routes pass through to the upstream") {
  Fixture fx;
  ProxyServer proxy(fx.config(), fx.engine);
  REQUIRE(proxy.start());
  auto cli = client_for(proxy);

  const auto res = cli.Get("/other/path");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == "other-ok");
  proxy.stop();
}

TEST_CASE("direct lockdown reset api honors the admin token") {
  Fixture fx;
  ProxyConfig cfg = fx.config();
  ProxyServer proxy(cfg, fx.engine);
  REQUIRE(proxy.start());
  auto cli = client_for(proxy);
  REQUIRE(cli.Post(kChatPath, chat_request(fx.marked), "application/json"));
  CHECK(proxy.locked());
  CHECK_FALSE(proxy.reset_lockdown("nope"));
  CHECK(proxy.locked());
  CHECK(proxy.reset_lockdown("sesame"));
  CHECK_FALSE(proxy.locked());
  proxy.stop();
}
