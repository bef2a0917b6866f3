#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <httplib.h>

#include "stegocanary/linguistic.hpp"
#include "stegocanary/proxy.hpp"
#include "stegocanary/ref_model.hpp"
#include "stegocanary/registry.hpp"
#include "stegocanary/scanner.hpp"
#include "stegocanary/stack.hpp"
#include "stegocanary/symbolic.hpp"
#include "stegocanary/transport.hpp"

namespace stegocanary::tools {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Deterministic fixture credentials; experiments are reproducible runs, not
// deployments, so the key is fixed and public.
constexpr char kFixtureKeyChars[] = "stegocanary-fixture-org-key-0001";
constexpr char kFixtureOrg[] = "org-fixture";

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

struct Doc {
  std::string id;
  std::string text;
};

std::vector<Doc> load_corpus(const RunnerOptions& opts) {
  const fs::path dir = fs::path(opts.data_dir) / "corpus";
  std::vector<Doc> docs;
  if (fs::is_directory(dir)) {
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".txt") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths)
      docs.push_back({"corpus/" + p.filename().string(), read_file(p)});
  }
  if (docs.empty())
    throw std::runtime_error("no corpus files under " + dir.string());
  if (opts.file_limit && docs.size() > opts.file_limit)
    docs.resize(opts.file_limit);
  return docs;
}

// One key, one model, one registry covering every file id an experiment can
// touch, under both schemes, so a decode can only verify by reproducing a
// real token.
struct Fixture {
  tokens::OrgKey key;
  std::shared_ptr<const codec::RefModel> model;
  std::shared_ptr<const tokens::TokenRegistry> registry;
  codec::LmParams lm;

  Bytes token(tokens::Scheme scheme, const std::string& file_id) const {
    return scheme == tokens::Scheme::kHmac
               ? tokens::derive_hmac_token(key, file_id)
               : tokens::derive_eddsa_token(key, file_id);
  }
};

std::vector<std::string> generated_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i)
    ids.push_back("generated_" + std::to_string(i));
  return ids;
}

Fixture make_fixture(const RunnerOptions& opts, const std::vector<Doc>& docs) {
  Fixture fx{tokens::OrgKey(Bytes(kFixtureKeyChars,
                                  kFixtureKeyChars + sizeof kFixtureKeyChars - 1)),
             nullptr, nullptr, {}};
  fx.model = std::make_shared<codec::RefModel>(codec::RefModel::build_from_corpus(
      read_file(fs::path(opts.data_dir) / "model_corpus.txt")));

  auto reg = std::make_shared<tokens::TokenRegistry>();
  std::vector<std::string> ids;
  for (const auto& d : docs) ids.push_back(d.id);
  for (auto& g : generated_ids(std::max<std::size_t>(opts.generated_count, 128)))
    ids.push_back(std::move(g));
  for (const auto& id : ids) {
    const Bytes t = tokens::derive_hmac_token(fx.key, id);
    tokens::TokenRegistry::HmacEntry e{};
    std::copy(t.begin(), t.end(), e.begin());
    reg->add_hmac_token(e);
  }
  reg->add_eddsa_key(kFixtureOrg, tokens::eddsa_public_key(fx.key));
  reg->seal();
  fx.registry = reg;
  return fx;
}

class Jsonl {
 public:
  explicit Jsonl(const fs::path& p) : out_(p, std::ios::trunc) {
    if (!out_) throw std::runtime_error("cannot write " + p.string());
  }
  void row(const json& j) { out_ << j.dump() << '\n'; }

 private:
  std::ofstream out_;
};

class Csv {
 public:
  Csv(const fs::path& p, const std::string& header) : out_(p, std::ios::trunc) {
    if (!out_) throw std::runtime_error("cannot write " + p.string());
    out_ << header << '\n';
  }
  template <typename... T>
  void row(const T&... cell) {
    bool first = true;
    ((out_ << (first ? "" : ","), first = false, out_ << cell), ...);
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

std::string rate_str(int recovered, int files) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.1f",
                files ? 100.0 * recovered / files : 0.0);
  return buf;
}

// Encoded document paired with the token its layers embed.
struct Encoded {
  std::string file_id;
  std::string text;
  Bytes token;
};

// Encodes one config over its natural input set: generated ids for
// cover-generating configs, the corpus otherwise. Throws on capacity
// shortfall since the bundled corpus is sized to fit.
std::vector<Encoded> encode_all(const codec::StackConfig& cfg,
                                const codec::StackContext& ctx,
                                const Fixture& fx, tokens::Scheme scheme,
                                const std::vector<Doc>& docs,
                                std::size_t generated_count) {
  std::vector<Encoded> out;
  if (cfg.mode == codec::StackMode::kB) {
    for (const auto& id : generated_ids(generated_count)) {
      const Bytes token = fx.token(scheme, id);
      auto enc = codec::stack_encode(cfg, ctx, token, {});
      if (!enc)
        throw std::runtime_error("encode failed for " + cfg.name + " on " + id);
      out.push_back({id, std::move(enc->text), token});
    }
  } else {
    for (const auto& d : docs) {
      const Bytes token = fx.token(scheme, d.id);
      auto enc = codec::stack_encode(cfg, ctx, token, d.text);
      if (!enc)
        throw std::runtime_error("encode failed for " + cfg.name + " on " + d.id);
      out.push_back({d.id, std::move(enc->text), token});
    }
  }
  return out;
}

struct GridCell {
  int files = 0;
  int recovered = 0;
};

// Runs one (config, chain) cell: transform every encoded file, decode the
// stack, tally per-layer recovery plus the any-layer union.
void run_cell(const codec::StackConfig& cfg, const codec::StackContext& ctx,
              const std::vector<Encoded>& encoded,
              const transport::Chain& chain, const transport::TransformOptions& topts,
              const std::string& experiment, Jsonl& log, Csv& csv) {
  std::vector<GridCell> per_layer(cfg.layers.size());
  GridCell any;
  for (const auto& e : encoded) {
    const std::string transformed = transport::apply_chain(chain, e.text, topts);
    const auto dec = codec::stack_decode(cfg, ctx, transformed);
    bool any_rec = false;
    for (std::size_t i = 0; i < dec.outcomes.size(); ++i) {
      // outcomes are in decode order (reverse of config order)
      const auto& o = dec.outcomes[i];
      const bool rec = o.candidate && *o.candidate == e.token;
      const std::size_t cfg_idx = cfg.layers.size() - 1 - i;
      per_layer[cfg_idx].files++;
      per_layer[cfg_idx].recovered += rec;
      any_rec = any_rec || rec;
      log.row({{"experiment", experiment},
               {"config", cfg.name},
               {"chain", chain.name},
               {"file", e.file_id},
               {"layer", codec::layer_name(o.layer)},
               {"recovered", rec}});
    }
    any.files++;
    any.recovered += any_rec;
  }
  for (std::size_t i = 0; i < cfg.layers.size(); ++i)
    csv.row(cfg.name, chain.name, codec::layer_name(cfg.layers[i]),
            per_layer[i].files, per_layer[i].recovered,
            rate_str(per_layer[i].recovered, per_layer[i].files));
  csv.row(cfg.name, chain.name, "any", any.files, any.recovered,
          rate_str(any.recovered, any.files));
}

transport::Chain single_transform_chain(transport::TransformId id) {
  return transport::Chain{transport::transform_name(id), {id}};
}

struct Stats {
  double mean = 0, stdev = 0, max = 0;
};

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  for (double x : xs) {
    s.mean += x;
    s.max = std::max(s.max, x);
  }
  s.mean /= xs.size();
  for (double x : xs) s.stdev += (x - s.mean) * (x - s.mean);
  s.stdev = std::sqrt(s.stdev / xs.size());
  return s;
}

}  // namespace

std::string default_data_dir() {
#ifdef STEGOCANARY_DATA_DIR
  return STEGOCANARY_DATA_DIR;
#else
  return "data";
#endif
}

int run_heatmap(const RunnerOptions& opts) {
  const auto t0 = Clock::now();
  const auto docs = load_corpus(opts);
  const auto fx = make_fixture(opts, docs);
  const codec::StackContext ctx{fx.model.get(), fx.lm};
  fs::create_directories(opts.out_dir);
  Csv csv(fs::path(opts.out_dir) / "heatmap.csv",
          "config,chain,layer,files,recovered,rate");
  Jsonl log(fs::path(opts.out_dir) / "heatmap_files.jsonl");
  const transport::TransformOptions topts{opts.paraphrase_cmd};

  for (const char* name : {"M1", "M2", "M3", "M4"}) {
    const auto cfg = codec::config_from_spec(name);
    const auto encoded =
        encode_all(*cfg, ctx, fx, opts.scheme, docs, docs.size());
    for (int t = 0; t <= 12; ++t) {
      const auto id = static_cast<transport::TransformId>(t);
      if (id == transport::TransformId::kT12 && opts.paraphrase_cmd.empty()) {
        if (!opts.quiet)
          std::cerr << "heatmap: T12 unavailable (no paraphrase command), "
                       "rows skipped\n";
        continue;
      }
      run_cell(*cfg, ctx, encoded, single_transform_chain(id), topts, "heatmap",
               log, csv);
    }
  }
  if (!opts.quiet)
    std::cout << "heatmap: " << docs.size() << " files in "
              << ms_between(t0, Clock::now()) / 1000.0 << " s -> "
              << opts.out_dir << "/heatmap.csv\n";
  return 0;
}

int run_stacking(const RunnerOptions& opts) {
  const auto t0 = Clock::now();
  const auto docs = load_corpus(opts);
  const auto fx = make_fixture(opts, docs);
  const codec::StackContext ctx{fx.model.get(), fx.lm};
  fs::create_directories(opts.out_dir);
  Csv csv(fs::path(opts.out_dir) / "stacking.csv",
          "config,chain,layer,files,recovered,rate");
  Jsonl log(fs::path(opts.out_dir) / "stacking_files.jsonl");
  const transport::TransformOptions topts{opts.paraphrase_cmd};

  std::vector<transport::Chain> chains;
  chains.push_back(transport::Chain{"Tier-0", {}});
  for (const auto& c : transport::standard_chains()) {
    if (c.name == "Tier-4" && opts.paraphrase_cmd.empty()) {
      if (!opts.quiet)
        std::cerr << "stacking: Tier-4 unavailable (no paraphrase command), "
                     "rows skipped\n";
      continue;
    }
    chains.push_back(c);
  }

  for (const char* name : {"M1", "M2", "M3", "M4", "M5", "M6", "M7"}) {
    const auto cfg = codec::config_from_spec(name);
    const auto encoded =
        encode_all(*cfg, ctx, fx, opts.scheme, docs, opts.generated_count);
    for (const auto& chain : chains)
      run_cell(*cfg, ctx, encoded, chain, topts, "stacking", log, csv);
  }
  if (!opts.quiet)
    std::cout << "stacking: done in " << ms_between(t0, Clock::now()) / 1000.0
              << " s -> " << opts.out_dir << "/stacking.csv\n";
  return 0;
}

int run_fp(const RunnerOptions& opts) {
  const auto docs = load_corpus(opts);
  const auto fx = make_fixture(opts, docs);
  fs::create_directories(opts.out_dir);
  Jsonl log(fs::path(opts.out_dir) / "fp_files.jsonl");

  // Unmarked set: every corpus file under five paragraph rotations, so the
  // sweep sees both original and re-ordered prose.
  std::vector<Doc> unmarked;
  for (const auto& d : docs) {
    std::vector<std::string> paras;
    std::size_t pos = 0;
    while (pos < d.text.size()) {
      auto nl = d.text.find("\n\n", pos);
      if (nl == std::string::npos) nl = d.text.size();
      paras.push_back(d.text.substr(pos, nl - pos));
      pos = nl + 2;
    }
    for (int rot = 0; rot < 5; ++rot) {
      std::string t;
      for (std::size_t i = 0; i < paras.size(); ++i) {
        if (i) t += "\n\n";
        t += paras[(i + rot) % paras.size()];
      }
      unmarked.push_back({d.id + "#rot" + std::to_string(rot), std::move(t)});
    }
  }

  long matches_hmac = 0, matches_eddsa = 0, lm_candidates = 0, lm_decodes = 0;
  for (const auto& d : unmarked) {
    for (const auto scheme : {tokens::Scheme::kHmac, tokens::Scheme::kEddsa}) {
      for (const std::string dec_name : {"ws", "zw", "hg", "lm"}) {
        std::optional<Bytes> cand;
        if (dec_name == "ws") cand = codec::ws_decode(d.text);
        else if (dec_name == "zw") cand = codec::zw_decode(d.text);
        else if (dec_name == "hg") cand = codec::hg_decode(d.text);
        else {
          cand = codec::lm_decode(*fx.model, d.text, fx.lm);
          lm_decodes++;
          lm_candidates += cand.has_value();
        }
        const bool matched =
            cand && fx.registry->verify(*cand, scheme).has_value();
        (scheme == tokens::Scheme::kHmac ? matches_hmac : matches_eddsa) +=
            matched;
        log.row({{"experiment", "fp"},
                 {"file", d.id},
                 {"scheme", tokens::scheme_name(scheme)},
                 {"decoder", dec_name},
                 {"candidate", cand.has_value()},
                 {"matched", matched}});
      }
    }
  }

  // Random-byte sweep through the full scan engine (never throws, never
  // matches). Fixed seed keeps the report reproducible.
  constexpr std::size_t kRandomInputs = 10000;
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<int> len_dist(64, 512);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  long random_matches = 0;
  scan::ScanPolicy pol_h, pol_e;
  pol_e.scheme = tokens::Scheme::kEddsa;
  const scan::ScanEngine eng_h(
      std::shared_ptr<const tokens::TokenRegistry>(fx.registry), pol_h,
      fx.model, fx.lm);
  const scan::ScanEngine eng_e(
      std::shared_ptr<const tokens::TokenRegistry>(fx.registry), pol_e,
      fx.model, fx.lm);
  for (std::size_t i = 0; i < kRandomInputs; ++i) {
    std::string s(static_cast<std::size_t>(len_dist(rng)), '\0');
    for (auto& c : s) c = static_cast<char>(byte_dist(rng));
    random_matches += eng_h.scan(s).matched;
    random_matches += eng_e.scan(s).matched;
  }

  const json report = {{"unmarked_files", unmarked.size()},
                       {"decodes_per_scheme", unmarked.size() * 4},
                       {"verified_matches_hmac", matches_hmac},
                       {"verified_matches_eddsa", matches_eddsa},
                       {"lm_decodes", lm_decodes},
                       {"lm_candidates", lm_candidates},
                       {"random_inputs", kRandomInputs},
                       {"random_matches", random_matches}};
  std::ofstream out(fs::path(opts.out_dir) / "fp_report.json");
  out << report.dump(2) << '\n';
  if (!opts.quiet) std::cout << "fp: " << report.dump() << '\n';
  return 0;
}

int run_timing(const RunnerOptions& opts) {
  const auto docs = load_corpus(opts);
  const auto fx = make_fixture(opts, docs);
  const codec::StackContext ctx{fx.model.get(), fx.lm};
  fs::create_directories(opts.out_dir);
  Csv csv(fs::path(opts.out_dir) / "timing.csv",
          "config,op,files,mean_ms,std_ms,max_ms");
  const scan::ScanEngine engine(
      std::shared_ptr<const tokens::TokenRegistry>(fx.registry),
      scan::ScanPolicy{.scheme = opts.scheme}, fx.model, fx.lm);

  for (const char* name : {"M1", "M2", "M3", "M4", "M5", "M6", "M7"}) {
    const auto cfg = codec::config_from_spec(name);
    const bool generated = cfg->mode == codec::StackMode::kB;
    std::vector<double> enc_ms, dec_ms, scan_ms;
    std::vector<Encoded> encoded;
    const auto ids = generated_ids(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
      const std::string file_id = generated ? ids[i] : docs[i].id;
      const Bytes token = fx.token(opts.scheme, file_id);
      const auto t0 = Clock::now();
      auto enc = codec::stack_encode(
          *cfg, ctx, token,
          generated ? std::string_view{} : std::string_view(docs[i].text));
      const auto t1 = Clock::now();
      if (!enc) throw std::runtime_error("timing encode failed: " + cfg->name);
      enc_ms.push_back(ms_between(t0, t1));
      encoded.push_back({file_id, std::move(enc->text), token});
    }
    for (const auto& e : encoded) {
      const auto t0 = Clock::now();
      const auto dec = codec::stack_decode(*cfg, ctx, e.text);
      const auto t1 = Clock::now();
      engine.scan(e.text);
      const auto t2 = Clock::now();
      dec_ms.push_back(ms_between(t0, t1));
      scan_ms.push_back(ms_between(t1, t2));
      (void)dec;
    }
    for (const auto& [op, xs] :
         std::initializer_list<std::pair<const char*, const std::vector<double>&>>{
             {"encode", enc_ms}, {"decode", dec_ms}, {"scan", scan_ms}}) {
      const Stats s = stats_of(xs);
      char mean[32], sd[32], mx[32];
      std::snprintf(mean, sizeof mean, "%.4f", s.mean);
      std::snprintf(sd, sizeof sd, "%.4f", s.stdev);
      std::snprintf(mx, sizeof mx, "%.4f", s.max);
      csv.row(cfg->name, op, xs.size(), mean, sd, mx);
    }
  }
  if (!opts.quiet)
    std::cout << "timing: -> " << opts.out_dir << "/timing.csv\n";
  return 0;
}

int run_proxy_e2e(const RunnerOptions& opts) {
  fs::create_directories(opts.out_dir);
  const auto docs = load_corpus(opts);
  const auto fx = make_fixture(opts, docs);
  const codec::StackContext ctx{fx.model.get(), fx.lm};

  const std::string file_id = "generated_0";
  const Bytes token = fx.token(tokens::Scheme::kHmac, file_id);
  const auto cfg = codec::config_from_spec("M6");
  const auto canary = codec::stack_encode(*cfg, ctx, token, {});
  if (!canary) {
    std::cerr << "e2e: canary encode failed\n";
    return 2;
  }

  // Stub upstream: echoes chat bodies back verbatim so the client can check
  // byte-identical forwarding end to end.
  httplib::Server stub;
  stub.Post("/v1/chat/completions",
            [](const httplib::Request& req, httplib::Response& res) {
              res.set_content(req.body, "application/json");
            });
  stub.Get("/", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });
  const int stub_port = stub.bind_to_any_port("127.0.0.1");
  if (stub_port <= 0) {
    std::cerr << "e2e: stub bind failed\n";
    return 2;
  }
  std::thread stub_thread([&stub] { stub.listen_after_bind(); });
  while (!stub.is_running())
    std::this_thread::sleep_for(std::chrono::milliseconds(1));

  int failures = 0;
  const auto step = [&](const std::string& what, bool ok) {
    if (!ok || !opts.quiet)
      std::cout << "e2e: " << what << (ok ? " ... ok" : " ... FAIL") << '\n';
    failures += !ok;
  };

  {
    proxy::ProxyConfig pcfg;
    pcfg.upstream = "http://127.0.0.1:" + std::to_string(stub_port);
    pcfg.admin_token = "e2e-admin-token";
    pcfg.audit_log_path =
        (fs::path(opts.out_dir) / "e2e_audit.jsonl").string();
    auto engine = std::make_shared<scan::ScanEngine>(
        std::shared_ptr<const tokens::TokenRegistry>(fx.registry),
        scan::ScanPolicy{}, fx.model, fx.lm);
    proxy::ProxyServer server(pcfg, engine);
    if (!server.start()) {
      std::cerr << "e2e: proxy start failed\n";
      stub.stop();
      stub_thread.join();
      return 2;
    }
    httplib::Client client("127.0.0.1", server.port());

    const auto chat_body = [](const std::string& content) {
      return json{{"model", "stub-chat"},
                  {"messages", json::array({{{"role", "user"},
                                             {"content", content}}})}}
          .dump();
    };

    for (int i = 1; i <= 3; ++i) {
      const std::string body = chat_body("routine request number " +
                                         std::to_string(i));
      const auto res =
          client.Post("/v1/chat/completions", body, "application/json");
      step("benign request " + std::to_string(i) +
               " forwarded with byte-identical body",
           res && res->status == 200 && res->body == body);
    }

    const std::string canary_body = chat_body(canary->text);
    const auto blocked =
        client.Post("/v1/chat/completions", canary_body, "application/json");
    bool ok403 = blocked && blocked->status == 403;
    if (ok403) {
      const json j = json::parse(blocked->body, nullptr, false);
      ok403 = j.is_object() && j.value("blocked", false) &&
              j.contains("layer") && j.contains("identity_digest");
    }
    step("canary request rejected with 403 and layer identification", ok403);
    step("lockdown latched after the verified match", server.locked());

    const std::string post_body = chat_body("benign request after canary");
    const auto locked_res =
        client.Post("/v1/chat/completions", post_body, "application/json");
    step("subsequent benign request rejected with 423",
         locked_res && locked_res->status == 423);

    const auto bad_reset = client.Post("/admin/reset-lockdown",
                                       json{{"token", "wrong"}}.dump(),
                                       "application/json");
    step("lockdown reset denied for a wrong admin token",
         bad_reset && bad_reset->status == 401 && server.locked());

    const auto good_reset = client.Post(
        "/admin/reset-lockdown", json{{"token", "e2e-admin-token"}}.dump(),
        "application/json");
    step("lockdown reset accepted for the configured admin token",
         good_reset && good_reset->status == 200 && !server.locked());

    const auto after_reset =
        client.Post("/v1/chat/completions", post_body, "application/json");
    step("traffic flows again after the reset",
         after_reset && after_reset->status == 200 &&
             after_reset->body == post_body);

    server.stop();

    std::ifstream audit(pcfg.audit_log_path);
    bool saw_blocked = false;
    std::string line;
    while (std::getline(audit, line)) {
      const json j = json::parse(line, nullptr, false);
      if (j.is_object() && j.value("event", "") == "blocked") saw_blocked = true;
    }
    step("audit log recorded the blocked event", saw_blocked);
  }

  stub.stop();
  stub_thread.join();
  if (failures || !opts.quiet)
    std::cout << (failures ? "e2e: FAILED\n" : "e2e: all steps passed\n");
  return failures ? 1 : 0;
}

}  // namespace stegocanary::tools
