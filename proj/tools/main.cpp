#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "runner.hpp"
#include "stegocanary/linguistic.hpp"
#include "stegocanary/proxy.hpp"
#include "stegocanary/ref_model.hpp"
#include "stegocanary/registry.hpp"
#include "stegocanary/scanner.hpp"
#include "stegocanary/stack.hpp"
#include "stegocanary/tokens.hpp"
#include "stegocanary/transport.hpp"

namespace {

using namespace stegocanary;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

tokens::Scheme parse_scheme(const std::string& s) {
  const auto scheme = tokens::scheme_from_name(s);
  if (!scheme) throw CLI::ValidationError("--scheme", "expected hmac or eddsa");
  return *scheme;
}

// Model source shared by the verbs that can run the linguistic layer: a
// serialized model file wins over a corpus to build from; with neither, the
// bundled corpus is used.
struct ModelArgs {
  std::string model_path;
  std::string corpus_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model_path,
                    "serialized word-model file (see model save format)");
    cmd->add_option("--corpus", corpus_path,
                    "plain-text corpus to build the word model from");
  }

  std::shared_ptr<const codec::RefModel> load_or_build(bool required) const {
    if (!model_path.empty())
      return std::make_shared<codec::RefModel>(codec::RefModel::load(model_path));
    std::string corpus = corpus_path;
    if (corpus.empty()) {
      const auto bundled =
          std::filesystem::path(tools::default_data_dir()) / "model_corpus.txt";
      if (std::filesystem::exists(bundled)) corpus = bundled.string();
    }
    if (corpus.empty()) {
      if (required)
        throw std::runtime_error(
            "a word model is required: pass --model or --corpus");
      return nullptr;
    }
    return std::make_shared<codec::RefModel>(
        codec::RefModel::build_from_corpus(read_file(corpus)));
  }
};

std::atomic<bool> g_stop{false};
void on_signal(int) { g_stop.store(true); }

int cmd_encode(const std::string& config_name, const std::string& in,
               const std::string& out, const std::string& key_spec,
               const std::string& file_id, const std::string& scheme_name,
               const ModelArgs& model_args, const std::string& registry_out,
               const std::string& manifest_out, const std::string& org) {
  const auto scheme = parse_scheme(scheme_name);
  const auto cfg = codec::config_from_spec(config_name);
  if (!cfg) {
    std::cerr << "unknown config: " << config_name << "\n";
    return 1;
  }
  const tokens::OrgKey key = tokens::load_key_file(key_spec);
  const Bytes token = scheme == tokens::Scheme::kHmac
                          ? tokens::derive_hmac_token(key, file_id)
                          : tokens::derive_eddsa_token(key, file_id);

  const bool needs_model =
      std::find(cfg->layers.begin(), cfg->layers.end(), codec::Layer::kLm) !=
      cfg->layers.end();
  const auto model = model_args.load_or_build(needs_model);
  codec::StackContext ctx{model.get(), {}};

  std::string cover;
  if (cfg->mode != codec::StackMode::kB) {
    if (in.empty()) {
      std::cerr << "--in is required for cover-based configs\n";
      return 1;
    }
    cover = read_file(in);
  }
  const auto enc = codec::stack_encode(*cfg, ctx, token, cover);
  if (!enc) {
    std::cerr << "encoding failed: cover capacity is insufficient for a "
              << token.size() << "-byte token under " << cfg->name << "\n";
    return 2;
  }
  write_file(out, enc->text);
  for (const auto& w : enc->warnings) std::cerr << "warning: " << w << "\n";

  json manifest = {{"file_id", file_id},
                   {"scheme", tokens::scheme_name(scheme)},
                   {"config", cfg->name},
                   {"token_digest", to_hex(token)},
                   {"out", out}};
  if (scheme == tokens::Scheme::kEddsa)
    manifest["file_uuid"] = to_hex(Bytes(token.begin(), token.begin() + 4));
  std::cout << manifest.dump() << "\n";
  if (!manifest_out.empty()) {
    std::ofstream mf(manifest_out, std::ios::app);
    mf << manifest.dump() << "\n";
  }
  if (!registry_out.empty()) {
    std::ofstream rf(registry_out, std::ios::app);
    if (scheme == tokens::Scheme::kHmac)
      rf << to_hex(token) << "\n";
    else
      rf << org << "\t" << to_hex(tokens::eddsa_public_key(key)) << "\n";
  }
  return 0;
}

int cmd_scan(const std::string& in, const std::string& registry_path,
             const std::string& scheme_name, const ModelArgs& model_args,
             int max_depth, bool no_early, const std::string& region_open,
             const std::string& region_close) {
  const auto registry = std::make_shared<tokens::TokenRegistry>(
      tokens::TokenRegistry::load(registry_path));
  scan::ScanPolicy policy;
  policy.scheme = parse_scheme(scheme_name);
  policy.max_strip_depth = max_depth;
  policy.early_terminate = !no_early;
  policy.region_open = region_open;
  policy.region_close = region_close;
  const auto model = model_args.load_or_build(false);
  const scan::ScanEngine engine(registry, policy, model);

  const auto verdict = engine.scan(read_file(in));
  json layers = json::array();
  for (const auto& l : verdict.layers)
    layers.push_back(json{{"layer", l.layer},
                          {"depth", l.depth},
                          {"candidate", l.candidate},
                          {"verified", l.verified},
                          {"latency_ms", l.latency_ms}});
  json out = {{"matched", verdict.matched},
              {"layer", verdict.matched_layer},
              {"latency_ms", verdict.total_latency_ms},
              {"layers", layers}};
  if (verdict.identity)
    out["identity"] = {{"scheme", tokens::scheme_name(verdict.identity->scheme)},
                       {"token_digest", verdict.identity->token_digest},
                       {"org_id", verdict.identity->org_id},
                       {"file_uuid", verdict.identity->file_uuid}};
  std::cout << out.dump(2) << "\n";
  return verdict.matched ? 3 : 0;
}

int cmd_transform(const std::string& chain_name, const std::string& in,
                  const std::string& out, const std::string& paraphrase_cmd) {
  const transport::TransformOptions topts{paraphrase_cmd};
  std::string text = read_file(in);
  if (const auto chain = transport::chain_from_name(chain_name)) {
    text = transport::apply_chain(*chain, text, topts);
  } else if (const auto id = transport::transform_from_name(chain_name)) {
    text = transport::apply_transform(*id, text, topts);
  } else {
    std::cerr << "unknown chain or transform: " << chain_name << "\n";
    return 1;
  }
  write_file(out, text);
  return 0;
}

int cmd_proxy(const std::string& config_path, proxy::ProxyConfig cfg,
              const std::string& mode_name, const std::string& registry_path,
              const std::string& scheme_name, const ModelArgs& model_args,
              bool no_lockdown) {
  if (!config_path.empty()) {
    const json j = json::parse(read_file(config_path));
    cfg.listen_host = j.value("listen_host", cfg.listen_host);
    cfg.listen_port = j.value("listen_port", cfg.listen_port);
    cfg.upstream = j.value("upstream", cfg.upstream);
    cfg.chat_path = j.value("chat_path", cfg.chat_path);
    cfg.lockdown_enabled = j.value("lockdown", cfg.lockdown_enabled);
    cfg.admin_token = j.value("admin_token", cfg.admin_token);
    cfg.audit_log_path = j.value("audit_log", cfg.audit_log_path);
    cfg.scan_budget_ms = j.value("scan_budget_ms", cfg.scan_budget_ms);
    const std::string m = j.value("mode", "");
    if (m == "flag") cfg.response_mode = proxy::ResponseMode::kFlag;
    if (m == "block") cfg.response_mode = proxy::ResponseMode::kBlock;
  }
  if (mode_name == "flag") cfg.response_mode = proxy::ResponseMode::kFlag;
  if (mode_name == "block") cfg.response_mode = proxy::ResponseMode::kBlock;
  if (no_lockdown) cfg.lockdown_enabled = false;
  if (cfg.upstream.empty()) {
    std::cerr << "an upstream URL is required (--upstream or config file)\n";
    return 1;
  }
  if (registry_path.empty()) {
    std::cerr << "--registry is required\n";
    return 1;
  }
  const auto registry = std::make_shared<tokens::TokenRegistry>(
      tokens::TokenRegistry::load(registry_path));
  scan::ScanPolicy policy;
  policy.scheme = parse_scheme(scheme_name);
  const auto model = model_args.load_or_build(false);
  auto engine =
      std::make_shared<scan::ScanEngine>(registry, policy, model);

  proxy::ProxyServer server(cfg, engine);
  if (!server.start()) {
    std::cerr << "proxy failed to start (bind or upstream probe)\n";
    return 2;
  }
  std::cout << "proxy listening on " << cfg.listen_host << ":" << server.port()
            << " -> " << cfg.upstream << "\n";
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  while (!g_stop.load())
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  server.stop();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steganographic canary toolkit"};
  app.require_subcommand(1);

  // encode
  std::string enc_config = "M5", enc_in, enc_out, enc_key, enc_file_id;
  std::string enc_scheme = "hmac", enc_registry_out, enc_manifest_out;
  std::string enc_org = "org-local";
  ModelArgs enc_model;
  auto* enc = app.add_subcommand("encode", "embed a canary token into text");
  enc->add_option("--config", enc_config, "layer configuration (M1..M7 or list)");
  enc->add_option("--in", enc_in, "cover text file");
  enc->add_option("--out", enc_out, "output file")->required();
  enc->add_option("--key", enc_key,
                  "key file path, or env:NAME naming an env var that holds a path")
      ->required();
  enc->add_option("--file-id", enc_file_id, "identity bound into the token")
      ->required();
  enc->add_option("--scheme", enc_scheme, "hmac or eddsa");
  enc->add_option("--registry-out", enc_registry_out,
                  "append the verification record to this registry file");
  enc->add_option("--manifest-out", enc_manifest_out,
                  "append the manifest JSON line to this file");
  enc->add_option("--org", enc_org, "organization id for eddsa registry records");
  enc_model.attach(enc);

  // scan
  std::string scan_in, scan_registry, scan_scheme = "hmac";
  std::string scan_open, scan_close;
  int scan_depth = 2;
  bool scan_no_early = false;
  ModelArgs scan_model;
  auto* sc = app.add_subcommand("scan", "scan text for embedded canary tokens");
  sc->add_option("--in", scan_in, "file to scan")->required();
  sc->add_option("--registry", scan_registry, "token registry file")->required();
  sc->add_option("--scheme", scan_scheme, "hmac or eddsa");
  sc->add_option("--max-depth", scan_depth, "strip-and-rescan depth");
  sc->add_flag("--no-early-terminate", scan_no_early,
               "keep scanning after the first verified layer");
  sc->add_option("--region-open", scan_open, "region start delimiter");
  sc->add_option("--region-close", scan_close, "region end delimiter");
  scan_model.attach(sc);

  // transform
  std::string tr_chain, tr_in, tr_out, tr_cmd;
  auto* tr = app.add_subcommand("transform", "apply a transport transform chain");
  tr->add_option("--chain", tr_chain, "chain (Tier-0..Tier-4) or transform (T00..T12)")
      ->required();
  tr->add_option("--in", tr_in)->required();
  tr->add_option("--out", tr_out)->required();
  tr->add_option("--paraphrase-cmd", tr_cmd, "external paraphrase shell command");

  // experiment runners
  tools::RunnerOptions ropts;
  ropts.data_dir = tools::default_data_dir();
  std::string run_scheme = "hmac";
  const auto attach_runner = [&](CLI::App* cmd) {
    cmd->add_option("--data-dir", ropts.data_dir, "corpus + model data directory");
    cmd->add_option("--out-dir", ropts.out_dir, "where CSV/JSONL results go");
    cmd->add_option("--files", ropts.file_limit, "limit corpus files (0 = all)");
    cmd->add_option("--covers", ropts.generated_count,
                    "generated covers for lm-first configs");
    cmd->add_option("--scheme", run_scheme, "hmac or eddsa");
    cmd->add_option("--paraphrase-cmd", ropts.paraphrase_cmd,
                    "enables the external-paraphrase rows");
    cmd->add_flag("--quiet", ropts.quiet);
  };
  auto* hm = app.add_subcommand("heatmap", "per-transform ablation grid");
  auto* st = app.add_subcommand("stacking", "layered configs x composite chains");
  auto* fp = app.add_subcommand("fp", "false-positive sweep");
  auto* tm = app.add_subcommand("timing", "encode/decode/scan latency");
  auto* e2e = app.add_subcommand("e2e", "scripted proxy lockdown scenario");
  for (auto* cmd : {hm, st, fp, tm, e2e}) attach_runner(cmd);

  // proxy
  std::string px_config, px_mode, px_registry, px_scheme = "hmac";
  bool px_no_lockdown = false;
  proxy::ProxyConfig px_cfg;
  px_cfg.listen_port = 8080;
  ModelArgs px_model;
  auto* px = app.add_subcommand("proxy", "scanning reverse proxy");
  px->add_option("--config", px_config, "JSON config file");
  px->add_option("--listen-host", px_cfg.listen_host);
  px->add_option("--listen-port", px_cfg.listen_port);
  px->add_option("--upstream", px_cfg.upstream, "e.g. http://127.0.0.1:8081");
  px->add_option("--chat-path", px_cfg.chat_path);
  px->add_option("--mode", px_mode, "block or flag");
  px->add_option("--admin-token", px_cfg.admin_token);
  px->add_option("--audit-log", px_cfg.audit_log_path);
  px->add_option("--scan-budget-ms", px_cfg.scan_budget_ms);
  px->add_flag("--no-lockdown", px_no_lockdown);
  px->add_option("--registry", px_registry, "token registry file");
  px->add_option("--scheme", px_scheme, "hmac or eddsa");
  px_model.attach(px);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enc->parsed())
      return cmd_encode(enc_config, enc_in, enc_out, enc_key, enc_file_id,
                        enc_scheme, enc_model, enc_registry_out,
                        enc_manifest_out, enc_org);
    if (sc->parsed())
      return cmd_scan(scan_in, scan_registry, scan_scheme, scan_model,
                      scan_depth, scan_no_early, scan_open, scan_close);
    if (tr->parsed()) return cmd_transform(tr_chain, tr_in, tr_out, tr_cmd);
    ropts.scheme = parse_scheme(run_scheme);
    if (hm->parsed()) return tools::run_heatmap(ropts);
    if (st->parsed()) return tools::run_stacking(ropts);
    if (fp->parsed()) return tools::run_fp(ropts);
    if (tm->parsed()) return tools::run_timing(ropts);
    if (e2e->parsed()) return tools::run_proxy_e2e(ropts);
    if (px->parsed())
      return cmd_proxy(px_config, px_cfg, px_mode, px_registry, px_scheme,
                       px_model, px_no_lockdown);
  } catch (const transport::TransformUnavailable& e) {
    std::cerr << "transform unavailable: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
