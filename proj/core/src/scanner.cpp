#include "stegocanary/scanner.hpp"

#include <chrono>

#include "stegocanary/symbolic.hpp"

namespace stegocanary::scan {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct SymbolicDecoder {
  const char* name;
  std::optional<Bytes> (*decode)(std::string_view);
};

constexpr SymbolicDecoder kSymbolicDecoders[] = {
    {"ws", codec::ws_decode},
    {"zw", codec::zw_decode},
    {"hg", codec::hg_decode},
};

}  // namespace

std::vector<std::string> extract_regions(std::string_view text,
                                         const ScanPolicy& policy) {
  if (policy.region_open.empty() || policy.region_close.empty())
    return {std::string(text)};
  std::vector<std::string> regions;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = text.find(policy.region_open, pos);
    if (open == std::string_view::npos) break;
    const std::size_t body = open + policy.region_open.size();
    const std::size_t close = text.find(policy.region_close, body);
    if (close == std::string_view::npos) break;
    regions.emplace_back(text.substr(body, close - body));
    pos = close + policy.region_close.size();
  }
  // Delimiters configured but absent: fall back to scanning everything.
  if (regions.empty()) regions.emplace_back(text);
  return regions;
}

ScanEngine::ScanEngine(std::shared_ptr<const tokens::TokenRegistry> registry,
                       ScanPolicy policy,
                       std::shared_ptr<const codec::RefModel> model,
                       codec::LmParams lm_params)
    : registry_(std::move(registry)),
      policy_(std::move(policy)),
      model_(std::move(model)),
      lm_params_(std::move(lm_params)) {
  if (!registry_) throw std::invalid_argument("ScanEngine: registry required");
}

void ScanEngine::scan_region(std::string_view region, ScanVerdict& verdict) const {
  const auto record = [&](const char* layer, int depth,
                          const std::optional<Bytes>& cand, double ms) {
    LayerResult r;
    r.layer = layer;
    r.depth = depth;
    r.latency_ms = ms;
    if (cand) {
      r.candidate = true;
      if (auto id = registry_->verify(*cand, policy_.scheme)) {
        r.verified = true;
        r.identity = id;
        if (!verdict.matched) {
          verdict.matched = true;
          verdict.matched_layer = layer;
          verdict.identity = id;
        }
      }
    }
    verdict.layers.push_back(std::move(r));
    return verdict.layers.back().verified;
  };

  // Phase 1: symbolic decoders, then strip-and-recurse for nested surfaces.
  std::string cur(region);
  for (int depth = 1; depth <= policy_.max_strip_depth; ++depth) {
    for (const auto& dec : kSymbolicDecoders) {
      const auto t0 = Clock::now();
      const auto cand = dec.decode(cur);
      if (record(dec.name, depth, cand, ms_since(t0)) &&
          policy_.early_terminate)
        return;
    }
    if (depth == policy_.max_strip_depth) break;
    std::string stripped =
        codec::hg_strip(codec::zw_strip(codec::ws_strip(cur)));
    if (stripped == cur) break;  // nothing left to peel
    cur = std::move(stripped);
  }

  // Phase 2: linguistic decoder on the canonicalized region.
  if (model_) {
    const auto t0 = Clock::now();
    const auto cand = codec::lm_decode(*model_, region, lm_params_);
    if (record("lm", 1, cand, ms_since(t0)) && policy_.early_terminate) return;
  }
}

ScanVerdict ScanEngine::scan(std::string_view text) const {
  const auto t0 = Clock::now();
  ScanVerdict verdict;
  for (const auto& region : extract_regions(text, policy_)) {
    scan_region(region, verdict);
    if (verdict.matched && policy_.early_terminate) break;
  }
  verdict.total_latency_ms = ms_since(t0);
  return verdict;
}

}  // namespace stegocanary::scan
