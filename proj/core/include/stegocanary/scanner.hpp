#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stegocanary/linguistic.hpp"
#include "stegocanary/ref_model.hpp"
#include "stegocanary/registry.hpp"
#include "stegocanary/tokens.hpp"

namespace stegocanary::scan {

struct ScanPolicy {
  tokens::Scheme scheme = tokens::Scheme::kHmac;
  int max_strip_depth = 2;
  bool early_terminate = true;
  // Both set: scan only the spans between the delimiters; when none are
  // found, or delimiters are unset, scan the whole text.
  std::string region_open;
  std::string region_close;
};

struct LayerResult {
  std::string layer;  // "ws" "zw" "hg" "lm"
  int depth = 1;
  bool candidate = false;
  bool verified = false;
  double latency_ms = 0.0;
  std::optional<tokens::ScanIdentity> identity;
};

struct ScanVerdict {
  bool matched = false;
  std::string matched_layer;
  std::optional<tokens::ScanIdentity> identity;
  double total_latency_ms = 0.0;
  std::vector<LayerResult> layers;
};

std::vector<std::string> extract_regions(std::string_view text,
                                         const ScanPolicy& policy);

// Two-phase detection: symbolic decoders (ws, zw, hg) with strip-and-recurse
// up to max_strip_depth, then the linguistic decoder on canonicalized text.
// Never throws on malformed input; any verified layer flips matched.
class ScanEngine {
 public:
  ScanEngine(std::shared_ptr<const tokens::TokenRegistry> registry,
             ScanPolicy policy,
             std::shared_ptr<const codec::RefModel> model = nullptr,
             codec::LmParams lm_params = {});

  ScanVerdict scan(std::string_view text) const;

  const ScanPolicy& policy() const { return policy_; }
  const tokens::TokenRegistry& registry() const { return *registry_; }

 private:
  void scan_region(std::string_view region, ScanVerdict& verdict) const;

  std::shared_ptr<const tokens::TokenRegistry> registry_;
  ScanPolicy policy_;
  std::shared_ptr<const codec::RefModel> model_;
  codec::LmParams lm_params_;
};

}  // namespace stegocanary::scan
