#pragma once

#include <cstddef>
#include <string>

#include "stegocanary/tokens.hpp"

namespace stegocanary::tools {

// Shared knobs for the experiment runners. Every runner writes an aggregate
// CSV plus a raw per-file JSONL record stream into out_dir so published
// rates can be recomputed independently.
struct RunnerOptions {
  std::string data_dir;  // holds model_corpus.txt and corpus/*.txt
  std::string out_dir = "out";
  tokens::Scheme scheme = tokens::Scheme::kHmac;
  std::size_t file_limit = 0;        // 0 = whole corpus
  std::size_t generated_count = 100; // covers for generated-text configs
  std::string paraphrase_cmd;        // enables the external-paraphrase rows
  bool quiet = false;
};

// Compile-time default pointing at the repository's bundled data directory.
std::string default_data_dir();

// Per-transform ablation grid: single-layer configs x individual transforms.
// Writes heatmap.csv and heatmap_files.jsonl. Returns 0 on success.
int run_heatmap(const RunnerOptions& opts);

// Layered configs x composite chains. Writes stacking.csv and
// stacking_files.jsonl.
int run_stacking(const RunnerOptions& opts);

// False-positive sweep: all decoders over unmarked and random inputs against
// a populated registry. Writes fp_report.json and fp_files.jsonl.
int run_fp(const RunnerOptions& opts);

// Encode/decode/scan latency per config. Writes timing.csv.
int run_timing(const RunnerOptions& opts);

// Scripted proxy scenario against an in-process stub upstream: benign
// requests forward byte-identically, a canary request blocks and latches
// lockdown, subsequent requests are rejected until the admin reset.
// Prints one line per step (failing steps always, passing steps unless
// quiet); returns 0 only if every step behaves.
int run_proxy_e2e(const RunnerOptions& opts);

}  // namespace stegocanary::tools
