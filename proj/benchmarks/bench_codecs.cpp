// Throughput numbers for the embedding and detection hot paths. Run with
// --benchmark_min_time=2 for stable medians; the fixtures are deterministic.
#include <benchmark/benchmark.h>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "stegocanary/linguistic.hpp"
#include "stegocanary/ref_model.hpp"
#include "stegocanary/registry.hpp"
#include "stegocanary/scanner.hpp"
#include "stegocanary/stack.hpp"
#include "stegocanary/symbolic.hpp"
#include "stegocanary/tokens.hpp"

using namespace stegocanary;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const codec::RefModel& model() {
  static const codec::RefModel m = codec::RefModel::build_from_corpus(
      read_file(std::string(STEGOCANARY_DATA_DIR) + "/model_corpus.txt"));
  return m;
}

// ~4 KB of prose with all three surfaces available.
const std::string& cover() {
  static const std::string c = [] {
    std::string s;
    for (int i = 0; i < 120; ++i)
      s += "the survey records describe a copper channel and an open yard "
           "near the east parcel boundary. ";
    return s;
  }();
  return c;
}

const tokens::OrgKey& key() {
  static const tokens::OrgKey k{Bytes(32, 0x42)};
  return k;
}

const Bytes& token() {
  static const Bytes t = tokens::derive_hmac_token(key(), "bench/doc");
  return t;
}

}  // namespace

static void BM_WsEncode(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(codec::ws_encode(cover(), token()));
}
BENCHMARK(BM_WsEncode);

static void BM_WsDecode(benchmark::State& state) {
  const auto marked = *codec::ws_encode(cover(), token());
  for (auto _ : state) benchmark::DoNotOptimize(codec::ws_decode(marked));
}
BENCHMARK(BM_WsDecode);

static void BM_ZwEncode(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(codec::zw_encode(cover(), token()));
}
BENCHMARK(BM_ZwEncode);

static void BM_ZwDecode(benchmark::State& state) {
  const auto marked = *codec::zw_encode(cover(), token());
  for (auto _ : state) benchmark::DoNotOptimize(codec::zw_decode(marked));
}
BENCHMARK(BM_ZwDecode);

static void BM_HgEncode(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(codec::hg_encode(cover(), token()));
}
BENCHMARK(BM_HgEncode);

static void BM_HgDecode(benchmark::State& state) {
  const auto marked = *codec::hg_encode(cover(), token());
  for (auto _ : state) benchmark::DoNotOptimize(codec::hg_decode(marked));
}
BENCHMARK(BM_HgDecode);

static void BM_LmEncode(benchmark::State& state) {
  const auto& m = model();
  for (auto _ : state)
    benchmark::DoNotOptimize(codec::lm_encode(m, token()));
}
BENCHMARK(BM_LmEncode);

static void BM_LmDecode(benchmark::State& state) {
  const auto& m = model();
  const auto text = *codec::lm_encode(m, token());
  for (auto _ : state) benchmark::DoNotOptimize(codec::lm_decode(m, text));
}
BENCHMARK(BM_LmDecode);

static void BM_StackEncodeTriple(benchmark::State& state) {
  const auto cfg = codec::standard_config("M5");
  const codec::StackContext ctx;
  for (auto _ : state)
    benchmark::DoNotOptimize(codec::stack_encode(cfg, ctx, token(), cover()));
}
BENCHMARK(BM_StackEncodeTriple);

static void BM_ScanMarked(benchmark::State& state) {
  auto registry = std::make_shared<tokens::TokenRegistry>();
  tokens::TokenRegistry::HmacEntry e{};
  std::copy(token().begin(), token().end(), e.begin());
  registry->add_hmac_token(e);
  registry->seal();
  const scan::ScanEngine engine(registry, scan::ScanPolicy{});
  const auto marked = *codec::zw_encode(cover(), token());
  for (auto _ : state) benchmark::DoNotOptimize(engine.scan(marked));
}
BENCHMARK(BM_ScanMarked);

static void BM_ScanUnmarked(benchmark::State& state) {
  auto registry = std::make_shared<tokens::TokenRegistry>();
  tokens::TokenRegistry::HmacEntry e{};
  std::copy(token().begin(), token().end(), e.begin());
  registry->add_hmac_token(e);
  registry->seal();
  const scan::ScanEngine engine(registry, scan::ScanPolicy{});
  for (auto _ : state) benchmark::DoNotOptimize(engine.scan(cover()));
}
BENCHMARK(BM_ScanUnmarked);

BENCHMARK_MAIN();
