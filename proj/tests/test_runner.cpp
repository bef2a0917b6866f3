#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "runner.hpp"

using namespace stegocanary;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in);
  CsvTable t;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (t.header.empty())
      t.header = fields;
    else
      t.rows.push_back(fields);
  }
  return t;
}

// (config, chain, layer) -> rate string, e.g. "100.0".
std::map<std::string, std::string> rate_map(const CsvTable& t) {
  std::map<std::string, std::string> m;
  for (const auto& r : t.rows) m[r[0] + "|" + r[1] + "|" + r[2]] = r[5];
  return m;
}

fs::path fresh_out_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

tools::RunnerOptions base_options(const std::string& out_name) {
  tools::RunnerOptions opts;
  opts.data_dir = tools::default_data_dir();
  opts.out_dir = fresh_out_dir(out_name).string();
  opts.quiet = true;
  return opts;
}

}  // namespace

TEST_CASE("per-transform grid reproduces the survival matrix") {
  auto opts = base_options("stego_test_heatmap");
  opts.file_limit = 5;
  REQUIRE(tools::run_heatmap(opts) == 0);

  const auto table = read_csv(fs::path(opts.out_dir) / "heatmap.csv");
  CHECK(table.header ==
        std::vector<std::string>{"config", "chain", "layer", "files",
                                 "recovered", "rate"});
  const auto rates = rate_map(table);

  // Single-layer survival: which transform destroys which surface.
  const struct {
    const char* transform;
    const char* ws;
    const char* zw;
    const char* hg;
  } matrix[] = {
      {"T00", "100.0", "100.0", "100.0"}, {"T01", "100.0", "100.0", "100.0"},
      {"T02", "100.0", "100.0", "100.0"}, {"T03", "100.0", "100.0", "100.0"},
      {"T04", "100.0", "100.0", "100.0"}, {"T05", "0.0", "100.0", "100.0"},
      {"T06", "0.0", "100.0", "100.0"},   {"T07", "100.0", "0.0", "100.0"},
      {"T08", "100.0", "0.0", "100.0"},   {"T09", "100.0", "100.0", "0.0"},
      {"T10", "0.0", "0.0", "0.0"},
  };
  for (const auto& row : matrix) {
    CHECK_MESSAGE(rates.at(std::string("M1|") + row.transform + "|ws") == row.ws,
                  row.transform);
    CHECK_MESSAGE(rates.at(std::string("M2|") + row.transform + "|zw") == row.zw,
                  row.transform);
    CHECK_MESSAGE(rates.at(std::string("M3|") + row.transform + "|hg") == row.hg,
                  row.transform);
  }

  // Zero-width and whitespace surfaces ignore plain-text mangling; the
  // linguistic layer rides tokens, so only token-text damage (T11) kills it.
  CHECK(rates.at("M1|T11|ws") == "100.0");
  CHECK(rates.at("M2|T11|zw") == "100.0");
  for (const char* t : {"T00", "T02", "T05", "T06", "T09", "T10"})
    CHECK(rates.at(std::string("M4|") + t + "|lm") == "100.0");
  CHECK(rates.at("M4|T11|lm") == "0.0");

  // No external command configured: no T12 rows at all.
  for (const auto& r : table.rows) CHECK(r[1] != "T12");
  for (const auto& r : table.rows) CHECK(r[3] == "5");
}

TEST_CASE("stacked-config rates are reproducible from the raw records") {
  auto opts = base_options("stego_test_stacking");
  opts.file_limit = 5;
  opts.generated_count = 10;
  REQUIRE(tools::run_stacking(opts) == 0);

  const auto table = read_csv(fs::path(opts.out_dir) / "stacking.csv");
  const auto rates = rate_map(table);

  // Headline cells: the hybrid stack survives symbolic wipe-out through the
  // linguistic layer unless whitespace marking corrupted its bytes (M7 at
  // Tier-3), which a full chain repairs before the damage lands.
  CHECK(rates.at("M6|Tier-3|lm") == "100.0");
  CHECK(rates.at("M7|Tier-3|lm") == "0.0");
  CHECK(rates.at("M7|Tier-1+2+3|lm") == "100.0");
  CHECK(rates.at("M7|Tier-0|any") == "100.0");
  CHECK(rates.at("M5|Tier-0|any") == "100.0");
  CHECK(rates.at("M5|Tier-2|any") == "100.0");
  CHECK(rates.at("M5|Tier-3|any") == "0.0");

  // Deterministic pipeline: every symbolic rate is all-or-nothing.
  for (const auto& r : table.rows) {
    if (r[2] == "ws" || r[2] == "zw" || r[2] == "hg")
      CHECK((r[5] == "0.0" || r[5] == "100.0"));
  }

  // Recompute the any-layer union from the per-file records and cross-check
  // the aggregate rows.
  std::map<std::string, std::map<std::string, bool>> any_by_cell;
  std::ifstream jsonl(fs::path(opts.out_dir) / "stacking_files.jsonl");
  REQUIRE(jsonl);
  std::string line;
  while (std::getline(jsonl, line)) {
    const json rec = json::parse(line);
    const std::string cell =
        rec["config"].get<std::string>() + "|" + rec["chain"].get<std::string>();
    any_by_cell[cell][rec["file"]] =
        any_by_cell[cell][rec["file"]] || rec["recovered"].get<bool>();
  }
  REQUIRE_FALSE(any_by_cell.empty());
  for (const auto& [cell, files] : any_by_cell) {
    int rec = 0;
    for (const auto& [_, ok] : files) rec += ok;
    char want[16];
    std::snprintf(want, sizeof want, "%.1f", 100.0 * rec / files.size());
    CHECK_MESSAGE(rates.at(cell + "|any") == want, cell);
  }
}

TEST_CASE("false-positive sweep stays at zero") {
  auto opts = base_options("stego_test_fp");
  opts.file_limit = 3;
  REQUIRE(tools::run_fp(opts) == 0);

  std::ifstream in(fs::path(opts.out_dir) / "fp_report.json");
  REQUIRE(in);
  const json report = json::parse(in);
  CHECK(report["unmarked_files"] == 15);  // 3 docs x 5 paragraph rotations
  CHECK(report["decodes_per_scheme"] == 60);
  CHECK(report["verified_matches_hmac"] == 0);
  CHECK(report["verified_matches_eddsa"] == 0);
  CHECK(report["random_inputs"] == 10000);
  CHECK(report["random_matches"] == 0);
  // The linguistic decoder is total on prose: every unmarked document yields
  // a candidate, and none of them verifies.
  CHECK(report["lm_decodes"] == 30);
  CHECK(report["lm_candidates"] == report["lm_decodes"]);
}

TEST_CASE("timing table covers every config and operation") {
  auto opts = base_options("stego_test_timing");
  opts.file_limit = 2;
  REQUIRE(tools::run_timing(opts) == 0);

  const auto table = read_csv(fs::path(opts.out_dir) / "timing.csv");
  CHECK(table.header ==
        std::vector<std::string>{"config", "op", "files", "mean_ms", "std_ms",
                                 "max_ms"});
  REQUIRE(table.rows.size() == 21);  // 7 configs x 3 ops
  std::set<std::string> seen;
  for (const auto& r : table.rows) {
    seen.insert(r[0] + "|" + r[1]);
    CHECK(r[2] == "2");
    const double mean = std::stod(r[3]);
    const double mx = std::stod(r[5]);
    CHECK(mean >= 0.0);
    CHECK(mx + 1e-9 >= mean);
  }
  for (const char* cfg : {"M1", "M2", "M3", "M4", "M5", "M6", "M7"})
    for (const char* op : {"encode", "decode", "scan"})
      CHECK(seen.count(std::string(cfg) + "|" + op));
}

TEST_CASE("proxy scenario runs green end to end") {
  auto opts = base_options("stego_test_e2e");
  opts.file_limit = 2;
  CHECK(tools::run_proxy_e2e(opts) == 0);
  CHECK(fs::exists(fs::path(opts.out_dir) / "e2e_audit.jsonl"));
}
