#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "stegocanary/framing.hpp"
#include "stegocanary/linguistic.hpp"
#include "stegocanary/ref_model.hpp"

using namespace stegocanary;
using namespace stegocanary::codec;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const RefModel& bundled_model() {
  static const RefModel model = RefModel::build_from_corpus(
      read_file(std::string(STEGOCANARY_DATA_DIR) + "/model_corpus.txt"));
  return model;
}

// Independent FNV-1a 64 for the out-of-vocabulary fallback route.
std::uint64_t fnv1a64_oracle(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("model construction is deterministic with a sorted vocabulary") {
  const std::string corpus =
      read_file(std::string(STEGOCANARY_DATA_DIR) + "/model_corpus.txt");
  const RefModel a = RefModel::build_from_corpus(corpus);
  const RefModel b = RefModel::build_from_corpus(corpus);
  CHECK(a.content_hash() == b.content_hash());
  CHECK(a.content_hash().size() == 64);
  CHECK(a.vocab_size() == b.vocab_size());
  CHECK(a.vocab_size() <= RefModel::kMaxVocab);
  CHECK(a.vocab_size() > 100);
  for (std::uint32_t i = 0; i + 1 < a.vocab_size(); ++i)
    CHECK(a.token_text(i) < a.token_text(i + 1));
}

TEST_CASE("model construction rejects undersized corpora") {
  CHECK_THROWS_AS(RefModel::build_from_corpus("a few words only"),
                  std::invalid_argument);
  std::string almost;
  for (int i = 0; i < 9999; ++i) almost += "word ";
  CHECK_THROWS_AS(RefModel::build_from_corpus(almost), std::invalid_argument);
}

TEST_CASE("word normalization lowercases and gates the alphabet") {
  CHECK(RefModel::normalize_word("Hello") == "hello");
  CHECK(RefModel::normalize_word("records.") == "records.");
  CHECK(RefModel::normalize_word("ABC123") == "abc123");
  CHECK_FALSE(RefModel::normalize_word("don't"));
  CHECK_FALSE(RefModel::normalize_word("semi;colon"));
  CHECK_FALSE(RefModel::normalize_word(""));
  CHECK_FALSE(RefModel::normalize_word("na\xC3\xAFve"));
}

TEST_CASE("token mapping is exact in-vocab and fnv-1a modulo out-of-vocab") {
  const RefModel& m = bundled_model();
  for (std::uint32_t i = 0; i < m.vocab_size(); i += 97) {
    const std::string& w = m.token_text(i);
    CHECK(m.map_token(w) == i);
    REQUIRE(m.exact_token_id(w));
    CHECK(*m.exact_token_id(w) == i);
  }
  const std::vector<std::string> oov = {"qqqzzz", "xxyyzz7", "zzz.qqq"};
  for (const auto& w : oov) {
    if (m.exact_token_id(w)) continue;
    CHECK(m.map_token(w) ==
          static_cast<std::uint32_t>(fnv1a64_oracle(w) % m.vocab_size()));
  }
}

TEST_CASE("model files round-trip and refuse corruption") {
  const RefModel& m = bundled_model();
  const auto path = temp_file("stego_test_model.txt");
  m.save(path.string());

  const RefModel loaded = RefModel::load(path.string());
  CHECK(loaded.content_hash() == m.content_hash());
  CHECK(loaded.vocab_size() == m.vocab_size());
  const Bytes payload{0x41, 0x42, 0x43};
  CHECK(lm_encode(loaded, payload) == lm_encode(m, payload));

  std::string blob = read_file(path.string());
  const auto tampered = temp_file("stego_test_model_bad.txt");
  blob[blob.size() / 2] = blob[blob.size() / 2] == 'x' ? 'y' : 'x';
  std::ofstream(tampered, std::ios::binary) << blob;
  CHECK_THROWS_AS(RefModel::load(tampered.string()), std::runtime_error);

  std::string wrong_version = read_file(path.string());
  wrong_version.replace(0, wrong_version.find('\n'), "stegocanary-model 9");
  std::ofstream(tampered, std::ios::binary) << wrong_version;
  CHECK_THROWS_AS(RefModel::load(tampered.string()), std::runtime_error);

  CHECK_THROWS_AS(RefModel::load("/nonexistent/model.txt"),
                  std::runtime_error);
  std::filesystem::remove(path);
  std::filesystem::remove(tampered);
}

TEST_CASE("pad target doubles small frames and grows large ones by 1.3x") {
  CHECK(default_pad_to_bytes(18) == 36);
  CHECK(default_pad_to_bytes(32) == 64);
  CHECK(default_pad_to_bytes(33) == 43);  // ceil(33 * 1.3)
  CHECK(default_pad_to_bytes(70) == 91);
  CHECK(default_pad_to_bytes(3) == 6);
}

TEST_CASE("generated covers decode back to the payload") {
  const RefModel& m = bundled_model();
  std::mt19937_64 rng(0x11223344);
  for (int iter = 0; iter < 200; ++iter) {
    Bytes payload(1 + rng() % 24);
    for (auto& b : payload) b = static_cast<uint8_t>(rng());
    const auto cover = lm_encode(m, payload);
    REQUIRE(cover);
    CHECK_FALSE(cover->empty());
    const auto back = lm_decode(m, *cover);
    REQUIRE(back);
    CHECK(*back == payload);
  }
}

TEST_CASE("decode replays the encoder's interval trace as a prefix") {
  const RefModel& m = bundled_model();
  std::mt19937_64 rng(0x77);
  for (int iter = 0; iter < 100; ++iter) {
    Bytes payload(1 + rng() % 16);
    for (auto& b : payload) b = static_cast<uint8_t>(rng());
    CoderTrace enc_trace, dec_trace;
    const auto cover = lm_encode(m, payload, {}, &enc_trace);
    REQUIRE(cover);
    const auto back = lm_decode(m, *cover, {}, &dec_trace);
    REQUIRE(back);
    CHECK(*back == payload);
    REQUIRE(dec_trace.size() <= enc_trace.size());
    REQUIRE(!dec_trace.empty());
    for (std::size_t i = 0; i < dec_trace.size(); ++i)
      CHECK(dec_trace[i] == enc_trace[i]);
  }
}

TEST_CASE("deleting a consumed token breaks recovery of the identifier") {
  // The self-delimiting prefix lets the decoder stop once the identifier is
  // in hand, so tokens past that point exist only as padding surface for
  // stacked layers; losing one leaves the identifier intact. Within the
  // consumed stream a deletion desyncs every later interval step, so every
  // identifier bit from the victim onward is garbage. Victims are drawn from
  // the first half of the consumed stream so that at least half the
  // identifier diverges; a right-at-the-boundary deletion corrupts only the
  // final few bits, which crypto verification still catches but with a
  // 2^-bits chance of coincidence this determinism test must not depend on.
  const RefModel& m = bundled_model();
  std::mt19937_64 rng(0xDE1);
  int broken = 0, total = 0;
  for (int iter = 0; iter < 100; ++iter) {
    Bytes payload(8);
    for (auto& b : payload) b = static_cast<uint8_t>(rng());
    const auto cover = lm_encode(m, payload);
    REQUIRE(cover);
    CoderTrace dec_trace;
    REQUIRE(lm_decode(m, *cover, {}, &dec_trace) == payload);
    const std::size_t consumed = dec_trace.size();
    REQUIRE(consumed > 1);

    const auto words = split_words(*cover);
    REQUIRE(words.size() >= consumed);
    const std::size_t victim = rng() % std::max<std::size_t>(consumed / 2, 1);
    std::string mutated;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i == victim) continue;
      if (!mutated.empty()) mutated += ' ';
      mutated += words[i];
    }
    const auto back = lm_decode(m, mutated);
    ++total;
    if (!back || *back != payload) ++broken;
  }
  CHECK(broken == total);
}

TEST_CASE("canonicalize collapses whitespace and strips symbolic marks") {
  CHECK(canonicalize("  a  b\t\nc ") == "a b c");
  CHECK(canonicalize("a\xE2\x80\x8B b") == "a b");          // zw deleted
  CHECK(canonicalize("\xD0\xB0 b") == "a b");               // hg unmapped
  CHECK(canonicalize("a\xE2\x80\x88\x62") == "a b");        // ws variant
  const std::string once = canonicalize(" Mixed  \xE2\x80\x8Btext ");
  CHECK(canonicalize(once) == once);
  CHECK(canonicalize("") == "");
}

TEST_CASE("degenerate inputs give nullopt instead of junk") {
  const RefModel& m = bundled_model();
  CHECK_FALSE(lm_decode(m, ""));
  CHECK_FALSE(lm_decode(m, "one"));
  CHECK_FALSE(lm_decode(m, "   \t  "));

  LmParams tight;
  tight.max_tokens = 3;  // cannot possibly carry the padded frame
  CHECK_FALSE(lm_encode(m, Bytes{0x01, 0x02}, tight));

  LmParams bad_pad;
  bad_pad.pad_to_bytes = 2;  // below the framed length
  CHECK_THROWS_AS(lm_encode(m, Bytes{0x01, 0x02}, bad_pad),
                  std::invalid_argument);
}

TEST_CASE("context string participates in the coder state") {
  const RefModel& m = bundled_model();
  const Bytes payload{0xAA, 0xBB, 0xCC, 0xDD};
  const auto cover = lm_encode(m, payload);
  REQUIRE(cover);
  LmParams other;
  other.context_string = "a completely different seed phrase";
  const auto mismatched = lm_decode(m, *cover, other);
  CHECK((!mismatched || *mismatched != payload));

  // Default context words are all in-vocabulary, so scan-side replay does
  // not depend on the hash fallback.
  std::stringstream ctx{std::string(kDefaultContextString)};
  std::string w;
  while (ctx >> w) CHECK(m.exact_token_id(w));
}

TEST_CASE("min cover length stretches generation past the message") {
  const RefModel& m = bundled_model();
  LmParams params;
  params.min_cover_chars = 600;
  const auto cover = lm_encode(m, Bytes{0x01}, params);
  REQUIRE(cover);
  CHECK(cover->size() >= 600);
  CHECK(lm_decode(m, *cover) == Bytes{0x01});
}
