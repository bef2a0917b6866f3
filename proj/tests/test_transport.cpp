#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "stegocanary/transport.hpp"
#include "stegocanary/utf8.hpp"

using namespace stegocanary;
using namespace stegocanary::transport;
using enum TransformId;

namespace {

std::string tf(TransformId id, std::string_view text) {
  return apply_transform(id, text);
}

// Mixed ASCII / artifact / confusable soup for idempotence sweeps.
std::string random_messy_text(std::mt19937_64& rng) {
  static const std::vector<std::string> atoms = {
      "word", " ",  "\t", "\n", "\r\n", "  ",   "\xE2\x80\x8B" /*200B*/,
      "\xEF\xBB\xBF" /*FEFF*/, "\xE2\x80\x88" /*2008*/, "\xC2\xAD" /*00AD*/,
      "\xD0\xB0" /*0430*/,     "\xD0\xB1" /*0431*/,     "Don't",
      "\"q\"",  ".",  "!",  "Mixed", "CASE", "\xE2\x81\x9F" /*205F*/};
  std::string out;
  const int n = 5 + static_cast<int>(rng() % 60);
  for (int i = 0; i < n; ++i) out += atoms[rng() % atoms.size()];
  return out;
}

}  // namespace

TEST_CASE("T01 normalizes line endings and strips one leading BOM") {
  CHECK(tf(kT01, "x\r\ny\rz\n") == "x\ny\nz\n");
  CHECK(tf(kT01, "\xEF\xBB\xBFhead") == "head");
  CHECK(tf(kT01, "a\xEF\xBB\xBF_b") == "a\xEF\xBB\xBF_b");  // only leading
  CHECK(tf(kT01, "\r\r\n") == "\n\n");
  CHECK(tf(kT01, "plain") == "plain");
}

TEST_CASE("T02 joins paragraph lines and re-wraps at 80 columns") {
  CHECK(tf(kT02, "aaa\nbbb\n\nccc\n") == "aaa bbb\n\nccc\n");
  CHECK(tf(kT02, "aaa\nbbb\n\n\n\nccc") == "aaa bbb\n\nccc\n");

  std::string para;
  for (int i = 0; i < 30; ++i) para += "fives ";
  const std::string wrapped = tf(kT02, para);
  std::stringstream ss(wrapped);
  std::string line;
  int lines = 0;
  while (std::getline(ss, line)) {
    CHECK(line.size() <= 80);
    CHECK_FALSE(line.empty());
    ++lines;
  }
  CHECK(lines > 1);
  // Content is preserved up to whitespace placement.
  std::string flat = wrapped;
  for (auto& c : flat)
    if (c == '\n') c = ' ';
  std::string want = para;
  while (!want.empty() && want.back() == ' ') want.pop_back();
  while (!flat.empty() && flat.back() == ' ') flat.pop_back();
  CHECK(flat == want);
}

TEST_CASE("T03 chooses quote direction from the preceding character") {
  const std::string out = tf(kT03, "'hi' (\"x\") don't");
  const auto cps = utf8::decode(out);
  CHECK(cps[0] == char32_t{0x2018});   // opens at start
  CHECK(cps[3] == char32_t{0x2019});   // closes after a letter
  CHECK(cps[6] == char32_t{0x201C});   // opens after '('
  CHECK(cps[8] == char32_t{0x201D});   // closes after a letter
  CHECK(cps[14] == char32_t{0x2019});  // apostrophe inside a word

  // A quote directly after an opening quote also opens.
  const auto nested = utf8::decode(tf(kT03, "\"'x'\""));
  CHECK(nested[0] == char32_t{0x201C});
  CHECK(nested[1] == char32_t{0x2018});
  CHECK(nested[3] == char32_t{0x2019});
  CHECK(nested[4] == char32_t{0x201D});
}

TEST_CASE("T04 strips trailing ASCII blanks only") {
  CHECK(tf(kT04, "a  \nb\t\n c\n") == "a\nb\n c\n");
  CHECK(tf(kT04, "x  ") == "x");
  CHECK(tf(kT04, "  \n") == "\n");
  // A trailing Unicode space variant is not an ASCII blank and survives.
  CHECK(tf(kT04, "a\xE2\x80\x88\n") == "a\xE2\x80\x88\n");
}

TEST_CASE("T05 applies NFKC compatibility singletons") {
  CHECK(tf(kT05, "a\xE2\x80\xAF_b") == "a _b");      // U+202F narrow nbsp
  CHECK(tf(kT05, "a\xE2\x80\x88_b") == "a _b");      // U+2008 punct space
  CHECK(tf(kT05, "\xEF\xAC\x81n") == "fin");         // U+FB01 fi ligature
  CHECK(tf(kT05, "\xE2\x91\xA0.") == "1.");          // U+2460 circled one
  // Zero-width characters are NFKC-stable and pass through.
  CHECK(tf(kT05, "a\xE2\x80\x8B\x62") == "a\xE2\x80\x8B\x62");
  CHECK(tf(kT05, "a\xD0\xB0") == "a\xD0\xB0");       // Cyrillic a is stable
}

TEST_CASE("T06 collapses any Unicode whitespace run to one space") {
  CHECK(tf(kT06, "a \t\n b") == "a b");
  CHECK(tf(kT06, "a\xC2\xA0\xE2\x80\x88\x62") == "a b");
  CHECK(tf(kT06, "a\n\nb") == "a b");  // paragraph breaks are lost too
  // Zero-width characters are not White_Space.
  CHECK(tf(kT06, "a\xE2\x80\x8B\x62") == "a\xE2\x80\x8B\x62");
}

TEST_CASE("T07 deletes format characters but keeps spacing marks") {
  CHECK(tf(kT07, "a\xE2\x80\x8B\xE2\x80\x8C\xE2\x80\x8D\xEF\xBB\xBF\x62") ==
        "ab");
  CHECK(tf(kT07, "a\xC2\xAD\x62") == "ab");            // soft hyphen is Cf
  CHECK(tf(kT07, "a\xE2\x80\x88\x62") == "a\xE2\x80\x88\x62");  // Zs kept
}

TEST_CASE("T08 deletes exactly the zero-width alphabet") {
  CHECK(tf(kT08, "a\xE2\x80\x8B\xE2\x80\x8C\xE2\x80\x8D\xEF\xBB\xBF\x62") ==
        "ab");
  CHECK(tf(kT08, "a\xC2\xAD\x62") == "a\xC2\xAD\x62");  // unlike T07
  CHECK(tf(kT08, "a\xE2\x80\x88\x62") == "a\xE2\x80\x88\x62");
}

TEST_CASE("T09 maps confusable cyrillic to latin and nothing else") {
  CHECK(tf(kT09, "\xD0\xB0\xD1\x81\xD0\xB5") == "ace");   // а с е
  CHECK(tf(kT09, "\xD0\x90\xD0\x92\xD0\x9D") == "ABH");   // А В Н
  CHECK(tf(kT09, "\xD0\xB1") == "\xD0\xB1");  // б has no latin twin
  CHECK(tf(kT09, "plain") == "plain");
}

TEST_CASE("T10 deletes every codepoint above U+007F") {
  CHECK(tf(kT10, "a\xD0\xB0\xE2\x80\x88\x62\xE2\x86\x92") == "ab");
  CHECK(tf(kT10, "keep\nlines\n") == "keep\nlines\n");
}

TEST_CASE("T11 drops ascii punctuation and lowercases") {
  CHECK(tf(kT11, "Hello, World!") == "hello world");
  CHECK(tf(kT11, "Don't stop") == "dont stop");
  CHECK(tf(kT11, "A-B_c.d") == "abcd");
  // Confusable Cyrillic capitals lowercase too.
  CHECK(tf(kT11, "\xD0\x90") == "\xD0\xB0");
}

TEST_CASE("T04 through T11 are idempotent on messy inputs") {
  std::mt19937_64 rng(0x1DE0);
  const std::vector<TransformId> idempotent = {kT04, kT05, kT06, kT07,
                                               kT08, kT09, kT10, kT11};
  for (int iter = 0; iter < 200; ++iter) {
    const std::string text = random_messy_text(rng);
    for (TransformId id : idempotent) {
      const std::string once = tf(id, text);
      CHECK(tf(id, once) == once);
    }
  }

  std::ifstream doc(std::string(STEGOCANARY_DATA_DIR) +
                    "/corpus/archive_rebinding.txt");
  REQUIRE(doc);
  std::stringstream buf;
  buf << doc.rdbuf();
  for (TransformId id : idempotent) {
    const std::string once = tf(id, buf.str());
    CHECK(tf(id, once) == once);
  }
}

TEST_CASE("T12 requires a configured external command") {
  CHECK_THROWS_AS(tf(kT12, "text"), TransformUnavailable);

  TransformOptions opts;
  opts.paraphrase_cmd = "tr 'a-z' 'A-Z'";
  CHECK(apply_transform(kT12, "shout", opts) == "SHOUT");

  opts.paraphrase_cmd = "exit 3";
  CHECK_THROWS_AS(apply_transform(kT12, "x", opts), std::runtime_error);
}

TEST_CASE("transform names round-trip") {
  for (int i = 0; i <= 12; ++i) {
    const auto id = static_cast<TransformId>(i);
    const auto back = transform_from_name(transform_name(id));
    REQUIRE(back);
    CHECK(*back == id);
  }
  CHECK_FALSE(transform_from_name("T13"));
  CHECK_FALSE(transform_from_name("t05"));
}

TEST_CASE("standard chains have the pinned tier composition") {
  const auto& chains = standard_chains();
  REQUIRE(chains.size() == 6);
  const auto names_of = [](const Chain& c) {
    std::string s;
    for (auto id : c.transforms) {
      if (!s.empty()) s += ',';
      s += transform_name(id);
    }
    return s;
  };
  CHECK(chains[0].name == "Tier-1");
  CHECK(names_of(chains[0]) == "T01,T02,T03,T04");
  CHECK(chains[1].name == "Tier-2");
  CHECK(names_of(chains[1]) == "T05,T06,T07");
  CHECK(chains[2].name == "Tier-3");
  CHECK(names_of(chains[2]) == "T08,T09,T10");
  CHECK(chains[3].name == "Tier-1+2");
  CHECK(names_of(chains[3]) == "T01,T02,T03,T04,T05,T06,T07");
  CHECK(chains[4].name == "Tier-1+2+3");
  CHECK(names_of(chains[4]) == "T01,T02,T03,T04,T05,T06,T07,T08,T09,T10");
  CHECK(chains[5].name == "Tier-4");
  CHECK(names_of(chains[5]) == "T12");

  const auto tier0 = chain_from_name("Tier-0");
  REQUIRE(tier0);
  CHECK(tier0->transforms.empty());
  CHECK_FALSE(chain_from_name("Tier-5"));

  // apply_chain is exactly sequential application.
  const std::string text = "A  'q'\r\n\xE2\x80\x8B\xD0\xB0 end  \n";
  std::string manual = text;
  for (auto id : chains[4].transforms) manual = tf(id, manual);
  CHECK(apply_chain(chains[4], text) == manual);
}
