#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "stegocanary/framing.hpp"
#include "stegocanary/symbolic.hpp"
#include "stegocanary/utf8.hpp"

using namespace stegocanary;
using namespace stegocanary::codec;

namespace {

// Base-4 digits of the framed payload, LSB-first per byte. Recomputed here
// from scratch so encoder output is checked against a second derivation.
std::vector<int> base4_lsb_digits(const Bytes& framed) {
  std::vector<int> out;
  for (uint8_t b : framed)
    for (int k = 0; k < 4; ++k) out.push_back((b >> (2 * k)) & 3);
  return out;
}

std::vector<int> bits_msb_first(const Bytes& framed) {
  std::vector<int> out;
  for (uint8_t b : framed)
    for (int k = 7; k >= 0; --k) out.push_back((b >> k) & 1);
  return out;
}

int ws_digit_of(char32_t cp) {
  const auto it = std::find(kWsAlphabet.begin(), kWsAlphabet.end(), cp);
  return it == kWsAlphabet.end() ? -1
                                 : static_cast<int>(it - kWsAlphabet.begin());
}

int zw_digit_of(char32_t cp) {
  const auto it = std::find(kZwAlphabet.begin(), kZwAlphabet.end(), cp);
  return it == kZwAlphabet.end() ? -1
                                 : static_cast<int>(it - kZwAlphabet.begin());
}

std::string random_ascii_cover(std::mt19937_64& rng, int words) {
  std::string out;
  for (int w = 0; w < words; ++w) {
    if (w) out += ' ';
    const int len = 2 + static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i)
      out += static_cast<char>('a' + rng() % 26);
  }
  return out;
}

Bytes random_payload(std::mt19937_64& rng, std::size_t max_len) {
  Bytes p(1 + rng() % max_len);
  for (auto& b : p) b = static_cast<uint8_t>(rng());
  return p;
}

}  // namespace

TEST_CASE("ws encoder replaces spaces with the expected digit variants") {
  const std::string cover = "a b c d e f g h i j k l m";  // 12 spaces
  REQUIRE(ws_capacity(cover) == 1);
  const Bytes payload{0xAB};
  const auto encoded = ws_encode(cover, payload);
  REQUIRE(encoded);

  // frame({0xAB}) = 00 01 AB; LSB-first base-4 digits per byte.
  const std::vector<int> want = {0, 0, 0, 0, 1, 0, 0, 0, 3, 2, 2, 2};
  CHECK(base4_lsb_digits(frame(payload)) ==
        std::vector<int>(want.begin(), want.end()));

  std::vector<int> got;
  for (char32_t cp : utf8::decode(*encoded)) {
    const int d = ws_digit_of(cp);
    if (d >= 0) got.push_back(d);
    else CHECK(cp != U' ');  // every original space was consumed
  }
  CHECK(got == want);

  // Raw UTF-8 of the first replaced space: digit 0 is U+2008 = E2 80 88.
  CHECK(static_cast<unsigned char>((*encoded)[1]) == 0xE2);
  CHECK(static_cast<unsigned char>((*encoded)[2]) == 0x80);
  CHECK(static_cast<unsigned char>((*encoded)[3]) == 0x88);

  CHECK(ws_decode(*encoded) == payload);
  CHECK(ws_strip(*encoded) == cover);
}

TEST_CASE("ws capacity follows floor(spaces/4) - 2 with a floor of zero") {
  CHECK(ws_capacity(std::string(100, ' ')) == 23);
  CHECK(ws_capacity("") == 0);
  CHECK(ws_capacity("a b c d e f g h") == 0);    // 7 spaces -> floor 1 <= 2
  CHECK(ws_capacity("a b c d e f g h i") == 0);  // 8 spaces -> 2 - 2
  std::string twelve = "x";
  for (int i = 0; i < 12; ++i) twelve += " x";
  CHECK(ws_capacity(twelve) == 1);
}

TEST_CASE("zw encoder spreads digits across gaps at stride floor(j*m/n)") {
  std::string cover;
  for (int i = 0; i < 100; ++i)
    cover += static_cast<char>('a' + i % 26);  // 100 cps, 99 gaps
  const Bytes payload{0xAB};
  const auto encoded = zw_encode(cover, payload);
  REQUIRE(encoded);

  // 12 digits over m=99 gaps: insertion gaps floor(j*99/12).
  const std::vector<int> want_gaps = {0,  8,  16, 24, 33, 41,
                                      49, 57, 66, 74, 82, 90};
  const std::vector<int> want_digits = {0, 0, 0, 0, 1, 0, 0, 0, 3, 2, 2, 2};

  std::vector<int> gaps, digits;
  int cover_idx = 0;
  for (char32_t cp : utf8::decode(*encoded)) {
    const int d = zw_digit_of(cp);
    if (d >= 0) {
      digits.push_back(d);
      gaps.push_back(cover_idx - 1);  // sits in the gap after cp i
    } else {
      ++cover_idx;
    }
  }
  CHECK(gaps == want_gaps);
  CHECK(digits == want_digits);
  CHECK(zw_decode(*encoded) == payload);
  CHECK(zw_strip(*encoded) == cover);
}

TEST_CASE("zw gaps exclude newline-adjacent pairs") {
  const std::string cover = "ab\ncd\nef\ngh\nij\nkl\nmn\nop\nqr\nst\nuv\nwx";
  // 24 visible cps give the estimate floor(23/4) - 2 = 3, but newlines break
  // all cross-line pairs so only 12 real gaps exist. The encoder's verdict
  // wins: two bytes (16 digits) fail, one byte (12 digits) fits exactly.
  CHECK(zw_capacity(cover) == 3);
  CHECK_FALSE(zw_encode(cover, Bytes{0x5A, 0x3C}));
  const Bytes payload{0x5A};
  const auto encoded = zw_encode(cover, payload);
  REQUIRE(encoded);
  // No insertion may touch a newline boundary: a zw char never directly
  // precedes or follows \n.
  const auto cps = utf8::decode(*encoded);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (zw_digit_of(cps[i]) < 0) continue;
    REQUIRE(i > 0);
    CHECK(cps[i - 1] != U'\n');
    REQUIRE(i + 1 < cps.size());
    CHECK(cps[i + 1] != U'\n');
  }
  CHECK(zw_decode(*encoded) == payload);
  CHECK(zw_strip(*encoded) == cover);
}

TEST_CASE("hg encoder flips exactly the one-bit positions to cyrillic") {
  const std::string cover(30, 'a');
  REQUIRE(hg_capacity(cover) == 1);
  const Bytes payload{0xFF};
  const auto encoded = hg_encode(cover, payload);
  REQUIRE(encoded);

  // frame({0xFF}) = 00 01 FF; MSB-first bits put ones at positions 15..23.
  const auto bits = bits_msb_first(frame(payload));
  const auto cps = utf8::decode(*encoded);
  REQUIRE(cps.size() == 30);
  for (int i = 0; i < 30; ++i) {
    if (i < 24 && bits[i] == 1)
      CHECK(cps[i] == char32_t{0x0430});  // Cyrillic a
    else
      CHECK(cps[i] == U'a');
  }
  for (int i = 0; i < 15; ++i) CHECK(cps[i] == U'a');
  for (int i = 15; i < 24; ++i) CHECK(cps[i] == char32_t{0x0430});

  CHECK(hg_decode(*encoded) == payload);
  CHECK(hg_strip(*encoded) == cover);
}

TEST_CASE("hg uppercase pairs map to their uppercase cyrillic partners") {
  const std::string cover(30, 'A');
  const auto encoded = hg_encode(cover, Bytes{0xFF});
  REQUIRE(encoded);
  const auto cps = utf8::decode(*encoded);
  CHECK(cps[14] == U'A');
  CHECK(cps[15] == char32_t{0x0410});  // Cyrillic A
  CHECK(hg_strip(*encoded) == cover);
}

TEST_CASE("hg skips characters outside the confusable set") {
  // 'b', digits, and punctuation carry no bits; only 'a'/'o' positions do.
  std::string cover;
  for (int i = 0; i < 30; ++i) cover += (i % 2 ? "ab7." : "ob9,");
  const std::size_t eligible = 30;  // one per group of four
  CHECK(hg_capacity(cover) == eligible / 8 - 2);
  const auto encoded = hg_encode(cover, Bytes{0x55});
  REQUIRE(encoded);
  const auto cps = utf8::decode(*encoded);
  for (char32_t cp : cps)
    CHECK((cp < 0x80 || is_hg_cyrillic(cp)));
  CHECK(hg_decode(*encoded) == Bytes{0x55});
}

TEST_CASE("round trips hold for random covers and payloads") {
  std::mt19937_64 rng(0xC0DEC);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::string cover = random_ascii_cover(rng, 40 + rng() % 120);

    const std::size_t wc = ws_capacity(cover);
    if (wc > 0) {
      const Bytes p = random_payload(rng, std::min<std::size_t>(wc, 24));
      const auto enc = ws_encode(cover, p);
      REQUIRE(enc);
      CHECK(ws_decode(*enc) == p);
      CHECK(ws_strip(*enc) == cover);
    }

    const std::size_t zc = zw_capacity(cover);
    if (zc > 0) {
      const Bytes p = random_payload(rng, std::min<std::size_t>(zc, 24));
      const auto enc = zw_encode(cover, p);
      REQUIRE(enc);
      CHECK(zw_decode(*enc) == p);
      CHECK(zw_strip(*enc) == cover);
    }

    const std::size_t hc = hg_capacity(cover);
    if (hc > 0) {
      const Bytes p = random_payload(rng, std::min<std::size_t>(hc, 24));
      const auto enc = hg_encode(cover, p);
      REQUIRE(enc);
      CHECK(hg_decode(*enc) == p);
      CHECK(hg_strip(*enc) == cover);
    }
  }
}

TEST_CASE("capacity matches an independent brute-force count") {
  std::mt19937_64 rng(0xCAFE);
  const std::string charset = "abcdefgo xyzBHKMT .,\n0123456789";
  for (int iter = 0; iter < 1000; ++iter) {
    std::string text;
    const std::size_t len = rng() % 400;
    for (std::size_t i = 0; i < len; ++i)
      text += charset[rng() % charset.size()];

    std::size_t spaces = 0, visible = 0, eligible = 0;
    for (char c : text) {
      if (c == ' ') ++spaces;
      if (c != '\n') ++visible;
      if (is_hg_latin(static_cast<char32_t>(c))) ++eligible;
    }
    const auto cap = [](std::size_t units, std::size_t per) -> std::size_t {
      return units / per > 2 ? units / per - 2 : 0;
    };
    CHECK(ws_capacity(text) == cap(spaces, 4));
    CHECK(zw_capacity(text) == cap(visible ? visible - 1 : 0, 4));
    CHECK(hg_capacity(text) == cap(eligible, 8));
  }
}

TEST_CASE("encoding into marked text first strips the prior mark") {
  std::mt19937_64 rng(0xFEED);
  const std::string cover = random_ascii_cover(rng, 120);
  const Bytes first{0x01, 0x02, 0x03};
  const Bytes second{0xF0, 0x0D};

  const auto via_marked_ws = ws_encode(*ws_encode(cover, first), second);
  CHECK(via_marked_ws == ws_encode(cover, second));

  const auto via_marked_zw = zw_encode(*zw_encode(cover, first), second);
  CHECK(via_marked_zw == zw_encode(cover, second));

  const auto via_marked_hg = hg_encode(*hg_encode(cover, first), second);
  CHECK(via_marked_hg == hg_encode(cover, second));
}

TEST_CASE("oversize payloads and barren covers yield nullopt") {
  const std::string cover = "a b c d e f g h i j k l m";  // capacity 1
  CHECK_FALSE(ws_encode(cover, Bytes(2, 0x11)));
  CHECK(ws_encode(cover, Bytes(1, 0x11)));
  CHECK_FALSE(ws_encode("nospace", Bytes{0x01}));
  CHECK_FALSE(zw_encode("ab", Bytes{0x01}));
  CHECK_FALSE(hg_encode("bdfg", Bytes{0x01}));
  CHECK_FALSE(zw_encode("", Bytes{0x01}));
}

TEST_CASE("decoding unmarked or truncated text yields nullopt") {
  CHECK_FALSE(ws_decode("plain ascii text with spaces"));
  CHECK_FALSE(zw_decode("plain ascii text"));
  CHECK_FALSE(hg_decode("plain ascii text"));
  CHECK_FALSE(ws_decode(""));

  // Drop the tail of an encoded text: the declared length now exceeds the
  // recoverable bytes, so the frame is rejected.
  std::string cover;
  for (int i = 0; i < 50; ++i) cover += "word ";
  const auto enc = ws_encode(cover, Bytes{0x10, 0x20, 0x30});
  REQUIRE(enc);
  const auto cps = utf8::decode(*enc);
  std::vector<char32_t> head(cps.begin(), cps.begin() + cps.size() / 3);
  CHECK_FALSE(ws_decode(utf8::encode(head)));
}
