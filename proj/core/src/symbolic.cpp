#include "stegocanary/symbolic.hpp"

#include <algorithm>

#include "stegocanary/framing.hpp"
#include "stegocanary/utf8.hpp"

namespace stegocanary::codec {

namespace {

constexpr bool is_newline(char32_t cp) { return cp == U'\n' || cp == U'\r'; }

// Base-4 digits, least significant digit of each byte first.
std::vector<std::uint8_t> to_digits(const Bytes& bytes) {
  std::vector<std::uint8_t> digits;
  digits.reserve(bytes.size() * 4);
  for (std::uint8_t b : bytes)
    for (int shift = 0; shift < 8; shift += 2)
      digits.push_back((b >> shift) & 3);
  return digits;
}

Bytes digits_to_bytes(const std::vector<std::uint8_t>& digits) {
  Bytes out;
  out.reserve(digits.size() / 4);
  for (std::size_t i = 0; i + 4 <= digits.size(); i += 4)
    out.push_back(static_cast<std::uint8_t>(digits[i] | digits[i + 1] << 2 |
                                            digits[i + 2] << 4 |
                                            digits[i + 3] << 6));
  return out;
}

// Bits most significant first per byte.
std::vector<std::uint8_t> to_bits(const Bytes& bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes)
    for (int shift = 7; shift >= 0; --shift) bits.push_back((b >> shift) & 1);
  return bits;
}

Bytes bits_to_bytes(const std::vector<std::uint8_t>& bits) {
  Bytes out;
  out.reserve(bits.size() / 8);
  for (std::size_t i = 0; i + 8 <= bits.size(); i += 8) {
    std::uint8_t b = 0;
    for (int k = 0; k < 8; ++k) b = static_cast<std::uint8_t>(b << 1 | bits[i + k]);
    out.push_back(b);
  }
  return out;
}

std::size_t payload_capacity(std::size_t units, std::size_t per_byte) {
  const std::size_t frames = units / per_byte;
  return frames > 2 ? frames - 2 : 0;
}

char32_t hg_to_cyrillic(char32_t cp) {
  for (const auto& p : kHomoglyphMap)
    if (p.latin == cp) return p.cyrillic;
  return cp;
}

}  // namespace

bool is_ws_variant(char32_t cp) {
  return std::find(kWsAlphabet.begin(), kWsAlphabet.end(), cp) !=
         kWsAlphabet.end();
}

bool is_zw_char(char32_t cp) {
  return std::find(kZwAlphabet.begin(), kZwAlphabet.end(), cp) !=
         kZwAlphabet.end();
}

bool is_hg_latin(char32_t cp) {
  for (const auto& p : kHomoglyphMap)
    if (p.latin == cp) return true;
  return false;
}

bool is_hg_cyrillic(char32_t cp) {
  for (const auto& p : kHomoglyphMap)
    if (p.cyrillic == cp) return true;
  return false;
}

char32_t hg_to_latin(char32_t cp) {
  for (const auto& p : kHomoglyphMap)
    if (p.cyrillic == cp) return p.latin;
  return cp;
}

// --- whitespace codec ---

std::optional<std::string> ws_encode(std::string_view cover, const Bytes& payload) {
  auto cps = utf8::decode(cover);
  for (auto& cp : cps)
    if (is_ws_variant(cp)) cp = U' ';
  const auto digits = to_digits(frame(payload));
  std::size_t next = 0;
  for (auto& cp : cps) {
    if (next == digits.size()) break;
    if (cp == U' ') cp = kWsAlphabet[digits[next++]];
  }
  if (next < digits.size()) return std::nullopt;
  return utf8::encode(cps);
}

std::optional<Bytes> ws_decode(std::string_view text) {
  std::vector<std::uint8_t> digits;
  for (char32_t cp : utf8::decode(text)) {
    const auto it = std::find(kWsAlphabet.begin(), kWsAlphabet.end(), cp);
    if (it != kWsAlphabet.end())
      digits.push_back(static_cast<std::uint8_t>(it - kWsAlphabet.begin()));
  }
  return unframe(digits_to_bytes(digits));
}

std::string ws_strip(std::string_view text) {
  auto cps = utf8::decode(text);
  for (auto& cp : cps)
    if (is_ws_variant(cp)) cp = U' ';
  return utf8::encode(cps);
}

std::size_t ws_capacity(std::string_view text) {
  std::size_t spaces = 0;
  for (char32_t cp : utf8::decode(text))
    if (cp == U' ') ++spaces;
  return payload_capacity(spaces, 4);
}

// --- zero-width codec ---

std::optional<std::string> zw_encode(std::string_view cover, const Bytes& payload) {
  auto cps = utf8::decode(cover);
  cps.erase(std::remove_if(cps.begin(), cps.end(),
                           [](char32_t cp) { return is_zw_char(cp); }),
            cps.end());
  // Insertion slot i+1 exists for every adjacent non-newline pair (i, i+1).
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i + 1 < cps.size(); ++i)
    if (!is_newline(cps[i]) && !is_newline(cps[i + 1])) gaps.push_back(i + 1);
  const auto digits = to_digits(frame(payload));
  const std::size_t n = digits.size(), m = gaps.size();
  if (m < n) return std::nullopt;
  std::vector<char32_t> out;
  out.reserve(cps.size() + n);
  std::size_t digit = 0;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    // Stride interleave: digit j goes to gap floor(j*m/n), strictly
    // increasing because m >= n.
    while (digit < n && gaps[digit * m / n] == i)
      out.push_back(kZwAlphabet[digits[digit++]]);
    if (i < cps.size()) out.push_back(cps[i]);
  }
  return utf8::encode(out);
}

std::optional<Bytes> zw_decode(std::string_view text) {
  std::vector<std::uint8_t> digits;
  for (char32_t cp : utf8::decode(text)) {
    const auto it = std::find(kZwAlphabet.begin(), kZwAlphabet.end(), cp);
    if (it != kZwAlphabet.end())
      digits.push_back(static_cast<std::uint8_t>(it - kZwAlphabet.begin()));
  }
  return unframe(digits_to_bytes(digits));
}

std::string zw_strip(std::string_view text) {
  auto cps = utf8::decode(text);
  cps.erase(std::remove_if(cps.begin(), cps.end(),
                           [](char32_t cp) { return is_zw_char(cp); }),
            cps.end());
  return utf8::encode(cps);
}

std::size_t zw_capacity(std::string_view text) {
  std::size_t visible = 0;
  for (char32_t cp : utf8::decode(text))
    if (!is_newline(cp)) ++visible;
  if (visible == 0) return 0;
  return payload_capacity(visible - 1, 4);
}

// --- homoglyph codec ---

std::optional<std::string> hg_encode(std::string_view cover, const Bytes& payload) {
  auto cps = utf8::decode(cover);
  for (auto& cp : cps) cp = hg_to_latin(cp);
  const auto bits = to_bits(frame(payload));
  std::size_t next = 0;
  for (auto& cp : cps) {
    if (next == bits.size()) break;
    if (is_hg_latin(cp)) {
      if (bits[next++]) cp = hg_to_cyrillic(cp);
    }
  }
  if (next < bits.size()) return std::nullopt;
  return utf8::encode(cps);
}

std::optional<Bytes> hg_decode(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char32_t cp : utf8::decode(text)) {
    if (is_hg_latin(cp))
      bits.push_back(0);
    else if (is_hg_cyrillic(cp))
      bits.push_back(1);
  }
  return unframe(bits_to_bytes(bits));
}

std::string hg_strip(std::string_view text) {
  auto cps = utf8::decode(text);
  for (auto& cp : cps) cp = hg_to_latin(cp);
  return utf8::encode(cps);
}

std::size_t hg_capacity(std::string_view text) {
  std::size_t eligible = 0;
  for (char32_t cp : utf8::decode(text))
    if (is_hg_latin(cp) || is_hg_cyrillic(cp)) ++eligible;
  return payload_capacity(eligible, 8);
}

}  // namespace stegocanary::codec
