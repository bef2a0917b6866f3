#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "stegocanary/bytes.hpp"

namespace stegocanary::codec {

// Every encoder operates on frame(payload) internally and normalizes its own
// surface first (ws/zw strip their alphabet, hg maps Cyrillic back to Latin),
// so pre-existing marks cannot alias into the new encoding. Decoders return
// nullopt when no well-formed frame is recoverable; hard errors are reserved
// for programmer mistakes such as an oversize payload.

// Four space variants; the variant index is the base-4 digit.
inline constexpr std::array<char32_t, 4> kWsAlphabet = {0x2008, 0x2009, 0x202F,
                                                        0x205F};
// Four zero-width characters; purely additive carrier.
inline constexpr std::array<char32_t, 4> kZwAlphabet = {0x200B, 0x200C, 0x200D,
                                                        0xFEFF};

struct HomoglyphPair {
  char32_t latin;
  char32_t cyrillic;
};

// 18 visually indistinguishable Latin/Cyrillic pairs. Latin side carries
// bit 0, Cyrillic side bit 1.
inline constexpr std::array<HomoglyphPair, 18> kHomoglyphMap = {{
    {U'a', 0x0430}, {U'c', 0x0441}, {U'e', 0x0435}, {U'o', 0x043E},
    {U'p', 0x0440}, {U'x', 0x0445}, {U'y', 0x0443},
    {U'A', 0x0410}, {U'B', 0x0412}, {U'C', 0x0421}, {U'E', 0x0415},
    {U'H', 0x041D}, {U'K', 0x041A}, {U'M', 0x041C}, {U'O', 0x041E},
    {U'P', 0x0420}, {U'T', 0x0422}, {U'X', 0x0425},
}};

// Whitespace codec: replaces the first 4*(2+|payload|) ASCII spaces with
// variant codepoints, one base-4 digit each, digits LSB-first per byte.
std::optional<std::string> ws_encode(std::string_view cover, const Bytes& payload);
std::optional<Bytes> ws_decode(std::string_view text);
std::string ws_strip(std::string_view text);
std::size_t ws_capacity(std::string_view text);

// Zero-width codec: inserts digit codepoints into inter-character gaps,
// stride-interleaved across the document. A gap exists between consecutive
// characters where neither is a newline (U+000A/U+000D).
std::optional<std::string> zw_encode(std::string_view cover, const Bytes& payload);
std::optional<Bytes> zw_decode(std::string_view text);
std::string zw_strip(std::string_view text);
std::size_t zw_capacity(std::string_view text);

// Homoglyph codec: one bit per eligible position, bits MSB-first per byte.
std::optional<std::string> hg_encode(std::string_view cover, const Bytes& payload);
std::optional<Bytes> hg_decode(std::string_view text);
std::string hg_strip(std::string_view text);
std::size_t hg_capacity(std::string_view text);

bool is_ws_variant(char32_t cp);
bool is_zw_char(char32_t cp);
bool is_hg_latin(char32_t cp);
bool is_hg_cyrillic(char32_t cp);
// Latin partner of a Cyrillic confusable, or cp itself if not confusable.
char32_t hg_to_latin(char32_t cp);

}  // namespace stegocanary::codec
