#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace stegocanary::uni {

struct NfkcEntry {
  char32_t cp;
  std::uint32_t offset;  // into kNfkcPool
  std::uint16_t len;
};

struct CpRange {
  char32_t lo, hi;  // inclusive
};

struct LowerEntry {
  char32_t cp;
  char32_t lower;
};

extern const NfkcEntry kNfkcMap[];
extern const std::size_t kNfkcMapSize;
extern const char kNfkcPool[];
extern const CpRange kCfRanges[];
extern const std::size_t kCfRangesSize;
extern const LowerEntry kLowerMap[];
extern const std::size_t kLowerMapSize;

// Empty view means cp is NFKC-stable.
std::string_view nfkc_singleton(char32_t cp);

bool is_format_char(char32_t cp);   // general category Cf
bool is_white_space(char32_t cp);   // UAX #44 White_Space
char32_t simple_lower(char32_t cp);

}  // namespace stegocanary::uni
