#include <algorithm>

#include "stegocanary/unicode_tables.hpp"

namespace stegocanary::uni {

std::string_view nfkc_singleton(char32_t cp) {
  const NfkcEntry* end = kNfkcMap + kNfkcMapSize;
  const NfkcEntry* it = std::lower_bound(
      kNfkcMap, end, cp,
      [](const NfkcEntry& e, char32_t v) { return e.cp < v; });
  if (it == end || it->cp != cp) return {};
  return {kNfkcPool + it->offset, it->len};
}

bool is_format_char(char32_t cp) {
  const CpRange* end = kCfRanges + kCfRangesSize;
  const CpRange* it = std::upper_bound(
      kCfRanges, end, cp, [](char32_t v, const CpRange& r) { return v < r.lo; });
  return it != kCfRanges && cp <= (it - 1)->hi;
}

bool is_white_space(char32_t cp) {
  // UAX #44 White_Space=Yes.
  if (cp == 0x20 || (cp >= 0x09 && cp <= 0x0D)) return true;
  if (cp == 0x85 || cp == 0xA0 || cp == 0x1680) return true;
  if (cp >= 0x2000 && cp <= 0x200A) return true;
  return cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

char32_t simple_lower(char32_t cp) {
  const LowerEntry* end = kLowerMap + kLowerMapSize;
  const LowerEntry* it = std::lower_bound(
      kLowerMap, end, cp,
      [](const LowerEntry& e, char32_t v) { return e.cp < v; });
  if (it == end || it->cp != cp) return cp;
  return it->lower;
}

}  // namespace stegocanary::uni
