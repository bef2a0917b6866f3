#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stegocanary::utf8 {

// Invalid sequences never throw: each offending byte decodes to U+FFFD and
// the cursor advances by one, so scanning stays total on malformed input.
constexpr char32_t kReplacement = 0xFFFD;

std::vector<char32_t> decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

bool is_valid(std::string_view text);

}  // namespace stegocanary::utf8
