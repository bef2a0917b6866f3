#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stegocanary {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const std::uint8_t* data, std::size_t len);
std::string to_hex(const Bytes& b);

// Returns nullopt on odd length or non-hex characters.
std::optional<Bytes> from_hex(const std::string& hex);

}  // namespace stegocanary
