#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "stegocanary/bytes.hpp"

namespace stegocanary {

// 2-byte big-endian length prefix followed by the payload. Every carrier
// embeds frame(payload), never the bare payload, so decoders self-delimit.
// Throws std::invalid_argument unless 1 <= payload size <= 65535.
Bytes frame(std::span<const std::uint8_t> payload);

// Inverse of frame(). Trailing bytes beyond the declared length are ignored
// (carriers may round up to whole digits). Returns nullopt when the declared
// length is zero or exceeds the available bytes.
std::optional<Bytes> unframe(std::span<const std::uint8_t> framed);

}  // namespace stegocanary
