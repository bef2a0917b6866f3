#include "stegocanary/framing.hpp"

namespace stegocanary {

Bytes frame(std::span<const std::uint8_t> payload) {
  if (payload.empty() || payload.size() > 0xFFFF)
    throw std::invalid_argument("frame: payload must be 1..65535 bytes");
  Bytes out;
  out.reserve(payload.size() + 2);
  out.push_back(static_cast<std::uint8_t>(payload.size() >> 8));
  out.push_back(static_cast<std::uint8_t>(payload.size() & 0xFF));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

std::optional<Bytes> unframe(std::span<const std::uint8_t> framed) {
  if (framed.size() < 2) return std::nullopt;
  const std::size_t len = (static_cast<std::size_t>(framed[0]) << 8) | framed[1];
  if (len == 0 || len > framed.size() - 2) return std::nullopt;
  return Bytes(framed.begin() + 2, framed.begin() + 2 + len);
}

}  // namespace stegocanary
