#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stegocanary/bytes.hpp"
#include "stegocanary/ref_model.hpp"

namespace stegocanary::codec {

inline constexpr std::string_view kDefaultContextString =
    "the survey records describe";

struct LmParams {
  std::string context_string{kDefaultContextString};
  std::size_t max_tokens = 4096;
  std::size_t min_cover_chars = 0;
  // 0 derives from the framed length: 2x for frames up to 32 bytes,
  // otherwise ceil(1.3x). Padding bits are zeros after the frame.
  std::size_t pad_to_bytes = 0;
  std::uint32_t truncation_min_k = 2;
};

std::size_t default_pad_to_bytes(std::size_t framed_len);

// Interval state after each token step; bits counts renormalization shifts,
// i.e. message bits recovered (decode) or committed (encode) so far.
struct CoderState {
  std::uint64_t low;
  std::uint64_t high;
  std::uint64_t bits;

  bool operator==(const CoderState&) const = default;
};
using CoderTrace = std::vector<CoderState>;

// Generates cover text whose token sequence arithmetic-decodes to the bits
// of frame(payload) zero-padded to pad_to_bytes. Tokens are joined by single
// spaces. Emission continues until the padded message is fully recoverable
// and the cover reaches min_cover_chars; nullopt if max_tokens is hit first.
std::optional<std::string> lm_encode(const RefModel& model, const Bytes& payload,
                                     const LmParams& params = {},
                                     CoderTrace* trace = nullptr);

// Canonicalizes, splits on whitespace, replays the coder over the observed
// tokens and re-accumulates message bits until the 2-byte prefix and its
// declared body are in hand. If the token stream ends early the bytes
// recovered so far are returned (they will fail verification); anything
// short of the prefix plus one body byte, a declared length of zero, or an
// observed token that interval truncation excluded, gives nullopt.
std::optional<Bytes> lm_decode(const RefModel& model, std::string_view text,
                               const LmParams& params = {},
                               CoderTrace* trace = nullptr);

// zw_strip, hg_strip, whitespace-run collapse to single U+0020, trim.
// Idempotent; decode-side normalization shared with the scanner.
std::string canonicalize(std::string_view text);

}  // namespace stegocanary::codec
