#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stegocanary::transport {

// Deterministic models of what document pipelines do to text in transit.
// T04 through T11 are idempotent. T12 shells out to an external paraphrase
// command and is unavailable unless one is configured.
enum class TransformId {
  kT00,  // identity
  kT01,  // CRLF/CR -> LF, strip one leading BOM
  kT02,  // re-wrap paragraphs at 80 columns
  kT03,  // ASCII quotes -> typographic quotes
  kT04,  // strip trailing ASCII blanks per line
  kT05,  // NFKC normalization
  kT06,  // collapse Unicode whitespace runs to one U+0020
  kT07,  // delete format (Cf) characters
  kT08,  // delete the zero-width alphabet
  kT09,  // map Cyrillic confusables to Latin
  kT10,  // delete every codepoint above U+007F
  kT11,  // delete ASCII punctuation, lowercase everything
  kT12,  // external paraphrase command
};

const char* transform_name(TransformId id);              // "T00".."T12"
std::optional<TransformId> transform_from_name(std::string_view name);

struct TransformOptions {
  // Shell command reading the document on stdin and writing the transformed
  // document to stdout. Required by T12.
  std::string paraphrase_cmd;
};

class TransformUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applies one transform. Throws TransformUnavailable for T12 without a
// configured command, std::runtime_error if the external command fails.
std::string apply_transform(TransformId id, std::string_view text,
                            const TransformOptions& opts = {});

// Named chains: Tier-1 = T01..T04, Tier-2 = T05..T07, Tier-3 = T08..T10,
// Tier-1+2, Tier-1+2+3, Tier-4 = T12.
struct Chain {
  std::string name;
  std::vector<TransformId> transforms;
};

const std::vector<Chain>& standard_chains();
std::optional<Chain> chain_from_name(std::string_view name);

std::string apply_chain(const Chain& chain, std::string_view text,
                        const TransformOptions& opts = {});

}  // namespace stegocanary::transport
