#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stegocanary/tokens.hpp"

namespace stegocanary::tokens {

// Scan-side registry: the full set of valid HMAC tokens plus the Ed25519
// public key per organization. Immutable once sealed; concurrent readers
// need no locking. Mutation happens by building a fresh registry and
// swapping the shared_ptr at the service layer.
class TokenRegistry {
 public:
  using HmacEntry = std::array<std::uint8_t, kHmacTokenLen>;

  void add_hmac_token(const HmacEntry& token);
  void add_eddsa_key(const std::string& org_id, const Bytes& public_key);

  // Sorts HMAC entries for binary search. Lookup before seal() throws.
  void seal();
  bool sealed() const { return sealed_; }

  std::size_t hmac_size() const { return hmac_.size(); }
  std::size_t eddsa_size() const { return eddsa_.size(); }

  // Exact-match verification of a candidate payload. Length must be exactly
  // 16 (HMAC) or 68 (EdDSA) for the respective scheme; anything else is a
  // clean no-match. EdDSA tries every registered public key.
  std::optional<ScanIdentity> verify(const Bytes& candidate, Scheme scheme) const;

  // Line-delimited persistence. HMAC record: 32 hex chars. EdDSA record:
  // org_id <TAB> 64 hex chars. Blank lines and lines starting with '#' are
  // skipped. Duplicate records collapse. Throws std::runtime_error on I/O
  // failure or a malformed record.
  static TokenRegistry load(const std::string& path);
  static TokenRegistry parse(std::istream& in, const std::string& origin);
  void save(const std::string& path) const;

 private:
  std::vector<HmacEntry> hmac_;
  std::vector<std::pair<std::string, Bytes>> eddsa_;
  bool sealed_ = false;
};

}  // namespace stegocanary::tokens
