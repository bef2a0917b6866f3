#pragma once

#include <optional>
#include <string>

#include "stegocanary/bytes.hpp"

namespace stegocanary::tokens {

enum class Scheme { kHmac, kEddsa };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

// Organization secret. Deliberately has no serialization helpers; key bytes
// enter the process from a key file only (see load_key_file).
class OrgKey {
 public:
  // Throws std::invalid_argument if key material is shorter than 16 bytes.
  explicit OrgKey(Bytes material);

  const Bytes& material() const { return material_; }

 private:
  Bytes material_;
};

// Reads raw key bytes from a file. `spec` is either a path, or "env:NAME"
// where the environment variable NAME holds a path. Raw keys never travel
// through the environment itself.
OrgKey load_key_file(const std::string& spec);

constexpr std::size_t kHmacTokenLen = 16;   // HMAC-SHA256 truncated
constexpr std::size_t kEddsaTokenLen = 68;  // 4-byte file uuid + 64-byte sig
constexpr std::size_t kHmacFramedLen = kHmacTokenLen + 2;
constexpr std::size_t kEddsaFramedLen = kEddsaTokenLen + 2;

// HMAC-SHA256(key, file_id), truncated to the first 16 bytes.
// Throws std::invalid_argument on empty file_id.
Bytes derive_hmac_token(const OrgKey& key, const std::string& file_id);

// file_uuid = SHA-256(file_id)[0..4); token = file_uuid || Ed25519 signature
// of file_uuid under the keypair seeded with SHA-256(key material).
Bytes derive_eddsa_token(const OrgKey& key, const std::string& file_id);

// Ed25519 public key (32 bytes) for registry distribution.
Bytes eddsa_public_key(const OrgKey& key);

struct ScanIdentity {
  Scheme scheme;
  std::string token_digest;  // hex of the matched token bytes
  std::string org_id;        // EdDSA only
  std::string file_uuid;     // EdDSA only, hex of the 4-byte uuid
};

}  // namespace stegocanary::tokens
