#include "stegocanary/tokens.hpp"

#include <sodium.h>

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

namespace stegocanary::tokens {

namespace {

void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium init failed");
  });
}

std::array<std::uint8_t, crypto_hash_sha256_BYTES> sha256(const void* data,
                                                          std::size_t len) {
  std::array<std::uint8_t, crypto_hash_sha256_BYTES> digest{};
  crypto_hash_sha256(digest.data(), static_cast<const unsigned char*>(data), len);
  return digest;
}

}  // namespace

const char* scheme_name(Scheme s) {
  return s == Scheme::kHmac ? "hmac" : "eddsa";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
  if (name == "hmac") return Scheme::kHmac;
  if (name == "eddsa") return Scheme::kEddsa;
  return std::nullopt;
}

OrgKey::OrgKey(Bytes material) : material_(std::move(material)) {
  if (material_.size() < 16)
    throw std::invalid_argument("OrgKey: key material must be >= 16 bytes");
}

OrgKey load_key_file(const std::string& spec) {
  std::string path = spec;
  if (spec.rfind("env:", 0) == 0) {
    const char* v = std::getenv(spec.c_str() + 4);
    if (!v || !*v)
      throw std::runtime_error("key env var not set: " + spec.substr(4));
    path = v;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open key file: " + path);
  Bytes material((std::istreambuf_iterator<char>(in)),
                 std::istreambuf_iterator<char>());
  // Tolerate a single trailing newline from editors.
  if (!material.empty() && material.back() == '\n') material.pop_back();
  return OrgKey(std::move(material));
}

Bytes derive_hmac_token(const OrgKey& key, const std::string& file_id) {
  if (file_id.empty())
    throw std::invalid_argument("derive_hmac_token: empty file_id");
  ensure_sodium();
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key.material().data(), key.material().size());
  crypto_auth_hmacsha256_update(
      &st, reinterpret_cast<const unsigned char*>(file_id.data()),
      file_id.size());
  unsigned char mac[crypto_auth_hmacsha256_BYTES];
  crypto_auth_hmacsha256_final(&st, mac);
  return Bytes(mac, mac + kHmacTokenLen);
}

namespace {

void eddsa_keypair(const OrgKey& key, unsigned char pk[crypto_sign_PUBLICKEYBYTES],
                   unsigned char sk[crypto_sign_SECRETKEYBYTES]) {
  ensure_sodium();
  const auto seed = sha256(key.material().data(), key.material().size());
  static_assert(crypto_sign_SEEDBYTES == crypto_hash_sha256_BYTES);
  crypto_sign_seed_keypair(pk, sk, seed.data());
}

}  // namespace

Bytes derive_eddsa_token(const OrgKey& key, const std::string& file_id) {
  if (file_id.empty())
    throw std::invalid_argument("derive_eddsa_token: empty file_id");
  unsigned char pk[crypto_sign_PUBLICKEYBYTES];
  unsigned char sk[crypto_sign_SECRETKEYBYTES];
  eddsa_keypair(key, pk, sk);
  const auto uuid_src = sha256(file_id.data(), file_id.size());
  Bytes token(uuid_src.begin(), uuid_src.begin() + 4);
  unsigned char sig[crypto_sign_BYTES];
  crypto_sign_detached(sig, nullptr, token.data(), token.size(), sk);
  token.insert(token.end(), sig, sig + crypto_sign_BYTES);
  return token;  // 4 + 64 = 68 bytes
}

Bytes eddsa_public_key(const OrgKey& key) {
  unsigned char pk[crypto_sign_PUBLICKEYBYTES];
  unsigned char sk[crypto_sign_SECRETKEYBYTES];
  eddsa_keypair(key, pk, sk);
  return Bytes(pk, pk + crypto_sign_PUBLICKEYBYTES);
}

}  // namespace stegocanary::tokens
