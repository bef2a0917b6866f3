#include <doctest.h>

#include <openssl/hmac.h>
#include <openssl/sha.h>
#include <sodium.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "stegocanary/framing.hpp"
#include "stegocanary/registry.hpp"
#include "stegocanary/tokens.hpp"

using namespace stegocanary;

namespace {

// Independent reference: OpenSSL one-shot HMAC-SHA256, truncated to 16.
Bytes openssl_hmac16(const Bytes& key, const std::string& msg) {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int out_len = 0;
  HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
       reinterpret_cast<const unsigned char*>(msg.data()), msg.size(), out,
       &out_len);
  REQUIRE(out_len == 32);
  return Bytes(out, out + 16);
}

Bytes openssl_sha256(const std::string& msg) {
  unsigned char out[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(msg.data()), msg.size(), out);
  return Bytes(out, out + SHA256_DIGEST_LENGTH);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("frame prefixes the payload with a 2-byte big-endian length") {
  CHECK(frame(Bytes{0xAB}) == Bytes{0x00, 0x01, 0xAB});
  const Bytes big(300, 0x7F);
  const Bytes framed = frame(big);
  CHECK(framed.size() == 302);
  CHECK(framed[0] == 0x01);
  CHECK(framed[1] == 0x2C);
  CHECK_THROWS_AS(frame(Bytes{}), std::invalid_argument);
  CHECK_THROWS_AS(frame(Bytes(65536, 0)), std::invalid_argument);
  CHECK(frame(Bytes(65535, 1)).size() == 65537);
}

TEST_CASE("unframe inverts frame and rejects malformed prefixes") {
  const Bytes payload{0xDE, 0xAD, 0xBE, 0xEF};
  auto framed = frame(payload);
  CHECK(unframe(framed) == payload);

  framed.push_back(0x99);  // trailing bytes are ignored
  framed.push_back(0x77);
  CHECK(unframe(framed) == payload);

  CHECK_FALSE(unframe(Bytes{}));
  CHECK_FALSE(unframe(Bytes{0x00}));
  CHECK_FALSE(unframe(Bytes{0x00, 0x00, 0xAB}));        // declared zero
  CHECK_FALSE(unframe(Bytes{0x00, 0x05, 0x01, 0x02}));  // truncated body
  CHECK(unframe(Bytes{0x00, 0x01, 0xFF}) == Bytes{0xFF});
}

TEST_CASE("hmac tokens match an independent OpenSSL HMAC-SHA256 oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Bytes key(16 + rng() % 48);
    for (auto& b : key) b = static_cast<uint8_t>(rng());
    const std::string file_id = "corpus/file_" + std::to_string(rng() % 1000);
    const tokens::OrgKey org_key{key};
    const Bytes token = tokens::derive_hmac_token(org_key, file_id);
    CHECK(token.size() == tokens::kHmacTokenLen);
    CHECK(token == openssl_hmac16(key, file_id));
  }
}

TEST_CASE("hmac tokens are deterministic and id-sensitive") {
  const tokens::OrgKey key{Bytes(32, 0x11)};
  const Bytes a = tokens::derive_hmac_token(key, "a");
  CHECK(a == tokens::derive_hmac_token(key, "a"));
  CHECK(a != tokens::derive_hmac_token(key, "b"));
  const tokens::OrgKey other{Bytes(32, 0x12)};
  CHECK(a != tokens::derive_hmac_token(other, "a"));
  CHECK_THROWS_AS(tokens::derive_hmac_token(key, ""), std::invalid_argument);
}

TEST_CASE("eddsa token = sha256(file_id)[0..4) plus a verifying signature") {
  REQUIRE(sodium_init() >= 0);
  const tokens::OrgKey key{Bytes(32, 0x33)};
  const std::string file_id = "corpus/report.txt";
  const Bytes token = tokens::derive_eddsa_token(key, file_id);
  REQUIRE(token.size() == tokens::kEddsaTokenLen);

  const Bytes uuid_oracle = openssl_sha256(file_id);
  CHECK(Bytes(token.begin(), token.begin() + 4) ==
        Bytes(uuid_oracle.begin(), uuid_oracle.begin() + 4));

  // Counterpart route: verify the detached signature with libsodium.
  const Bytes pk = tokens::eddsa_public_key(key);
  REQUIRE(pk.size() == crypto_sign_PUBLICKEYBYTES);
  CHECK(crypto_sign_verify_detached(token.data() + 4, token.data(), 4,
                                    pk.data()) == 0);

  Bytes bad_sig = token;
  bad_sig[10] ^= 1;
  CHECK(crypto_sign_verify_detached(bad_sig.data() + 4, bad_sig.data(), 4,
                                    pk.data()) != 0);

  CHECK(token == tokens::derive_eddsa_token(key, file_id));
  CHECK(token != tokens::derive_eddsa_token(key, "other"));
}

TEST_CASE("org keys require 16 bytes of material") {
  CHECK_THROWS_AS(tokens::OrgKey{Bytes(15, 1)}, std::invalid_argument);
  CHECK_NOTHROW(tokens::OrgKey{Bytes(16, 1)});
}

TEST_CASE("keys load from a file path or an env var naming a path") {
  const auto path = temp_file("stego_test_key.bin");
  {
    std::ofstream f(path, std::ios::binary);
    const Bytes key(32, 0x5A);
    f.write(reinterpret_cast<const char*>(key.data()), 32);
    f << "\n";  // trailing newline is tolerated
  }
  const tokens::OrgKey direct = tokens::load_key_file(path.string());
  CHECK(tokens::derive_hmac_token(direct, "x") ==
        tokens::derive_hmac_token(tokens::OrgKey{Bytes(32, 0x5A)}, "x"));

  ::setenv("STEGO_TEST_KEY_PATH", path.c_str(), 1);
  const tokens::OrgKey via_env = tokens::load_key_file("env:STEGO_TEST_KEY_PATH");
  CHECK(tokens::derive_hmac_token(via_env, "x") ==
        tokens::derive_hmac_token(direct, "x"));

  CHECK_THROWS(tokens::load_key_file("/nonexistent/key/path"));
  CHECK_THROWS(tokens::load_key_file("env:STEGO_TEST_UNSET_VAR"));
  std::filesystem::remove(path);
}

TEST_CASE("registry verifies exact hmac hits and rejects near misses") {
  const tokens::OrgKey key{Bytes(32, 0x42)};
  const Bytes token = tokens::derive_hmac_token(key, "corpus/a");
  tokens::TokenRegistry reg;
  tokens::TokenRegistry::HmacEntry entry{};
  std::copy(token.begin(), token.end(), entry.begin());
  reg.add_hmac_token(entry);

  CHECK_THROWS_AS(reg.verify(token, tokens::Scheme::kHmac), std::logic_error);
  reg.seal();

  const auto hit = reg.verify(token, tokens::Scheme::kHmac);
  REQUIRE(hit);
  CHECK(hit->scheme == tokens::Scheme::kHmac);
  CHECK(hit->token_digest == to_hex(token));

  Bytes off = token;
  off[15] ^= 0x01;
  CHECK_FALSE(reg.verify(off, tokens::Scheme::kHmac));
  CHECK_FALSE(reg.verify(Bytes(15, 0), tokens::Scheme::kHmac));
  CHECK_FALSE(reg.verify(Bytes(17, 0), tokens::Scheme::kHmac));
  CHECK_FALSE(reg.verify(token, tokens::Scheme::kEddsa));
}

TEST_CASE("registry eddsa verification identifies org and file uuid") {
  const tokens::OrgKey key_a{Bytes(32, 0x01)};
  const tokens::OrgKey key_b{Bytes(32, 0x02)};
  tokens::TokenRegistry reg;
  reg.add_eddsa_key("org-a", tokens::eddsa_public_key(key_a));
  reg.add_eddsa_key("org-b", tokens::eddsa_public_key(key_b));
  reg.seal();

  const Bytes token = tokens::derive_eddsa_token(key_b, "shared/doc");
  const auto hit = reg.verify(token, tokens::Scheme::kEddsa);
  REQUIRE(hit);
  CHECK(hit->org_id == "org-b");
  CHECK(hit->scheme == tokens::Scheme::kEddsa);
  CHECK(hit->file_uuid ==
        to_hex(Bytes(token.begin(), token.begin() + 4)));

  Bytes bad = token;
  bad[0] ^= 1;  // uuid no longer matches the signed message
  CHECK_FALSE(reg.verify(bad, tokens::Scheme::kEddsa));
  bad = token;
  bad[20] ^= 1;  // signature corrupt
  CHECK_FALSE(reg.verify(bad, tokens::Scheme::kEddsa));
  CHECK_FALSE(reg.verify(Bytes(67, 0), tokens::Scheme::kEddsa));
  CHECK_FALSE(reg.verify(Bytes(69, 0), tokens::Scheme::kEddsa));
}

TEST_CASE("registry file format round-trips and rejects malformed records") {
  const tokens::OrgKey key{Bytes(32, 0x42)};
  const Bytes t1 = tokens::derive_hmac_token(key, "a");
  const Bytes t2 = tokens::derive_hmac_token(key, "b");

  std::stringstream in;
  in << "# comment line\n"
     << to_hex(t1) << "\n"
     << "\n"
     << to_hex(t2) << "\n"
     << to_hex(t2) << "\n"  // duplicate collapses
     << "org-a\t" << to_hex(tokens::eddsa_public_key(key)) << "\n";
  auto reg = tokens::TokenRegistry::parse(in, "mem");
  CHECK(reg.hmac_size() == 2);
  CHECK(reg.eddsa_size() == 1);
  CHECK(reg.verify(t1, tokens::Scheme::kHmac));
  CHECK(reg.verify(tokens::derive_eddsa_token(key, "x"),
                   tokens::Scheme::kEddsa));

  const auto path = temp_file("stego_test_registry.txt");
  reg.save(path.string());
  auto reloaded = tokens::TokenRegistry::load(path.string());
  CHECK(reloaded.hmac_size() == 2);
  CHECK(reloaded.verify(t2, tokens::Scheme::kHmac));
  std::filesystem::remove(path);

  std::stringstream bad1("zz not hex\n");
  CHECK_THROWS_AS(tokens::TokenRegistry::parse(bad1, "m"), std::runtime_error);
  std::stringstream bad2("abcd\n");  // wrong token length
  CHECK_THROWS_AS(tokens::TokenRegistry::parse(bad2, "m"), std::runtime_error);
  std::stringstream bad3("org-a\tnothex!\n");
  CHECK_THROWS_AS(tokens::TokenRegistry::parse(bad3, "m"), std::runtime_error);
}

TEST_CASE("random probes against a 10^7-entry registry never match") {
  tokens::TokenRegistry reg;
  std::mt19937_64 rng(99);
  tokens::TokenRegistry::HmacEntry e{};
  for (int i = 0; i < 10'000'000; ++i) {
    for (auto& b : e) b = static_cast<uint8_t>(rng());
    reg.add_hmac_token(e);
  }
  const tokens::OrgKey key{Bytes(32, 0x42)};
  const Bytes planted = tokens::derive_hmac_token(key, "planted");
  tokens::TokenRegistry::HmacEntry pe{};
  std::copy(planted.begin(), planted.end(), pe.begin());
  reg.add_hmac_token(pe);
  reg.seal();

  std::mt19937_64 probe_rng(12345);
  Bytes probe(16);
  for (int i = 0; i < 1000; ++i) {
    for (auto& b : probe) b = static_cast<uint8_t>(probe_rng());
    CHECK_FALSE(reg.verify(probe, tokens::Scheme::kHmac));
  }
  CHECK(reg.verify(planted, tokens::Scheme::kHmac));
}
