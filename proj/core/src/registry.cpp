#include "stegocanary/registry.hpp"

#include <sodium.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stegocanary::tokens {

void TokenRegistry::add_hmac_token(const HmacEntry& token) {
  hmac_.push_back(token);
  sealed_ = false;
}

void TokenRegistry::add_eddsa_key(const std::string& org_id, const Bytes& pk) {
  if (pk.size() != crypto_sign_PUBLICKEYBYTES)
    throw std::invalid_argument("add_eddsa_key: public key must be 32 bytes");
  for (const auto& [id, existing] : eddsa_)
    if (id == org_id && existing == pk) return;
  eddsa_.emplace_back(org_id, pk);
  sealed_ = false;
}

void TokenRegistry::seal() {
  std::sort(hmac_.begin(), hmac_.end());
  hmac_.erase(std::unique(hmac_.begin(), hmac_.end()), hmac_.end());
  sealed_ = true;
}

std::optional<ScanIdentity> TokenRegistry::verify(const Bytes& candidate,
                                                  Scheme scheme) const {
  if (!sealed_) throw std::logic_error("TokenRegistry::verify before seal()");
  if (scheme == Scheme::kHmac) {
    if (candidate.size() != kHmacTokenLen) return std::nullopt;
    HmacEntry key{};
    std::copy(candidate.begin(), candidate.end(), key.begin());
    if (!std::binary_search(hmac_.begin(), hmac_.end(), key)) return std::nullopt;
    ScanIdentity id;
    id.scheme = Scheme::kHmac;
    id.token_digest = to_hex(candidate);
    return id;
  }
  if (candidate.size() != kEddsaTokenLen) return std::nullopt;
  for (const auto& [org, pk] : eddsa_) {
    if (crypto_sign_verify_detached(candidate.data() + 4, candidate.data(), 4,
                                    pk.data()) == 0) {
      ScanIdentity id;
      id.scheme = Scheme::kEddsa;
      id.token_digest = to_hex(candidate);
      id.org_id = org;
      id.file_uuid = to_hex(candidate.data(), 4);
      return id;
    }
  }
  return std::nullopt;
}

TokenRegistry TokenRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry: " + path);
  return parse(in, path);
}

TokenRegistry TokenRegistry::parse(std::istream& in, const std::string& origin) {
  TokenRegistry reg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto bad = [&](const char* what) {
      std::ostringstream os;
      os << origin << ":" << lineno << ": " << what;
      return std::runtime_error(os.str());
    };
    if (const auto tab = line.find('\t'); tab != std::string::npos) {
      const std::string org = line.substr(0, tab);
      const auto pk = from_hex(line.substr(tab + 1));
      if (org.empty() || !pk || pk->size() != crypto_sign_PUBLICKEYBYTES)
        throw bad("malformed public-key record");
      reg.add_eddsa_key(org, *pk);
    } else {
      const auto token = from_hex(line);
      if (!token || token->size() != kHmacTokenLen)
        throw bad("malformed token record");
      HmacEntry e{};
      std::copy(token->begin(), token->end(), e.begin());
      reg.add_hmac_token(e);
    }
  }
  reg.seal();
  return reg;
}

void TokenRegistry::save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write registry: " + path);
  for (const auto& t : hmac_) out << to_hex(t.data(), t.size()) << '\n';
  for (const auto& [org, pk] : eddsa_) out << org << '\t' << to_hex(pk) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace stegocanary::tokens
