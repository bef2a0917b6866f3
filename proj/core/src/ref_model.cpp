#include "stegocanary/ref_model.hpp"

#include <sodium.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "stegocanary/bytes.hpp"

namespace stegocanary::codec {

namespace {

constexpr std::string_view kFormatLine = "stegocanary-model 1";

std::uint64_t ctx_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[crypto_hash_sha256_BYTES];
  crypto_hash_sha256(digest, reinterpret_cast<const unsigned char*>(data.data()),
                     data.size());
  return to_hex(digest, sizeof digest);
}

bool model_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '.';
}

}  // namespace

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::optional<std::string> RefModel::normalize_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (!model_char(c)) return std::nullopt;
    out.push_back(c);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

RefModel RefModel::build_from_corpus(std::string_view corpus_text) {
  const auto raw_words = split_words(corpus_text);
  if (raw_words.size() < kMinCorpusWords)
    throw std::invalid_argument("model corpus must have >= 10000 words");

  std::vector<std::string> stream;
  stream.reserve(raw_words.size());
  std::map<std::string, std::uint64_t> freq;
  for (const auto& w : raw_words) {
    if (auto norm = normalize_word(w)) {
      ++freq[*norm];
      stream.push_back(std::move(*norm));
    }
  }

  // Vocabulary: the kMaxVocab most frequent tokens, ties broken
  // lexicographically, then id order is lexicographic for stable cumulative
  // partitions.
  std::vector<std::pair<std::string, std::uint64_t>> by_freq(freq.begin(),
                                                             freq.end());
  std::stable_sort(by_freq.begin(), by_freq.end(),
                   [](const auto& x, const auto& y) {
                     if (x.second != y.second) return x.second > y.second;
                     return x.first < y.first;
                   });
  if (by_freq.size() > kMaxVocab) by_freq.resize(kMaxVocab);

  RefModel model;
  model.vocab_.reserve(by_freq.size());
  for (auto& [token, n] : by_freq) model.vocab_.push_back(token);
  std::sort(model.vocab_.begin(), model.vocab_.end());
  for (std::uint32_t i = 0; i < model.vocab_.size(); ++i)
    model.vocab_index_[model.vocab_[i]] = i;

  // Sliding order-2 windows over the in-vocabulary token stream.
  std::vector<std::uint32_t> ids;
  ids.reserve(stream.size());
  for (const auto& w : stream) {
    const auto it = model.vocab_index_.find(w);
    if (it != model.vocab_index_.end()) ids.push_back(it->second);
  }
  std::map<std::uint64_t, std::map<std::uint32_t, std::uint32_t>> counts;
  for (std::size_t i = 0; i + 2 < ids.size(); ++i)
    ++counts[ctx_key(ids[i], ids[i + 1])][ids[i + 2]];

  for (const auto& [key, dist] : counts) {
    ContextRec rec;
    rec.entries.reserve(dist.size());
    std::uint64_t prefix = 0;
    for (const auto& [id, count] : dist) {
      rec.entries.push_back({id, count, prefix});
      prefix += count;
    }
    rec.raw_total = prefix;
    model.contexts_.emplace(key, std::move(rec));
  }
  model.compute_hash();
  return model;
}

std::optional<std::uint32_t> RefModel::exact_token_id(
    const std::string& token) const {
  const auto it = vocab_index_.find(token);
  if (it == vocab_index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t RefModel::map_token(const std::string& token) const {
  const auto it = vocab_index_.find(token);
  if (it != vocab_index_.end()) return it->second;
  return static_cast<std::uint32_t>(fnv1a64(token) % vocab_.size());
}

RefModel::ContextDist RefModel::context_dist(std::uint32_t a,
                                             std::uint32_t b) const {
  const auto it = contexts_.find(ctx_key(a, b));
  if (it == contexts_.end()) return {};
  return {it->second.entries.data(), it->second.entries.size(),
          it->second.raw_total};
}

namespace {

std::string serialize_body(const std::vector<std::string>& vocab,
                           const std::map<std::uint64_t,
                                          std::vector<RefModel::IdCount>>& ctxs) {
  std::ostringstream os;
  os << kFormatLine << '\n';
  os << "vocab " << vocab.size() << '\n';
  for (const auto& t : vocab) os << t << '\n';
  std::size_t rows = 0;
  for (const auto& [key, entries] : ctxs) rows += entries.size();
  os << "contexts " << rows << '\n';
  for (const auto& [key, entries] : ctxs) {
    const auto a = static_cast<std::uint32_t>(key >> 32);
    const auto b = static_cast<std::uint32_t>(key & 0xFFFFFFFF);
    for (const auto& e : entries)
      os << a << ' ' << b << ' ' << e.id << ' ' << e.count << '\n';
  }
  return std::move(os).str();
}

}  // namespace

void RefModel::compute_hash() {
  std::map<std::uint64_t, std::vector<IdCount>> ordered;
  for (const auto& [key, rec] : contexts_) ordered[key] = rec.entries;
  content_hash_ = sha256_hex(serialize_body(vocab_, ordered));
}

void RefModel::save(const std::string& path) const {
  std::map<std::uint64_t, std::vector<IdCount>> ordered;
  for (const auto& [key, rec] : contexts_) ordered[key] = rec.entries;
  const std::string body = serialize_body(vocab_, ordered);
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model: " + path);
  out << body << "hash " << sha256_hex(body) << '\n';
  if (!out) throw std::runtime_error("model write failed: " + path);
}

RefModel RefModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model: " + path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  const auto hash_pos = content.rfind("hash ");
  if (hash_pos == std::string::npos || hash_pos == 0)
    throw std::runtime_error("model missing content hash: " + path);
  const std::string body = content.substr(0, hash_pos);
  std::string hash_line = content.substr(hash_pos + 5);
  while (!hash_line.empty() &&
         (hash_line.back() == '\n' || hash_line.back() == '\r'))
    hash_line.pop_back();
  if (sha256_hex(body) != hash_line)
    throw std::runtime_error("model content hash mismatch: " + path);

  std::istringstream is(body);
  std::string line;
  if (!std::getline(is, line) || line != kFormatLine)
    throw std::runtime_error("unsupported model format version: " + path);
  std::string word;
  std::size_t vocab_n = 0;
  is >> word >> vocab_n;
  if (word != "vocab" || vocab_n == 0 || vocab_n > kMaxVocab)
    throw std::runtime_error("malformed model vocab header: " + path);
  RefModel model;
  model.vocab_.reserve(vocab_n);
  std::getline(is, line);
  for (std::size_t i = 0; i < vocab_n; ++i) {
    if (!std::getline(is, line) || line.empty())
      throw std::runtime_error("truncated model vocab: " + path);
    model.vocab_.push_back(line);
  }
  for (std::uint32_t i = 0; i < model.vocab_.size(); ++i)
    model.vocab_index_[model.vocab_[i]] = i;
  std::size_t rows = 0;
  is >> word >> rows;
  if (word != "contexts")
    throw std::runtime_error("malformed model context header: " + path);
  std::map<std::uint64_t, std::map<std::uint32_t, std::uint32_t>> counts;
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint32_t a, b, w_id, c;
    if (!(is >> a >> b >> w_id >> c) || a >= vocab_n || b >= vocab_n ||
        w_id >= vocab_n || c == 0)
      throw std::runtime_error("malformed model context row: " + path);
    counts[ctx_key(a, b)][w_id] = c;
  }
  for (const auto& [key, dist] : counts) {
    ContextRec rec;
    std::uint64_t prefix = 0;
    for (const auto& [id, count] : dist) {
      rec.entries.push_back({id, count, prefix});
      prefix += count;
    }
    rec.raw_total = prefix;
    model.contexts_.emplace(key, std::move(rec));
  }
  model.content_hash_ = hash_line;
  return model;
}

}  // namespace stegocanary::codec
