#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stegocanary::codec {

// Deterministic order-2 word model with add-one smoothing. The vocabulary
// holds at most 4096 lowercase ASCII tokens over [a-z0-9.]; every token is
// byte-stable under the modeled transport transforms short of punctuation
// stripping, which is exactly the failure mode the linguistic carrier is
// supposed to have. Identical corpus bytes give an identical model.
class RefModel {
 public:
  static constexpr std::size_t kMaxVocab = 4096;
  static constexpr std::size_t kMinCorpusWords = 10000;

  // Throws std::invalid_argument when the corpus has fewer than
  // kMinCorpusWords whitespace-separated words.
  static RefModel build_from_corpus(std::string_view corpus_text);

  // Line-based serialization with a leading format-version line and a
  // trailing SHA-256 content hash. load() refuses unknown versions and
  // corrupted files with std::runtime_error.
  void save(const std::string& path) const;
  static RefModel load(const std::string& path);

  std::uint32_t vocab_size() const { return static_cast<std::uint32_t>(vocab_.size()); }
  const std::string& token_text(std::uint32_t id) const { return vocab_[id]; }
  std::optional<std::uint32_t> exact_token_id(const std::string& token) const;

  // Total mapping: exact vocabulary match, otherwise a deterministic
  // FNV-1a-hash fallback id. Mirrors a subword tokenizer in that arbitrary
  // text always maps onto the model's alphabet.
  std::uint32_t map_token(const std::string& token) const;

  // Lowercases ASCII and accepts only [a-z0-9.]+; nullopt for anything else.
  static std::optional<std::string> normalize_word(std::string_view word);

  struct IdCount {
    std::uint32_t id;
    std::uint32_t count;       // raw count, smoothing adds 1 on top
    std::uint64_t raw_prefix;  // sum of raw counts of earlier entries
  };

  struct ContextDist {
    const IdCount* entries = nullptr;  // sorted by id ascending
    std::size_t n = 0;
    std::uint64_t raw_total = 0;  // smoothed total = raw_total + vocab_size
  };

  // Distribution after context (a, b); empty entries mean uniform.
  ContextDist context_dist(std::uint32_t a, std::uint32_t b) const;

  // Hex SHA-256 over the serialized table; stable identity for a model.
  const std::string& content_hash() const { return content_hash_; }

 private:
  void index_contexts();
  void compute_hash();

  std::vector<std::string> vocab_;  // lexicographically sorted
  std::unordered_map<std::string, std::uint32_t> vocab_index_;
  struct ContextRec {
    std::vector<IdCount> entries;
    std::uint64_t raw_total = 0;
  };
  std::unordered_map<std::uint64_t, ContextRec> contexts_;
  std::string content_hash_;
};

// Splits on ASCII whitespace. Used by both corpus ingestion and decode.
std::vector<std::string> split_words(std::string_view text);

}  // namespace stegocanary::codec
