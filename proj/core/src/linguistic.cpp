#include "stegocanary/linguistic.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "stegocanary/framing.hpp"
#include "stegocanary/symbolic.hpp"
#include "stegocanary/unicode_tables.hpp"
#include "stegocanary/utf8.hpp"

namespace stegocanary::codec {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTopBit = 1ULL << 63;

// Message bits, most significant bit of each byte first, then an infinite
// zero tail so the interval cursor can always be refilled.
struct BitSource {
  const Bytes& data;
  std::size_t pos = 0;

  int next() {
    int bit = 0;
    if (pos < data.size() * 8) bit = (data[pos >> 3] >> (7 - (pos & 7))) & 1;
    ++pos;
    return bit;
  }
};

struct TokenSlot {
  std::uint64_t cum_before;
  std::uint64_t count;
};

// Smoothed distribution for one step, shared verbatim by encoder and decoder:
// counts are raw context counts plus one, cumulative in vocabulary id order.
// When the interval is too narrow for every token to get at least one unit,
// the distribution is truncated to the top-K tokens by (count desc, id asc)
// and K adapts downward until each kept slot is at least one unit wide.
class StepDist {
 public:
  StepDist(const RefModel& model, std::uint32_t a, std::uint32_t b,
           std::uint64_t span_minus_1, std::uint32_t min_k)
      : model_(model), dist_(model.context_dist(a, b)) {
    const std::uint64_t v = model.vocab_size();
    full_total_ = v + dist_.raw_total;
    const u128 span = static_cast<u128>(span_minus_1) + 1;
    full_ = span >= full_total_;
    if (!full_) truncate(span, min_k);
  }

  std::uint64_t total() const { return full_ ? full_total_ : trunc_total_; }

  // Token owning scaled target t in [0, total); always defined in full mode.
  std::uint32_t select(std::uint64_t t) const {
    if (!full_) {
      std::size_t lo = 0, hi = kept_.size();
      while (lo + 1 < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (kept_[mid].second.cum_before <= t)
          lo = mid;
        else
          hi = mid;
      }
      return kept_[lo].first;
    }
    // Sparse entries split id space into runs of count-1 tokens between
    // them; binary search entry starts S_k = id_k + raw_prefix_k.
    const RefModel::IdCount* e = dist_.entries;
    std::size_t lo = 0, hi = dist_.n;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (e[mid].id + e[mid].raw_prefix <= t)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == 0) return static_cast<std::uint32_t>(t);
    const auto& k = e[lo - 1];
    if (t < k.id + k.raw_prefix + k.count + 1) return k.id;
    return static_cast<std::uint32_t>(t - k.raw_prefix - k.count);
  }

  // Slot of a given token; nullopt when truncation dropped it.
  std::optional<TokenSlot> slot(std::uint32_t w) const {
    if (!full_) {
      for (const auto& [id, s] : kept_)
        if (id == w) return s;
      return std::nullopt;
    }
    const RefModel::IdCount* e = dist_.entries;
    std::size_t lo = 0, hi = dist_.n;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (e[mid].id < w)
        lo = mid + 1;
      else
        hi = mid;
    }
    const std::uint64_t raw_below =
        lo < dist_.n ? e[lo].raw_prefix : dist_.raw_total;
    const std::uint64_t raw_here =
        (lo < dist_.n && e[lo].id == w) ? e[lo].count : 0;
    return TokenSlot{w + raw_below, raw_here + 1};
  }

 private:
  // Quantized widths over the kept prefix must all be >= 1 unit.
  bool try_k(u128 span,
             const std::vector<std::pair<std::uint32_t, std::uint64_t>>& cand,
             std::size_t k) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) total += cand[i].second;
    std::uint64_t cum = 0, prev_edge = 0;
    std::vector<std::pair<std::uint32_t, TokenSlot>> kept;
    kept.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      kept.push_back({cand[i].first, {cum, cand[i].second}});
      cum += cand[i].second;
      const std::uint64_t edge = static_cast<std::uint64_t>(span * cum / total);
      if (edge <= prev_edge) return false;
      prev_edge = edge;
    }
    trunc_total_ = total;
    kept_ = std::move(kept);
    return true;
  }

  void truncate(u128 span, std::uint32_t min_k) {
    const std::uint32_t v = model_.vocab_size();
    // Materialize smoothed counts and order by (count desc, id asc).
    std::vector<std::pair<std::uint32_t, std::uint64_t>> cand(v);
    for (std::uint32_t i = 0; i < v; ++i) cand[i] = {i, 1};
    for (std::size_t i = 0; i < dist_.n; ++i)
      cand[dist_.entries[i].id].second += dist_.entries[i].count;
    std::stable_sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
      if (x.second != y.second) return x.second > y.second;
      return x.first < y.first;
    });
    // Each kept token needs its own unit, so K never exceeds the span. The
    // scan keeps the largest feasible K; it dips below min_k only when no
    // K >= min_k is representable (K=2 is always feasible at span >= 2).
    const std::size_t start = static_cast<std::size_t>(
        std::min<u128>(span, v));
    const std::size_t floor1 = std::min<std::size_t>(
        start, std::max<std::uint32_t>(min_k, 2));
    for (std::size_t k = start; k >= floor1; --k)
      if (try_k(span, cand, k)) return;
    for (std::size_t k = floor1 - 1; k >= 2; --k)
      if (try_k(span, cand, k)) return;
    throw std::logic_error("no feasible truncation at two tokens");
  }

  const RefModel& model_;
  RefModel::ContextDist dist_;
  bool full_ = true;
  std::uint64_t full_total_ = 0;
  std::uint64_t trunc_total_ = 0;
  // Truncated mode only: kept tokens in cumulative order.
  std::vector<std::pair<std::uint32_t, TokenSlot>> kept_;
};

struct Interval {
  std::uint64_t low = 0;
  std::uint64_t high = ~0ULL;

  std::uint64_t span_minus_1() const { return high - low; }

  void narrow(const TokenSlot& s, std::uint64_t total) {
    const u128 span = static_cast<u128>(span_minus_1()) + 1;
    const std::uint64_t base = low;
    low = base + static_cast<std::uint64_t>(span * s.cum_before / total);
    high = base +
           static_cast<std::uint64_t>(span * (s.cum_before + s.count) / total) -
           1;
  }

  bool agree() const { return ((low ^ high) & kTopBit) == 0; }

  void shift() {
    low <<= 1;
    high = (high << 1) | 1;
  }
};

std::pair<std::uint32_t, std::uint32_t> seed_context(const RefModel& model,
                                                     const std::string& text) {
  std::vector<std::uint32_t> ids;
  for (const auto& w : split_words(text))
    if (auto norm = RefModel::normalize_word(w)) ids.push_back(model.map_token(*norm));
  std::uint32_t a = 0, b = 0;
  if (ids.size() >= 2) {
    a = ids[ids.size() - 2];
    b = ids[ids.size() - 1];
  } else if (ids.size() == 1) {
    b = ids[0];
  }
  return {a, b};
}

}  // namespace

std::size_t default_pad_to_bytes(std::size_t framed_len) {
  if (framed_len <= 32) return framed_len * 2;
  return (framed_len * 13 + 9) / 10;
}

std::optional<std::string> lm_encode(const RefModel& model, const Bytes& payload,
                                     const LmParams& params, CoderTrace* trace) {
  if (model.vocab_size() < 2)
    throw std::invalid_argument("lm_encode: model vocabulary too small");
  const Bytes framed = frame(payload);
  std::size_t pad = params.pad_to_bytes ? params.pad_to_bytes
                                        : default_pad_to_bytes(framed.size());
  if (pad < framed.size())
    throw std::invalid_argument("lm_encode: pad_to_bytes below framed length");
  Bytes message = framed;
  message.resize(pad, 0);
  const std::uint64_t message_bits = static_cast<std::uint64_t>(pad) * 8;

  BitSource bits{message};
  Interval iv;
  std::uint64_t value = 0;
  for (int i = 0; i < 64; ++i) value = (value << 1) | bits.next();
  std::uint64_t shifts = 0;

  auto [a, b] = seed_context(model, params.context_string);
  std::string cover;
  std::size_t n_tokens = 0;
  while (shifts < message_bits || cover.size() < params.min_cover_chars) {
    if (n_tokens >= params.max_tokens) return std::nullopt;
    const StepDist dist(model, a, b, iv.span_minus_1(), params.truncation_min_k);
    const std::uint64_t total = dist.total();
    const u128 span = static_cast<u128>(iv.span_minus_1()) + 1;
    const std::uint64_t t = static_cast<std::uint64_t>(
        ((static_cast<u128>(value - iv.low) + 1) * total - 1) / span);
    const std::uint32_t w = dist.select(t);
    const auto s = dist.slot(w);
    assert(s);
    iv.narrow(*s, total);
    assert(iv.low <= value && value <= iv.high);
    while (iv.agree()) {
      iv.shift();
      value = (value << 1) | static_cast<std::uint64_t>(bits.next());
      ++shifts;
    }
    if (!cover.empty()) cover.push_back(' ');
    cover += model.token_text(w);
    ++n_tokens;
    a = b;
    b = w;
    if (trace) trace->push_back({iv.low, iv.high, shifts});
  }
  return cover;
}

std::optional<Bytes> lm_decode(const RefModel& model, std::string_view text,
                               const LmParams& params, CoderTrace* trace) {
  if (model.vocab_size() < 2)
    throw std::invalid_argument("lm_decode: model vocabulary too small");
  const std::string canon = canonicalize(text);
  const auto words = split_words(canon);
  if (words.empty()) return std::nullopt;

  Interval iv;
  std::uint64_t shifts = 0;
  std::vector<std::uint8_t> out_bits;
  auto [a, b] = seed_context(model, params.context_string);

  std::size_t needed_bits = 0;  // unknown until the 2-byte prefix is out
  for (const auto& word : words) {
    const std::uint32_t w = model.map_token(word);
    const StepDist dist(model, a, b, iv.span_minus_1(), params.truncation_min_k);
    const auto s = dist.slot(w);
    if (!s) return std::nullopt;  // interval truncation excluded this token
    iv.narrow(*s, dist.total());
    while (iv.agree()) {
      out_bits.push_back(static_cast<std::uint8_t>(iv.low >> 63));
      iv.shift();
      ++shifts;
    }
    a = b;
    b = w;
    if (trace) trace->push_back({iv.low, iv.high, shifts});
    if (needed_bits == 0 && out_bits.size() >= 16) {
      std::size_t declared = 0;
      for (int i = 0; i < 16; ++i) declared = declared << 1 | out_bits[i];
      if (declared == 0) return std::nullopt;
      needed_bits = 16 + declared * 8;
    }
    if (needed_bits != 0 && out_bits.size() >= needed_bits) break;
  }

  if (out_bits.size() < 24) return std::nullopt;  // prefix plus at least a byte
  Bytes raw;
  raw.reserve(out_bits.size() / 8);
  for (std::size_t i = 0; i + 8 <= out_bits.size(); i += 8) {
    std::uint8_t v = 0;
    for (int k = 0; k < 8; ++k) v = static_cast<std::uint8_t>(v << 1 | out_bits[i + k]);
    raw.push_back(v);
  }
  const std::size_t declared = (static_cast<std::size_t>(raw[0]) << 8) | raw[1];
  if (declared == 0) return std::nullopt;
  // Streams that end early still yield a candidate; it cannot verify, which
  // is the desired scan-side behavior on unmarked prose.
  const std::size_t end = std::min(raw.size(), declared + 2);
  return Bytes(raw.begin() + 2, raw.begin() + end);
}

std::string canonicalize(std::string_view text) {
  const std::string no_marks = hg_strip(zw_strip(text));
  std::string out;
  out.reserve(no_marks.size());
  bool in_run = false;
  for (char32_t cp : utf8::decode(no_marks)) {
    if (uni::is_white_space(cp)) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out.push_back(' ');
    in_run = false;
    utf8::append(out, cp);
  }
  return out;
}

}  // namespace stegocanary::codec
