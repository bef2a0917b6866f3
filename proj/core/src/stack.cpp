#include "stegocanary/stack.hpp"

#include <algorithm>
#include <stdexcept>

#include "stegocanary/symbolic.hpp"

namespace stegocanary::codec {

namespace {

std::optional<std::string> layer_encode(Layer layer, std::string_view text,
                                        const Bytes& payload) {
  switch (layer) {
    case Layer::kWs:
      return ws_encode(text, payload);
    case Layer::kZw:
      return zw_encode(text, payload);
    case Layer::kHg:
      return hg_encode(text, payload);
    case Layer::kLm:
      break;
  }
  throw std::logic_error("layer_encode: lm handled separately");
}

std::optional<Bytes> layer_decode(Layer layer, std::string_view text) {
  switch (layer) {
    case Layer::kWs:
      return ws_decode(text);
    case Layer::kZw:
      return zw_decode(text);
    case Layer::kHg:
      return hg_decode(text);
    case Layer::kLm:
      break;
  }
  throw std::logic_error("layer_decode: lm handled separately");
}

std::string layer_strip(Layer layer, std::string_view text) {
  switch (layer) {
    case Layer::kWs:
      return ws_strip(text);
    case Layer::kZw:
      return zw_strip(text);
    case Layer::kHg:
      return hg_strip(text);
    case Layer::kLm:
      break;
  }
  return std::string(text);
}

std::size_t layer_capacity(Layer layer, std::string_view text) {
  switch (layer) {
    case Layer::kWs:
      return ws_capacity(text);
    case Layer::kZw:
      return zw_capacity(text);
    case Layer::kHg:
      return hg_capacity(text);
    case Layer::kLm:
      break;
  }
  return ~std::size_t{0};
}

// Conservative cover-size estimate for generated text: spaces run about one
// per six characters and homoglyph-eligible letters about 30%, both below
// observed corpus densities, then the 25% safety margin on top.
std::size_t derive_min_cover(const std::vector<Layer>& layers,
                             std::size_t payload_len) {
  const std::size_t framed = payload_len + 2;
  std::size_t chars = 0;
  for (Layer layer : layers) {
    switch (layer) {
      case Layer::kWs:
        chars = std::max(chars, 4 * framed * 6);
        break;
      case Layer::kZw:
        chars = std::max(chars, 4 * framed + 1);
        break;
      case Layer::kHg:
        chars = std::max(chars, 8 * framed * 10 / 3);
        break;
      case Layer::kLm:
        break;
    }
  }
  return chars + chars / 4;
}

}  // namespace

const char* layer_name(Layer layer) {
  switch (layer) {
    case Layer::kWs:
      return "ws";
    case Layer::kZw:
      return "zw";
    case Layer::kHg:
      return "hg";
    case Layer::kLm:
      return "lm";
  }
  return "?";
}

std::optional<Layer> layer_from_name(std::string_view name) {
  if (name == "ws") return Layer::kWs;
  if (name == "zw") return Layer::kZw;
  if (name == "hg") return Layer::kHg;
  if (name == "lm") return Layer::kLm;
  return std::nullopt;
}

StackConfig standard_config(std::string_view name) {
  using enum Layer;
  if (name == "M1") return {"M1", {kWs}, StackMode::kNone};
  if (name == "M2") return {"M2", {kZw}, StackMode::kNone};
  if (name == "M3") return {"M3", {kHg}, StackMode::kNone};
  if (name == "M4") return {"M4", {kLm}, StackMode::kB};
  if (name == "M5") return {"M5", {kWs, kZw, kHg}, StackMode::kA};
  if (name == "M6") return {"M6", {kLm, kZw, kHg}, StackMode::kB};
  if (name == "M7") return {"M7", {kLm, kWs, kZw, kHg}, StackMode::kB};
  throw std::invalid_argument("unknown stack config: " + std::string(name));
}

std::optional<StackConfig> config_from_spec(std::string_view spec) {
  if (spec.size() == 2 && spec[0] == 'M' && spec[1] >= '1' && spec[1] <= '7')
    return standard_config(spec);
  StackConfig config;
  config.name = "custom";
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const auto part =
        spec.substr(start, comma == std::string_view::npos ? spec.size() - start
                                                           : comma - start);
    const auto layer = layer_from_name(part);
    if (!layer) return std::nullopt;
    config.layers.push_back(*layer);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (config.layers.empty()) return std::nullopt;
  if (config.layers.front() == Layer::kLm) config.mode = StackMode::kB;
  return config;
}

std::vector<std::string> validate_composition(const StackConfig& config) {
  if (config.layers.empty())
    throw std::invalid_argument("stack has no layers");
  for (std::size_t i = 0; i < config.layers.size(); ++i)
    for (std::size_t j = i + 1; j < config.layers.size(); ++j)
      if (config.layers[i] == config.layers[j])
        throw std::invalid_argument("duplicate layer in stack");
  const auto lm_at = std::find(config.layers.begin(), config.layers.end(),
                               Layer::kLm);
  if (lm_at != config.layers.end() && lm_at != config.layers.begin())
    throw std::invalid_argument(
        "lm generates its cover and must be the first layer");

  std::vector<std::string> warnings;
  if (lm_at != config.layers.end() &&
      std::find(config.layers.begin(), config.layers.end(), Layer::kWs) !=
          config.layers.end()) {
    warnings.push_back(
        "ws layered above lm: ASCII-only transport deletes the space variants "
        "carrying lm word boundaries, so the lm layer will not survive it");
  }
  return warnings;
}

std::optional<StackEncodeResult> stack_encode(const StackConfig& config,
                                              const StackContext& ctx,
                                              const Bytes& payload,
                                              std::string_view cover) {
  StackEncodeResult result;
  result.warnings = validate_composition(config);

  std::string text;
  std::size_t first_symbolic = 0;
  if (config.layers.front() == Layer::kLm) {
    if (!ctx.model) throw std::invalid_argument("lm layer requires a model");
    LmParams params = ctx.lm;
    params.min_cover_chars = std::max(
        params.min_cover_chars, derive_min_cover(config.layers, payload.size()));
    // The density estimate can undershoot on a particular generation, so
    // grow the cover and retry while any downstream layer is short.
    for (int attempt = 0;; ++attempt) {
      auto generated = lm_encode(*ctx.model, payload, params);
      if (!generated) return std::nullopt;
      bool fits = true;
      for (std::size_t i = 1; i < config.layers.size() && fits; ++i)
        fits = layer_capacity(config.layers[i], *generated) >= payload.size();
      if (fits) {
        text = std::move(*generated);
        break;
      }
      if (attempt == 5) return std::nullopt;
      params.min_cover_chars += params.min_cover_chars / 4 + 1;
    }
    result.lm_cover = text;
    first_symbolic = 1;
  } else {
    if (cover.empty() && config.mode == StackMode::kA)
      throw std::invalid_argument("mode A requires a cover text");
    text = std::string(cover);
  }

  for (std::size_t i = first_symbolic; i < config.layers.size(); ++i) {
    if (layer_capacity(config.layers[i], text) < payload.size())
      return std::nullopt;
    auto encoded = layer_encode(config.layers[i], text, payload);
    if (!encoded) return std::nullopt;
    text = std::move(*encoded);
  }
  result.text = std::move(text);
  return result;
}

StackDecodeResult stack_decode(const StackConfig& config, const StackContext& ctx,
                               std::string_view text) {
  StackDecodeResult result;
  std::string cur(text);
  for (auto it = config.layers.rbegin(); it != config.layers.rend(); ++it) {
    if (*it == Layer::kLm) {
      if (!ctx.model) throw std::invalid_argument("lm layer requires a model");
      result.outcomes.push_back({Layer::kLm, lm_decode(*ctx.model, cur, ctx.lm)});
      continue;  // lm has no strip pass; cur is already the stripped cover
    }
    result.outcomes.push_back({*it, layer_decode(*it, cur)});
    cur = layer_strip(*it, cur);
  }
  result.restored = std::move(cur);
  return result;
}

}  // namespace stegocanary::codec
