#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stegocanary/bytes.hpp"
#include "stegocanary/linguistic.hpp"
#include "stegocanary/ref_model.hpp"

namespace stegocanary::codec {

enum class Layer { kWs, kZw, kHg, kLm };

const char* layer_name(Layer layer);
std::optional<Layer> layer_from_name(std::string_view name);

enum class StackMode { kNone, kA, kB };

struct StackConfig {
  std::string name;
  std::vector<Layer> layers;  // encode order, outermost last
  StackMode mode = StackMode::kNone;
};

// M1=[ws] M2=[zw] M3=[hg] M4=[lm] M5=[ws,zw,hg] (mode A)
// M6=[lm,zw,hg] (mode B) M7=[lm,ws,zw,hg]. Throws on unknown name.
StackConfig standard_config(std::string_view name);

// "M3", or a comma-separated layer list such as "lm,zw,hg".
std::optional<StackConfig> config_from_spec(std::string_view spec);

// Returns human-readable warnings (ws layered above lm risks surface loss
// under ASCII-only transport). Throws std::invalid_argument for layer lists
// that cannot work at all: empty, duplicate layers, or lm not first.
std::vector<std::string> validate_composition(const StackConfig& config);

struct StackContext {
  const RefModel* model = nullptr;  // required when lm is present
  LmParams lm;
};

struct StackEncodeResult {
  std::string text;
  // Generated cover before symbolic layers; empty for cover-based configs.
  std::string lm_cover;
  std::vector<std::string> warnings;
};

// Applies layers in order, each embedding frame(payload) in its own surface.
// When lm is first the cover argument is ignored and text is generated with
// min_cover_chars auto-raised to fit downstream layer capacity plus margin.
// Capacity shortfall at any layer gives nullopt.
std::optional<StackEncodeResult> stack_encode(const StackConfig& config,
                                              const StackContext& ctx,
                                              const Bytes& payload,
                                              std::string_view cover = {});

struct LayerOutcome {
  Layer layer;
  std::optional<Bytes> candidate;
};

struct StackDecodeResult {
  std::vector<LayerOutcome> outcomes;  // decode order = reverse encode order
  std::string restored;                // text after all strip passes
};

StackDecodeResult stack_decode(const StackConfig& config, const StackContext& ctx,
                               std::string_view text);

}  // namespace stegocanary::codec
