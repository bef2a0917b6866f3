#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "stegocanary/stack.hpp"

using namespace stegocanary;
using namespace stegocanary::codec;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const RefModel& bundled_model() {
  static const RefModel model = RefModel::build_from_corpus(
      read_file(std::string(STEGOCANARY_DATA_DIR) + "/model_corpus.txt"));
  return model;
}

std::string corpus_doc() {
  return read_file(std::string(STEGOCANARY_DATA_DIR) +
                   "/corpus/harbor_dredging.txt");
}

std::string layer_list(const StackConfig& c) {
  std::string s;
  for (Layer l : c.layers) {
    if (!s.empty()) s += ',';
    s += layer_name(l);
  }
  return s;
}

}  // namespace

TEST_CASE("standard configurations are pinned") {
  struct Want {
    const char* name;
    const char* layers;
    StackMode mode;
  };
  const std::vector<Want> wants = {
      {"M1", "ws", StackMode::kNone},       {"M2", "zw", StackMode::kNone},
      {"M3", "hg", StackMode::kNone},       {"M4", "lm", StackMode::kB},
      {"M5", "ws,zw,hg", StackMode::kA},    {"M6", "lm,zw,hg", StackMode::kB},
      {"M7", "lm,ws,zw,hg", StackMode::kB},
  };
  for (const auto& w : wants) {
    const StackConfig c = standard_config(w.name);
    CHECK(c.name == w.name);
    CHECK(layer_list(c) == w.layers);
    CHECK(c.mode == w.mode);
  }
  CHECK_THROWS_AS(standard_config("M8"), std::invalid_argument);
}

TEST_CASE("layer names round-trip and custom lists parse") {
  for (Layer l : {Layer::kWs, Layer::kZw, Layer::kHg, Layer::kLm}) {
    const auto back = layer_from_name(layer_name(l));
    REQUIRE(back);
    CHECK(*back == l);
  }
  CHECK_FALSE(layer_from_name("nope"));

  const auto custom = config_from_spec("lm,zw");
  REQUIRE(custom);
  CHECK(layer_list(*custom) == "lm,zw");
  CHECK(custom->mode == StackMode::kB);  // lm first generates its own cover

  const auto sym = config_from_spec("zw,hg");
  REQUIRE(sym);
  CHECK(sym->mode == StackMode::kNone);

  const auto named = config_from_spec("M6");
  REQUIRE(named);
  CHECK(layer_list(*named) == "lm,zw,hg");

  CHECK_FALSE(config_from_spec(""));
  CHECK_FALSE(config_from_spec("lm,??"));
}

TEST_CASE("composition validation rejects impossible layer lists") {
  CHECK_THROWS_AS(validate_composition({"x", {}, StackMode::kNone}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      validate_composition({"x", {Layer::kWs, Layer::kWs}, StackMode::kNone}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      validate_composition({"x", {Layer::kZw, Layer::kLm}, StackMode::kNone}),
      std::invalid_argument);

  // ws above lm is legal but warned about exactly once.
  const auto warned = validate_composition(standard_config("M7"));
  CHECK(warned.size() == 1);
  CHECK(validate_composition(standard_config("M6")).empty());
  CHECK(validate_composition(standard_config("M5")).empty());
}

TEST_CASE("cover-based stack round-trips and restores the cover") {
  StackContext ctx;
  const std::string cover = corpus_doc();
  const Bytes token(16, 0x5C);
  const auto enc = stack_encode(standard_config("M5"), ctx, token, cover);
  REQUIRE(enc);
  CHECK(enc->lm_cover.empty());
  CHECK(enc->text != cover);

  const auto dec = stack_decode(standard_config("M5"), ctx, enc->text);
  REQUIRE(dec.outcomes.size() == 3);
  // Decode order is the reverse of encode order [ws,zw,hg].
  CHECK(dec.outcomes[0].layer == Layer::kHg);
  CHECK(dec.outcomes[1].layer == Layer::kZw);
  CHECK(dec.outcomes[2].layer == Layer::kWs);
  for (const auto& o : dec.outcomes) {
    REQUIRE(o.candidate);
    CHECK(*o.candidate == token);
  }
  CHECK(dec.restored == cover);
}

TEST_CASE("generated stacks carry every layer above the language cover") {
  StackContext ctx;
  ctx.model = &bundled_model();
  const Bytes token(16, 0xA7);

  for (const char* name : {"M6", "M7"}) {
    const auto enc = stack_encode(standard_config(name), ctx, token);
    REQUIRE(enc);
    CHECK_FALSE(enc->lm_cover.empty());

    const auto dec = stack_decode(standard_config(name), ctx, enc->text);
    REQUIRE(dec.outcomes.size() ==
            standard_config(name).layers.size());
    CHECK(dec.outcomes.back().layer == Layer::kLm);
    for (const auto& o : dec.outcomes) {
      REQUIRE(o.candidate);
      CHECK(*o.candidate == token);
    }
    // Stripping the symbolic layers must hand the linguistic decoder its
    // byte-exact generated cover back.
    CHECK(dec.restored == enc->lm_cover);
  }
}

TEST_CASE("mode B ignores any provided cover text") {
  StackContext ctx;
  ctx.model = &bundled_model();
  const Bytes token(16, 0x31);
  const auto with_cover =
      stack_encode(standard_config("M6"), ctx, token, "ignored cover");
  const auto without = stack_encode(standard_config("M6"), ctx, token);
  REQUIRE(with_cover);
  REQUIRE(without);
  CHECK(with_cover->text == without->text);
}

TEST_CASE("impossible requests fail loudly or cleanly") {
  StackContext ctx;
  const Bytes token(16, 0x11);
  // Cover-based mode with no cover is a caller bug.
  CHECK_THROWS_AS(stack_encode(standard_config("M5"), ctx, token),
                  std::invalid_argument);
  // lm without a model is a caller bug.
  CHECK_THROWS_AS(stack_encode(standard_config("M6"), ctx, token),
                  std::invalid_argument);
  // lm not first cannot work: symbolic marks below lm do not survive
  // generation.
  CHECK_THROWS_AS(
      stack_encode({"x", {Layer::kZw, Layer::kLm}, StackMode::kB}, ctx, token),
      std::invalid_argument);
  // A tiny cover is an honest capacity failure, not an error.
  CHECK_FALSE(
      stack_encode(standard_config("M5"), ctx, token, "tiny cover text"));

  StackDecodeResult dec =
      stack_decode(standard_config("M1"), ctx, "unmarked plain text");
  REQUIRE(dec.outcomes.size() == 1);
  CHECK_FALSE(dec.outcomes[0].candidate);
}

TEST_CASE("single-layer stacks match their bare codec") {
  StackContext ctx;
  const std::string cover = corpus_doc();
  const Bytes token(16, 0x99);
  for (const char* name : {"M1", "M2", "M3"}) {
    const auto enc = stack_encode(standard_config(name), ctx, token, cover);
    REQUIRE(enc);
    const auto dec = stack_decode(standard_config(name), ctx, enc->text);
    REQUIRE(dec.outcomes.size() == 1);
    REQUIRE(dec.outcomes[0].candidate);
    CHECK(*dec.outcomes[0].candidate == token);
    CHECK(dec.restored == cover);
  }
}
