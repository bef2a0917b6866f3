#include <doctest.h>

#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "stegocanary/scanner.hpp"
#include "stegocanary/stack.hpp"
#include "stegocanary/symbolic.hpp"
#include "stegocanary/transport.hpp"

using namespace stegocanary;
using namespace stegocanary::scan;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::shared_ptr<const codec::RefModel> bundled_model() {
  static const auto model =
      std::make_shared<const codec::RefModel>(codec::RefModel::build_from_corpus(
          read_file(std::string(STEGOCANARY_DATA_DIR) + "/model_corpus.txt")));
  return model;
}

std::string corpus_doc() {
  return read_file(std::string(STEGOCANARY_DATA_DIR) +
                   "/corpus/mill_leat.txt");
}

struct Fixture {
  tokens::OrgKey key{Bytes(32, 0x5F)};
  Bytes token = tokens::derive_hmac_token(key, "corpus/doc");
  std::shared_ptr<tokens::TokenRegistry> registry =
      std::make_shared<tokens::TokenRegistry>();

  Fixture() {
    tokens::TokenRegistry::HmacEntry e{};
    std::copy(token.begin(), token.end(), e.begin());
    registry->add_hmac_token(e);
    registry->add_eddsa_key("org-fixture", tokens::eddsa_public_key(key));
    registry->seal();
  }

  ScanEngine engine(ScanPolicy policy = {}, bool with_model = false) const {
    return ScanEngine(registry, policy,
                      with_model ? bundled_model() : nullptr);
  }
};

}  // namespace

TEST_CASE("region extraction") {
  ScanPolicy p;
  CHECK(extract_regions("abc", p) == std::vector<std::string>{"abc"});

  p.region_open = "<<";
  p.region_close = ">>";
  CHECK(extract_regions("x <<one>> y <<two>> z", p) ==
        std::vector<std::string>{"one", "two"});
  // Configured but absent: whole text. Unclosed region: ignored.
  CHECK(extract_regions("no delimiters here", p) ==
        std::vector<std::string>{"no delimiters here"});
  CHECK(extract_regions("a <<open only", p) ==
        std::vector<std::string>{"a <<open only"});
  CHECK(extract_regions("<<a>> tail <<unclosed", p) ==
        std::vector<std::string>{"a"});
}

TEST_CASE("engine construction requires a registry") {
  CHECK_THROWS_AS(ScanEngine(nullptr, {}), std::invalid_argument);
}

TEST_CASE("single-layer marks verify with the token identity") {
  const Fixture fx;
  const std::string cover = corpus_doc();
  const auto marked = codec::zw_encode(cover, fx.token);
  REQUIRE(marked);

  const auto verdict = fx.engine().scan(*marked);
  CHECK(verdict.matched);
  CHECK(verdict.matched_layer == "zw");
  REQUIRE(verdict.identity);
  CHECK(verdict.identity->token_digest == to_hex(fx.token));
  CHECK(verdict.identity->scheme == tokens::Scheme::kHmac);
  REQUIRE(!verdict.layers.empty());
  for (const auto& l : verdict.layers) CHECK(l.depth == 1);
}

TEST_CASE("eddsa identities carry the org and file uuid") {
  const Fixture fx;
  const Bytes token = tokens::derive_eddsa_token(fx.key, "corpus/doc");
  const auto marked = codec::zw_encode(corpus_doc(), token);
  REQUIRE(marked);

  ScanPolicy p;
  p.scheme = tokens::Scheme::kEddsa;
  const auto verdict = fx.engine(p).scan(*marked);
  CHECK(verdict.matched);
  REQUIRE(verdict.identity);
  CHECK(verdict.identity->org_id == "org-fixture");
  CHECK(verdict.identity->file_uuid ==
        to_hex(Bytes(token.begin(), token.begin() + 4)));
}

TEST_CASE("unmarked text produces no match and no identity") {
  const Fixture fx;
  const auto verdict = fx.engine({}, true).scan(corpus_doc());
  CHECK_FALSE(verdict.matched);
  CHECK(verdict.matched_layer.empty());
  CHECK_FALSE(verdict.identity);
  // Plain text never strips differently, so only depth-1 symbolic passes
  // plus the linguistic pass run.
  CHECK(verdict.layers.size() == 4);
}

TEST_CASE("early termination changes work done but not the verdict") {
  const Fixture fx;
  const std::string cover = corpus_doc();
  const auto marked = codec::hg_encode(cover, fx.token);
  REQUIRE(marked);

  ScanPolicy eager;
  eager.early_terminate = true;
  ScanPolicy full;
  full.early_terminate = false;

  const auto fast = fx.engine(eager).scan(*marked);
  const auto deep = fx.engine(full).scan(*marked);
  CHECK(fast.matched);
  CHECK(deep.matched);
  CHECK(fast.matched_layer == deep.matched_layer);
  REQUIRE(fast.identity);
  REQUIRE(deep.identity);
  CHECK(fast.identity->token_digest == deep.identity->token_digest);
  // The eager engine stops at the hg hit; the full engine keeps going.
  CHECK(fast.layers.back().layer == "hg");
  CHECK(fast.layers.back().verified);
  CHECK(deep.layers.size() >= fast.layers.size());
}

TEST_CASE("symbolic surfaces are mutually transparent at depth one") {
  const Fixture fx;
  // Each codec writes a disjoint character surface, so layering one mark
  // over another hides nothing: both decode at depth 1 without stripping.
  const auto inner = codec::zw_encode(corpus_doc(), fx.token);
  REQUIRE(inner);
  const auto outer = codec::hg_encode(*inner, fx.token);
  REQUIRE(outer);

  ScanPolicy shallow;
  shallow.max_strip_depth = 1;
  shallow.early_terminate = false;
  const auto verdict = fx.engine(shallow).scan(*outer);
  CHECK(verdict.matched);
  REQUIRE(verdict.layers.size() == 3);
  CHECK_FALSE(verdict.layers[0].verified);  // no ws mark present
  CHECK(verdict.layers[1].verified);        // zw, beneath hg
  CHECK(verdict.layers[2].verified);        // hg, on top
}

TEST_CASE("strip-and-recurse labels depth and stops at a fixpoint") {
  const Fixture fx;
  codec::StackContext ctx;
  const auto enc = codec::stack_encode(codec::standard_config("M5"), ctx,
                                       fx.token, corpus_doc());
  REQUIRE(enc);

  ScanPolicy p;
  p.max_strip_depth = 3;
  p.early_terminate = false;
  const auto verdict = fx.engine(p).scan(enc->text);
  CHECK(verdict.matched);

  // Depth 1 sees all three marks. The strip pass removes them, so depth 2
  // decodes a clean document, and the further strip is a no-op: the loop
  // must stop without a depth-3 round.
  REQUIRE(verdict.layers.size() == 6);
  for (int i = 0; i < 3; ++i) {
    CHECK(verdict.layers[i].depth == 1);
    CHECK(verdict.layers[i].verified);
    CHECK(verdict.layers[i + 3].depth == 2);
    CHECK_FALSE(verdict.layers[i + 3].candidate);
  }

  // Verdict is invariant under the depth knob for these surfaces.
  ScanPolicy d1;
  d1.max_strip_depth = 1;
  const auto quick = fx.engine(d1).scan(enc->text);
  CHECK(quick.matched);
  CHECK(quick.matched_layer == verdict.matched_layer);
}

TEST_CASE("region scoping gates what the scanner sees") {
  const Fixture fx;
  const auto marked = codec::zw_encode(corpus_doc(), fx.token);
  REQUIRE(marked);

  ScanPolicy p;
  p.region_open = "[[";
  p.region_close = "]]";
  const std::string inside = "prefix [[" + *marked + "]] suffix";
  const std::string outside = *marked + " [[clean region]] tail";
  CHECK(fx.engine(p).scan(inside).matched);
  CHECK_FALSE(fx.engine(p).scan(outside).matched);
}

TEST_CASE("generated-stack text is caught through the linguistic layer") {
  const Fixture fx;
  codec::StackContext ctx;
  ctx.model = bundled_model().get();
  const auto enc =
      codec::stack_encode(codec::standard_config("M6"), ctx, fx.token);
  REQUIRE(enc);

  // Tier-3 wipes both symbolic layers; only the linguistic layer survives.
  const auto chain = transport::chain_from_name("Tier-3");
  REQUIRE(chain);
  const std::string transported = transport::apply_chain(*chain, enc->text);

  const auto verdict = fx.engine({}, true).scan(transported);
  CHECK(verdict.matched);
  CHECK(verdict.matched_layer == "lm");
  REQUIRE(verdict.identity);
  CHECK(verdict.identity->token_digest == to_hex(fx.token));
}

TEST_CASE("the scanner never throws on malformed input") {
  const Fixture fx;
  const auto engine = fx.engine({}, true);
  std::mt19937_64 rng(0xBAD);
  for (int iter = 0; iter < 500; ++iter) {
    std::string junk(rng() % 300, '\0');
    for (auto& c : junk) c = static_cast<char>(rng());
    ScanVerdict v;
    CHECK_NOTHROW(v = engine.scan(junk));
    CHECK_FALSE(v.matched);
  }
}
