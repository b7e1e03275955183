#include <catch_amalgamated.hpp>

#include "cobicat/harness.hpp"
#include "cobicat/serialize.hpp"

using namespace cobicat;

namespace {

template <class T, class Decode>
void round_trip(const T& x, Decode decode) {
  const std::string text = canonical(to_json(x));
  const T back = decode(parse_json_text(text));
  CHECK(back == x);
  CHECK(canonical(to_json(back)) == text);
}

}  // namespace

TEST_CASE("canonical text", "[serialize]") {
  FinSpan s(FinFunction(FinSet(2), FinSet(1), {0, 0}), FinFunction(FinSet(2), FinSet(3), {2, 1}));
  CHECK(canonical(to_json(s)) == R"({"apex":2,"src":1,"srcLeg":[0,0],"tgt":3,"tgtLeg":[2,1]})");
  CHECK(canonical(parse_json_text(R"({ "tgtLeg":[2,1], "srcLeg":[0,0], "tgt":3, "src":1, "apex":2 })")) ==
        canonical(to_json(s)));
  auto n = ResNet::from_edges(2, {{0, 1, Resistance(3, 2)}});
  CHECK(canonical(to_json(n)) == R"({"E":1,"V":2,"r":["3/2"],"s":[0],"t":[1]})");
}

TEST_CASE("round trips", "[serialize]") {
  GenConfig cfg{0, 4, 3, 3, 0};
  Rng rng(case_seed(51, 0));
  for (int k = 0; k < 100; ++k) {
    FinSet a = gen_finset(rng, cfg), b = gen_finset(rng, cfg);
    auto s = gen_span(rng, cfg, a, b);
    round_trip(s, span_from_json);
    round_trip(gen_refinement(rng, cfg, s), spanmap_from_json);
    round_trip(span_to_rel(s), relation_from_json);

    std::size_t m = gen_size(rng, cfg.max_dim), n = gen_size(rng, cfg.max_dim), p = gen_size(rng, cfg.max_dim);
    auto x = gen_matrix(rng, cfg, m, n), y = gen_matrix(rng, cfg, n, p);
    round_trip(x, obmatrix_from_json);
    round_trip(mat_associator(mat_identity<FinSetRig>(p), y, x), mormatrix_from_json);

    FinCat c = gen_fincat(rng), d = gen_fincat(rng);
    round_trip(c, fincat_from_json);
    round_trip(gen_profunctor(rng, c, d), profunctor_from_json);

    ResNet u = gen_network(rng, cfg), v = gen_network(rng, cfg);
    round_trip(u, resnet_from_json);
    round_trip(gen_extension(rng, u), morphism_from_json);
    round_trip(gen_cospan(rng, u, v), cospan_from_json);
  }
}

TEST_CASE("malformed input", "[serialize]") {
  CHECK_THROWS_AS(parse_json_text("{"), parse_error);
  CHECK_THROWS_AS(parse_json_text(""), parse_error);
  auto span = [](const char* text) { return span_from_json(parse_json_text(text)); };
  CHECK_THROWS_AS(span(R"({"src":1,"tgt":1,"apex":1,"srcLeg":[0]})"), parse_error);
  CHECK_THROWS_AS(span(R"({"src":1,"tgt":1,"apex":1,"srcLeg":[0],"tgtLeg":[1]})"), parse_error);
  CHECK_THROWS_AS(span(R"({"src":-1,"tgt":1,"apex":0,"srcLeg":[],"tgtLeg":[]})"), parse_error);
  CHECK_THROWS_AS(span(R"({"src":1,"tgt":1,"apex":2,"srcLeg":[0],"tgtLeg":[0,0]})"), parse_error);
  CHECK_THROWS_AS(span(R"({"src":1,"tgt":1,"apex":1,"srcLeg":["0"],"tgtLeg":[0]})"), parse_error);
  CHECK_THROWS_AS(span("[1,2]"), parse_error);

  // two apex elements over the same pair
  CHECK_THROWS_AS(relation_from_json(parse_json_text(R"({"src":1,"tgt":1,"apex":2,"srcLeg":[0,0],"tgtLeg":[0,0]})")),
                  parse_error);

  CHECK_THROWS_AS(obmatrix_from_json(parse_json_text(R"({"src":2,"tgt":1,"entries":[[{"size":1}]]})")), parse_error);
  CHECK_THROWS_AS(resnet_from_json(parse_json_text(R"({"V":2,"E":1,"s":[0],"t":[1],"r":["0"]})")), parse_error);
  CHECK_THROWS_AS(resnet_from_json(parse_json_text(R"({"V":2,"E":1,"s":[0],"t":[1],"r":[1]})")), parse_error);
  CHECK_THROWS_AS(resnet_from_json(parse_json_text(R"({"V":2,"E":1,"s":[0],"t":[1],"r":["a/b"]})")), parse_error);

  // a monoid table without a two-sided unit
  CHECK_THROWS_AS(fincat_from_json(parse_json_text(
                      R"({"objects":1,"src":[0,0],"tgt":[0,0],"id":[0],"comp":[[0,0,0],[0,1,0],[1,0,1],[1,1,1]]})")),
                  parse_error);

  // a morphism that does not preserve the resistance
  auto a = to_json(ResNet::from_edges(2, {{0, 1, Resistance(1)}}));
  auto b = to_json(ResNet::from_edges(2, {{0, 1, Resistance(2)}}));
  CHECK_THROWS_AS(morphism_from_json({{"dom", a}, {"cod", b}, {"eps", {0}}, {"ups", {0, 1}}}), parse_error);
}
