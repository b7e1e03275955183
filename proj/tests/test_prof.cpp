#include <catch_amalgamated.hpp>

#include "cobicat/harness.hpp"
#include "oracles.hpp"

using namespace cobicat;
using oracle::Table;

namespace {

/// Coend size by components of the graph whose edges are the pairs
/// (F(g, a)(e), F(a', g)(e)) for every g: a -> a' and e in F(a', a).
std::size_t coend_oracle(const Profunctor& f) {
  const FinCat& c = f.src();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (Index a = 0; a < c.objects(); ++a) {
    offset.push_back(total);
    total += f.value(a, a).size();
  }
  Table lhs, rhs;
  for (Index g = 0; g < c.morphisms(); ++g) {
    const Index a = c.src(g), a2 = c.tgt(g);
    for (Index e = 0; e < f.value(a2, a).size(); ++e) {
      lhs.push_back(offset[a] + f.left(g, a)(e));
      rhs.push_back(offset[a2] + f.right(g, a2)(e));
    }
  }
  return oracle::component_count(total, lhs, rhs);
}

Profunctor constant_point(const FinCat& c) {
  auto same = [](Index, Index, Index) { return Index{0}; };
  return Profunctor::build(c, c, std::vector<FinSet>(c.objects() * c.objects(), FinSet(1)), same, same);
}

std::vector<FinCat> sample_categories() {
  return {terminal_category(),
          discrete_category(3),
          walking_arrow(),
          preorder_category(3, [](Index x, Index y) { return x <= y; }),
          monoid_category(3, [](Index a, Index b) { return (a + b) % 3; }),
          monoid_category(2, [](Index a, Index b) { return a | b; }),
          disjoint_union(walking_arrow(), terminal_category())};
}

}  // namespace

TEST_CASE("finite categories", "[prof]") {
  for (const auto& c : sample_categories()) {
    CHECK(validate_fincat(c));
    CHECK(op(op(c)) == c);
    CHECK(validate_fincat(op(c)));
  }
  auto w = walking_arrow();
  CHECK(w.objects() == 2);
  CHECK(w.morphisms() == 3);
  CHECK(validate_fincat(product(w, w)));

  // a two-element monoid whose unit fails the identity law
  FinCat broken(1, {0, 0}, {0, 0}, {0}, {0, 0, 1, 1});
  CHECK_FALSE(validate_fincat(broken));
}

TEST_CASE("hom profunctors", "[prof]") {
  auto m = monoid_category(4, [](Index a, Index b) { return (a + b) % 4; });
  CHECK(prof_id(m).value(0, 0).size() == 4);
  auto d = prof_id(discrete_category(3));
  for (Index x = 0; x < 3; ++x)
    for (Index y = 0; y < 3; ++y) CHECK(d.value(x, y).size() == (x == y ? 1u : 0u));
  for (const auto& c : sample_categories()) CHECK(validate_profunctor(prof_id(c)));
}

TEST_CASE("coends", "[prof]") {
  // discrete: the disjoint union of the diagonal
  std::vector<FinSet> values{FinSet(2), FinSet(1), FinSet(4), FinSet(3)};
  auto same = [](Index, Index, Index e) { return e; };
  auto disc = Profunctor::build(discrete_category(2), discrete_category(2), values, same, same);
  CHECK(coend(disc).quotient.apex.size() == 5);

  // the hom profunctor of the walking arrow merges nothing
  auto hom = prof_id(walking_arrow());
  CHECK(coend_oracle(hom) == 2);
  CHECK(coend(hom).quotient.apex.size() == coend_oracle(hom));

  // a constant singleton on a connected category collapses to a point
  for (const auto& c : {walking_arrow(), preorder_category(3, [](Index x, Index y) { return x <= y; })}) {
    CHECK(coend(constant_point(c)).quotient.apex.size() == 1);
    CHECK(coend_oracle(constant_point(c)) == 1);
  }

  Rng rng(case_seed(31, 0));
  for (int k = 0; k < 100; ++k) {
    FinCat c = gen_fincat(rng);
    auto f = gen_profunctor(rng, c, c);
    REQUIRE(validate_profunctor(f));
    CHECK(coend(f).quotient.apex.size() == coend_oracle(f));
  }
  auto skew = gen_profunctor(rng, walking_arrow(), terminal_category());
  CHECK_THROWS_AS(coend(skew), composition_error);
}

TEST_CASE("profunctor composition", "[prof]") {
  GenConfig cfg{0, 3, 3, 3, 0};
  Rng rng(case_seed(32, 0));
  for (int k = 0; k < 60; ++k) {
    FinCat x = gen_fincat(rng), y = gen_fincat(rng), z = gen_fincat(rng);
    auto f = gen_profunctor(rng, x, y), g = gen_profunctor(rng, y, z);
    ProfComposite comp(g, f);
    const Profunctor& gf = comp.result();
    REQUIRE(validate_profunctor(gf));
    // the induced actions, recomputed from every member of every class
    for (Index c = 0; c < x.objects(); ++c)
      for (Index e = 0; e < z.objects(); ++e)
        for (Index cls = 0; cls < gf.value(c, e).size(); ++cls)
          for (const auto& el : comp.members(c, e, cls)) {
            for (Index h = 0; h < z.morphisms(); ++h)
              if (z.src(h) == e) {
                Index moved = comp.class_of(c, z.tgt(h), {el.mid, el.x, g.right(h, el.mid)(el.y)});
                CHECK(gf.right(h, c)(cls) == moved);
              }
            for (Index u = 0; u < x.morphisms(); ++u)
              if (x.tgt(u) == c) {
                Index moved = comp.class_of(x.src(u), e, {el.mid, f.left(u, el.mid)(el.x), el.y});
                CHECK(gf.left(u, e)(cls) == moved);
              }
          }
  }

  for (int k = 0; k < 200; ++k) {
    std::size_t a = 1 + rng.below(3), b = 1 + rng.below(3), c = 1 + rng.below(3);
    auto f = gen_discrete_profunctor(rng, cfg, a, b), g = gen_discrete_profunctor(rng, cfg, b, c);
    oracle::Grid fg(b, std::vector<std::size_t>(a)), gg(c, std::vector<std::size_t>(b));
    for (Index i = 0; i < a; ++i)
      for (Index j = 0; j < b; ++j) fg[j][i] = f.value(i, j).size();
    for (Index j = 0; j < b; ++j)
      for (Index l = 0; l < c; ++l) gg[l][j] = g.value(j, l).size();
    auto expected = oracle::int_product(gg, fg, b, a);
    auto gf = prof_compose(g, f);
    for (Index i = 0; i < a; ++i)
      for (Index l = 0; l < c; ++l) CHECK(gf.value(i, l).size() == expected[l][i]);
  }

  auto empty = representable_sum(walking_arrow(), walking_arrow(), {}, false);
  auto composite = prof_compose(prof_id(walking_arrow()), empty);
  for (const auto& v : composite.values()) CHECK(v.size() == 0);
  CHECK_THROWS_AS(prof_compose(prof_id(terminal_category()), prof_id(walking_arrow())), composition_error);
}

TEST_CASE("co-Yoneda", "[prof]") {
  auto w = walking_arrow();
  auto iso = coyoneda_iso(prof_id(w));
  CHECK(validate_witness(iso));
  CHECK(validate_witness(coyoneda_iso(prof_id(w), UnitSide::left)));

  GenConfig cfg{0, 3, 3, 3, 0};
  Rng rng(case_seed(33, 0));
  auto disc = gen_discrete_profunctor(rng, cfg, 3, 2);
  for (const auto& m : coyoneda_iso(disc).maps) CHECK(m.is_identity());

  for (int k = 0; k < 60; ++k) {
    FinCat x = gen_fincat(rng), y = gen_fincat(rng);
    REQUIRE(x.objects() <= 3);
    REQUIRE(x.morphisms() <= 8);
    auto f = gen_profunctor(rng, x, y);
    REQUIRE(validate_profunctor(f));
    auto r = coyoneda_iso(f, UnitSide::right), l = coyoneda_iso(f, UnitSide::left);
    CHECK(validate_witness(r));
    CHECK(validate_witness(l));
    for (const auto& m : r.maps) CHECK(m.is_bijective());
  }
}

TEST_CASE("associativity of composition", "[prof]") {
  Rng rng(case_seed(34, 0));
  for (int k = 0; k < 30; ++k) {
    FinCat a = gen_fincat(rng), b = gen_fincat(rng), c = gen_fincat(rng), d = gen_fincat(rng);
    auto f = gen_profunctor(rng, a, b), g = gen_profunctor(rng, b, c), h = gen_profunctor(rng, c, d);
    auto w = prof_associator(h, g, f);
    CHECK(validate_witness(w));
  }
}

TEST_CASE("duality", "[prof]") {
  for (const auto& a : sample_categories()) {
    auto d = prof_duality(a);
    CHECK(d.dual == op(a));
    CHECK(validate_profunctor(d.unit));
    CHECK(validate_profunctor(d.counit));
    const std::size_t n = a.objects();
    for (Index x = 0; x < n; ++x)
      for (Index xp = 0; xp < n; ++xp) {
        CHECK(d.unit.value(0, x * n + xp).size() == a.hom(xp, x).size());
        CHECK(d.counit.value(x * n + xp, 0).size() == a.hom(xp, x).size());
      }
  }
  // the dual profunctor trades sides, and dualizing twice returns the original
  Rng rng(case_seed(35, 0));
  for (int k = 0; k < 30; ++k) {
    FinCat x = gen_fincat(rng), y = gen_fincat(rng);
    auto f = gen_profunctor(rng, x, y);
    auto fd = prof_dual(f);
    CHECK(validate_profunctor(fd));
    CHECK(prof_dual(fd) == f);
  }
}

TEST_CASE("zig-zag", "[prof]") {
  auto t = prof_zigzag_check(terminal_category());
  CHECK(validate_witness(t.witness));
  for (const auto& v : t.composite.values()) CHECK(v.size() == 1);

  auto w = walking_arrow();
  auto zw = prof_zigzag_check(w);
  CHECK(validate_witness(zw.witness));
  for (Index s = 0; s < 2; ++s)
    for (Index u = 0; u < 2; ++u) CHECK(zw.composite.value(s, u).size() == w.hom(s, u).size());

  auto zd = prof_zigzag_check(discrete_category(3));
  CHECK(validate_witness(zd.witness));
  for (Index s = 0; s < 3; ++s)
    for (Index u = 0; u < 3; ++u) CHECK(zd.composite.value(s, u).size() == (s == u ? 1u : 0u));

  for (const auto& c : sample_categories()) CHECK(validate_witness(prof_zigzag_check(c).witness));
}
