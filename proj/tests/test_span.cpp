#include <catch_amalgamated.hpp>

#include "cobicat/harness.hpp"
#include "oracles.hpp"

using namespace cobicat;
using oracle::Table;
using C = FinSetCategory;

namespace {

FinFunction fn(std::size_t dom, std::size_t cod, Table t) { return FinFunction(FinSet(dom), FinSet(cod), std::move(t)); }

struct Fixture {
  GenConfig cfg{0, 4, 3, 3, 0};
  Rng rng{case_seed(99, 0)};

  FinSet object() { return gen_finset(rng, cfg); }
  FinSpan span(const FinSet& a, const FinSet& b) { return gen_span(rng, cfg, a, b); }
};

/// Index of (x, y) in the composite apex of s∘r, by linear search over the
/// projections.
std::optional<Index> find_pair(const FinSpan& composite_r, const FinFunction& pi_r, const FinFunction& pi_s, Index x,
                               Index y) {
  for (Index k = 0; k < composite_r.apex().size(); ++k)
    if (pi_r(k) == x && pi_s(k) == y) return k;
  return std::nullopt;
}

}  // namespace

TEST_CASE("identity spans", "[span]") {
  auto e = id_span<C>(FinSet(0));
  CHECK(e.apex().size() == 0);
  CHECK(e.src().size() == 0);
  auto s = id_span<C>(FinSet(3));
  CHECK(s.src_leg().table() == Table{0, 1, 2});
  CHECK(s.tgt_leg().table() == Table{0, 1, 2});
}

TEST_CASE("span composition", "[span]") {
  FinSet two(2);
  FinSpan r(fn(2, 2, {1, 0}), fn(2, 2, {0, 1}));
  FinSpan s(fn(2, 2, {0, 1}), fn(2, 2, {1, 0}));
  CHECK(compose_spans(s, r).apex().size() == 2);
  CHECK_THROWS_AS(compose_spans(id_span<C>(FinSet(3)), r), composition_error);

  FinSpan empty(fn(0, 2, {}), fn(0, 2, {}));
  CHECK(compose_spans(s, empty).apex().size() == 0);
  CHECK(compose_spans(empty, r).apex().size() == 0);

  Fixture fx;
  fx.cfg.max_set_size = 5;
  for (int k = 0; k < 200; ++k) {
    FinSet a = fx.object(), b = fx.object(), c = fx.object();
    auto r1 = fx.span(a, b), s1 = fx.span(b, c);
    auto sr = compose_spans(s1, r1);
    REQUIRE(sr.apex().size() == oracle::pullback_size(r1.tgt_leg().table(), s1.src_leg().table(), b.size()));
    CHECK(compose_spans(id_span<C>(b), r1).apex().size() == r1.apex().size());
    CHECK(compose_spans(s1, id_span<C>(b)).apex().size() == s1.apex().size());
  }
}

TEST_CASE("vertical composition", "[span]") {
  Fixture fx;
  for (int k = 0; k < 100; ++k) {
    FinSet a = fx.object(), b = fx.object();
    auto s = fx.span(a, b);
    auto m1 = gen_refinement(fx.rng, fx.cfg, s);
    auto m2 = gen_refinement(fx.rng, fx.cfg, m1.from());
    auto m3 = gen_refinement(fx.rng, fx.cfg, m2.from());
    CHECK(vcompose(identity_map(s), m1) == m1);
    CHECK(vcompose(m1, identity_map(m1.from())) == m1);
    CHECK(vcompose(vcompose(m1, m2), m3) == vcompose(m1, vcompose(m2, m3)));
    CHECK(vcompose(m1, m2).h() == compose(m1.h(), m2.h()));
  }
  CHECK_THROWS_AS(vcompose(identity_map(id_span<C>(FinSet(2))), identity_map(id_span<C>(FinSet(3)))), composition_error);

  // invertible maps: relabel the apex by a permutation
  auto relabel = [](const FinSpan& to, Table p) {
    FinFunction h = fn(to.apex().size(), to.apex().size(), std::move(p));
    return FinSpanMap(FinSpan(compose(to.src_leg(), h), compose(to.tgt_leg(), h)), to, h);
  };
  FinSpan s(fn(3, 2, {0, 1, 1}), fn(3, 2, {1, 1, 0}));
  auto m = relabel(s, {2, 0, 1});
  auto n = relabel(m.from(), {1, 0, 2});
  auto mn = vcompose(m, n);
  REQUIRE(is_invertible(mn));
  CHECK(*mn.h().inverse() == invert(mn).h());
  CHECK(is_identity(vcompose(invert(mn), mn)));
}

TEST_CASE("horizontal composition", "[span]") {
  Fixture fx;
  for (int k = 0; k < 200; ++k) {
    FinSet a = fx.object(), b = fx.object(), c = fx.object();
    auto r = fx.span(a, b), s = fx.span(b, c);
    CHECK(is_identity(hcompose(identity_map(s), identity_map(r))));

    auto m1b = gen_refinement(fx.rng, fx.cfg, r);
    auto m1a = gen_refinement(fx.rng, fx.cfg, m1b.from());
    auto m2b = gen_refinement(fx.rng, fx.cfg, s);
    auto m2a = gen_refinement(fx.rng, fx.cfg, m2b.from());
    CHECK(hcompose(vcompose(m2b, m2a), vcompose(m1b, m1a)) == vcompose(hcompose(m2b, m1b), hcompose(m2a, m1a)));

    // whiskering s ∘ m: (x, y) goes to (m(x), y), located by search
    auto w = hcompose(identity_map(s), m1b);
    auto pf = pullback(m1b.from().tgt_leg(), s.src_leg());
    auto pt = pullback(r.tgt_leg(), s.src_leg());
    REQUIRE(w.from().apex().size() == pf.apex.size());
    for (Index e = 0; e < pf.apex.size(); ++e) {
      auto target = find_pair(w.to(), pt.pi_f, pt.pi_g, m1b.h()(pf.pi_f(e)), pf.pi_g(e));
      REQUIRE(target);
      CHECK(w.h()(e) == *target);
    }
  }
}

TEST_CASE("associator and pentagon", "[span]") {
  FinSet one(1);
  auto u = id_span<C>(one);
  auto single = associator_span(u, u, u);
  CHECK(single.h().table() == Table{0});

  Fixture fx;
  for (int k = 0; k < 100; ++k) {
    std::vector<FinSet> o;
    for (int j = 0; j < 5; ++j) o.push_back(fx.object());
    auto r1 = fx.span(o[0], o[1]), r2 = fx.span(o[1], o[2]), r3 = fx.span(o[2], o[3]), r4 = fx.span(o[3], o[4]);
    auto a = associator_span(r3, r2, r1);
    REQUIRE(is_invertible(a));
    CHECK(is_identity(vcompose(invert(a), a)));
    CHECK(is_identity(vcompose(a, invert(a))));
    auto lhs = vcompose(associator_span(r4, r3, compose_spans(r2, r1)), associator_span(compose_spans(r4, r3), r2, r1));
    auto rhs = vcompose(hcompose(identity_map(r4), associator_span(r3, r2, r1)),
                        vcompose(associator_span(r4, compose_spans(r3, r2), r1),
                                 hcompose(associator_span(r4, r3, r2), identity_map(r1))));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("unitors and triangle", "[span]") {
  auto i3 = id_span<C>(FinSet(3));
  CHECK(unitor_span(Side::left, i3) == unitor_span(Side::right, i3));
  FinSpan empty(fn(0, 2, {}), fn(0, 3, {}));
  CHECK(unitor_span(Side::left, empty).h().table().empty());

  Fixture fx;
  for (int k = 0; k < 100; ++k) {
    FinSet a = fx.object(), b = fx.object(), c = fx.object();
    auto r = fx.span(a, b), s = fx.span(b, c);
    auto lu = unitor_span(Side::left, r), ru = unitor_span(Side::right, r);
    REQUIRE(is_invertible(lu));
    REQUIRE(is_invertible(ru));
    CHECK(lu.to() == r);
    auto lhs = hcompose(unitor_span(Side::right, s), identity_map(r));
    auto rhs = vcompose(hcompose(identity_map(s), unitor_span(Side::left, r)), associator_span(s, id_span<C>(b), r));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor and tensorator", "[span]") {
  Fixture fx;
  for (int k = 0; k < 100; ++k) {
    FinSet a = fx.object(), b = fx.object(), c = fx.object(), d = fx.object(), e = fx.object(), f = fx.object();
    auto r = fx.span(a, b), s = fx.span(b, c), r2 = fx.span(d, e), s2 = fx.span(e, f);
    CHECK(tensor_spans(r, r2).apex().size() == r.apex().size() * r2.apex().size());
    CHECK(tensor_spans(r, id_span<C>(FinSet(1))).apex().size() == r.apex().size());
    auto t = tensorator(s, s2, r, r2);
    REQUIRE(is_invertible(t));
    CHECK(is_identity(vcompose(invert(t), t)));
    const std::size_t lhs = oracle::pullback_size(r.tgt_leg().table(), s.src_leg().table(), b.size()) *
                            oracle::pullback_size(r2.tgt_leg().table(), s2.src_leg().table(), e.size());
    CHECK(t.from().apex().size() == lhs);
    CHECK(t.to().apex().size() == lhs);
  }
  auto id2 = id_span<C>(FinSet(2)), id3 = id_span<C>(FinSet(3));
  CHECK(is_identity(tensorator(id2, id3, id2, id3)));
  CHECK(tensor_spans(counit_span<C>(FinSet(2)), counit_span<C>(FinSet(3))).apex().size() == 6);
}

TEST_CASE("braiding", "[span]") {
  CHECK(braiding_span<C>(FinSet(0), FinSet(3)).apex().size() == 0);
  for (std::size_t a = 0; a <= 5; ++a)
    for (std::size_t b = 0; b <= 5; ++b) {
      auto sigma = cartesian::swap<C>(FinSet(a), FinSet(b));
      CHECK(compose(cartesian::swap<C>(FinSet(b), FinSet(a)), sigma).is_identity());
      auto bb = compose_spans(braiding_span<C>(FinSet(b), FinSet(a)), braiding_span<C>(FinSet(a), FinSet(b)));
      CHECK(bb.apex().size() == a * b);
      auto iso = strict_isomap(id_span<C>(FinSet(a * b)), bb);
      CHECK(is_invertible(iso));
    }
}

TEST_CASE("structural modifications", "[span]") {
  const FinSet I(1);
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      auto v = structural_modification<C>(Modification::syllepsis, {FinSet(a), FinSet(b)});
      CHECK(is_identity(v));
    }
  auto pi = structural_modification<C>(Modification::pentagonator, {I, I, I, I});
  CHECK(pi.h().is_identity());

  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; b <= 4; b += 2)
      for (std::size_t c = 0; c <= 4; c += 3) {
        for (auto kind : {Modification::hexagon_R, Modification::hexagon_S}) {
          auto [from, to] = modification_boundary<C>(kind, {FinSet(a), FinSet(b), FinSet(c)});
          CHECK(from.apex().size() == to.apex().size());
          auto m = structural_modification<C>(kind, {FinSet(a), FinSet(b), FinSet(c)});
          CHECK(m.h().is_bijective());
        }
        auto p = structural_modification<C>(Modification::pentagonator, {FinSet(a), FinSet(b), FinSet(c), FinSet(2)});
        CHECK(is_identity(vcompose(invert(p), p)));
      }
  for (std::size_t a = 0; a <= 3; ++a) {
    CHECK(is_invertible(structural_modification<C>(Modification::lambda, {I, FinSet(a), FinSet(2)})));
    CHECK(is_invertible(structural_modification<C>(Modification::mu, {FinSet(a), I, FinSet(2)})));
    CHECK(is_invertible(structural_modification<C>(Modification::rho, {FinSet(a), FinSet(2), I})));
  }
  CHECK_THROWS_AS(structural_modification<C>(Modification::pentagonator, {I, I}), composition_error);
  CHECK_THROWS_AS(structural_modification<C>(Modification::lambda, {FinSet(2), I, I}), composition_error);
  CHECK(modification_arity(Modification::hexagon_S) == 3);
}

TEST_CASE("duality data", "[span]") {
  auto d0 = duality<C>(FinSet(0));
  CHECK(d0.unit.apex().size() == 0);
  CHECK(d0.zeta.h().table().empty());

  auto d3 = duality<C>(FinSet(3));
  CHECK(d3.zeta.to().apex().size() == 3);
  CHECK(d3.zeta.h().is_bijective());
  CHECK(d3.counit == reverse_span(d3.unit));

  for (std::size_t n = 0; n <= 8; ++n) {
    auto d = duality<C>(FinSet(n));
    CHECK(jointly_monic(d.unit.src_leg(), d.unit.tgt_leg()));
    REQUIRE(is_invertible(d.zeta));
    REQUIRE(is_invertible(d.theta));
    CHECK(is_identity(vcompose(invert(d.zeta), d.zeta)));
    CHECK(is_identity(vcompose(invert(d.theta), d.theta)));
  }
}

TEST_CASE("swallowtail", "[span]") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto p = swallowtail_pasting<C>(FinSet(n));
    CHECK(p.total == identity_map(p.data.unit));
    REQUIRE(is_invertible(p.zeta_side));
    auto through = vcompose(p.theta_side, vcompose(p.steps[3], p.zeta_side));
    CHECK(is_identity(through));
  }
  auto one = swallowtail_check<C>(FinSet(1));
  CHECK(one.from().apex().size() == 1);
  CHECK(is_identity(one));
}
