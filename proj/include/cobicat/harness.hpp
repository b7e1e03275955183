#pragma once

// Seeded random instances and law suites. Every case draws from its own
// generator, seeded from (config seed, case index), so any failure replays
// from the seed recorded in the report.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cobicat/serialize.hpp"

namespace cobicat {

class unsupported_error : public cobicat_error {
 public:
  using cobicat_error::cobicat_error;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_set_size = 4;
  std::size_t max_dim = 3;
  std::size_t max_edges = 3;
  std::size_t cases = 100;
};

/// mt19937_64 with draws reduced by modulo, so streams are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform-ish in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  /// In [0, k].
  std::size_t upto(std::size_t k) { return below(k + 1); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(index));
}

// ---------------------------------------------------------------------------
// Generators

/// 0 with probability 1/10, otherwise uniform in [1, max].
inline std::size_t gen_size(Rng& rng, std::size_t max) {
  if (max == 0 || rng.below(10) == 0) return 0;
  return 1 + rng.below(max);
}

inline FinSet gen_finset(Rng& rng, const GenConfig& cfg) { return FinSet(gen_size(rng, cfg.max_set_size)); }

inline FinFunction gen_function(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (cod.size() == 0 && dom.size() != 0) throw invariant_error("gen_function: no function into the empty set");
  std::vector<Index> t(dom.size());
  for (auto& x : t) x = rng.below(cod.size());
  return FinFunction(dom, cod, std::move(t));
}

inline FinSpan gen_span(Rng& rng, const GenConfig& cfg, const FinSet& a, const FinSet& b) {
  FinSet apex(a.size() == 0 || b.size() == 0 ? 0 : gen_size(rng, cfg.max_set_size));
  return FinSpan(gen_function(rng, apex, a), gen_function(rng, apex, b));
}

/// A random 2-cell into `to`.
inline FinSpanMap gen_refinement(Rng& rng, const GenConfig& cfg, const FinSpan& to) {
  FinSet apex(to.apex().size() == 0 ? 0 : gen_size(rng, cfg.max_set_size));
  auto h = gen_function(rng, apex, to.apex());
  return FinSpanMap(FinSpan(compose(to.src_leg(), h), compose(to.tgt_leg(), h)), to, h);
}

inline FinObMatrix gen_matrix(Rng& rng, const GenConfig& cfg, std::size_t src, std::size_t tgt) {
  std::vector<FinSet> e;
  for (std::size_t k = 0; k < src * tgt; ++k) e.emplace_back(rng.upto(cfg.max_set_size));
  return FinObMatrix(src, tgt, std::move(e));
}

/// Preorders, small monoids and disjoint unions, with at most 3 objects and
/// 8 morphisms.
inline FinCat gen_fincat(Rng& rng) {
  auto preorder = [&rng](std::size_t n) {
    for (;;) {
      std::vector<bool> rel(n * n);
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) rel[x * n + y] = x == y || rng.chance(1, 3);
      for (Index k = 0; k < n; ++k)
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y)
            if (rel[x * n + k] && rel[k * n + y]) rel[x * n + y] = true;
      FinCat c = preorder_category(n, [&](Index x, Index y) { return rel[x * n + y]; });
      if (c.morphisms() <= 8) return c;
    }
  };
  auto monoid = [&rng]() {
    const std::size_t k = 2 + rng.below(3);
    switch (rng.below(3)) {
      case 0: return monoid_category(k, [k](Index a, Index b) { return (a + b) % k; });
      case 1: return monoid_category(k, [k](Index a, Index b) { return std::min<Index>(a + b, k - 1); });
      default: return monoid_category(2, [](Index a, Index b) { return a | b; });
    }
  };
  switch (rng.below(7)) {
    case 0: return terminal_category();
    case 1: return discrete_category(1 + rng.below(3));
    case 2: return walking_arrow();
    case 3: return preorder(2 + rng.below(2));
    case 4: return monoid();
    case 5: return disjoint_union(walking_arrow(), monoid());
    default: return disjoint_union(monoid(), discrete_category(1 + rng.below(2)));
  }
}

/// F(x, y) = Σ_k hom(x, a_k) × hom(b_k, y), plus a singleton summand when
/// `point` is set.
inline Profunctor representable_sum(const FinCat& X, const FinCat& Y, const std::vector<std::pair<Index, Index>>& terms,
                                    bool point) {
  const std::size_t ny = Y.objects();
  std::vector<FinSet> values;
  for (Index x = 0; x < X.objects(); ++x)
    for (Index y = 0; y < ny; ++y) {
      std::size_t n = point ? 1 : 0;
      for (auto [a, b] : terms) n += X.hom(x, a).size() * Y.hom(b, y).size();
      values.emplace_back(n);
    }
  // Locates element e of F(x, y): summand, u, v.
  auto locate = [&](Index x, Index y, Index e) -> std::tuple<std::size_t, Index, Index> {
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::size_t w = Y.hom(terms[k].second, y).size();
      const std::size_t n = X.hom(x, terms[k].first).size() * w;
      if (e < n) return {k, X.hom(x, terms[k].first)[e / w], Y.hom(terms[k].second, y)[e % w]};
      e -= n;
    }
    return {terms.size(), 0, 0};
  };
  auto place = [&](Index x, Index y, std::size_t k, Index u, Index v) -> Index {
    Index base = 0;
    for (std::size_t j = 0; j < k; ++j) base += X.hom(x, terms[j].first).size() * Y.hom(terms[j].second, y).size();
    if (k == terms.size()) return base;
    const std::size_t w = Y.hom(terms[k].second, y).size();
    return base + X.hom_position(u) * w + Y.hom_position(v);
  };
  auto left = [&](Index g, Index y, Index e) {
    auto [k, u, v] = locate(X.tgt(g), y, e);
    if (k == terms.size()) return place(X.src(g), y, k, 0, 0);
    return place(X.src(g), y, k, X.comp(u, g), v);
  };
  auto right = [&](Index h, Index x, Index e) {
    auto [k, u, v] = locate(x, Y.src(h), e);
    if (k == terms.size()) return place(x, Y.tgt(h), k, 0, 0);
    return place(x, Y.tgt(h), k, u, Y.comp(h, v));
  };
  return Profunctor::build(X, Y, std::move(values), left, right);
}

inline Profunctor gen_profunctor(Rng& rng, const FinCat& X, const FinCat& Y) {
  std::vector<std::pair<Index, Index>> terms;
  const std::size_t n = rng.upto(2);
  for (std::size_t k = 0; k < n; ++k) terms.emplace_back(rng.below(X.objects()), rng.below(Y.objects()));
  return representable_sum(X, Y, terms, rng.chance(1, 2));
}

/// A profunctor between discrete categories with arbitrary value sizes.
inline Profunctor gen_discrete_profunctor(Rng& rng, const GenConfig& cfg, std::size_t x, std::size_t y) {
  std::vector<FinSet> values;
  for (std::size_t k = 0; k < x * y; ++k) values.emplace_back(rng.upto(cfg.max_set_size));
  auto same = [](Index, Index, Index e) { return e; };
  return Profunctor::build(discrete_category(x), discrete_category(y), std::move(values), same, same);
}

inline Resistance gen_resistance(Rng& rng) { return Resistance(1 + static_cast<std::int64_t>(rng.below(2))); }

inline ResNet gen_network(Rng& rng, const GenConfig& cfg) {
  const std::size_t v = gen_size(rng, cfg.max_set_size);
  std::vector<std::tuple<Index, Index, Resistance>> edges;
  if (v > 0) {
    const std::size_t e = rng.upto(cfg.max_edges);
    for (std::size_t k = 0; k < e; ++k) {
      Index s = rng.below(v), t = rng.below(v);
      edges.emplace_back(s, t, gen_resistance(rng));
    }
  }
  return ResNet::from_edges(v, edges);
}

/// A random network map out of `a`, valid by construction: vertices map
/// anywhere in a target with up to two extra vertices, and each edge either
/// lands on a compatible existing edge or on a fresh one.
inline ResNetMorphism gen_extension(Rng& rng, const ResNet& a) {
  const std::size_t na = a.vertices().size();
  const std::size_t nb = na > 0 ? 1 + rng.below(na + 2) : rng.upto(2);
  std::vector<Index> ups(na);
  for (auto& x : ups) x = rng.below(nb);
  std::vector<std::tuple<Index, Index, Resistance>> edges;
  if (nb > 0 && rng.chance(1, 3)) edges.emplace_back(rng.below(nb), rng.below(nb), gen_resistance(rng));
  std::vector<Index> eps;
  for (Index e = 0; e < a.edges().size(); ++e) {
    const Index s = ups[a.s()(e)], t = ups[a.t()(e)];
    std::vector<Index> candidates;
    for (Index k = 0; k < edges.size(); ++k)
      if (std::get<0>(edges[k]) == s && std::get<1>(edges[k]) == t && std::get<2>(edges[k]) == a.r()[e])
        candidates.push_back(k);
    if (!candidates.empty() && rng.chance(1, 2)) {
      eps.push_back(candidates[rng.below(candidates.size())]);
    } else {
      eps.push_back(edges.size());
      edges.emplace_back(s, t, a.r()[e]);
    }
  }
  ResNet b = ResNet::from_edges(nb, edges);
  return checked_morphism(a, b, FinFunction(a.edges(), b.edges(), std::move(eps)),
                          FinFunction(a.vertices(), b.vertices(), std::move(ups)));
}

inline NetCospan gen_cospan(Rng& rng, const ResNet& x, const ResNet& y) {
  auto sum = net_coproduct(x, y);
  auto ext = gen_extension(rng, sum.apex);
  return make_cospan(net_compose(ext, sum.i1), net_compose(ext, sum.i2));
}

/// A random 2-cell into `to`: from = to extended along a random map of apexes.
inline NetCospanMap gen_cospan_refinement(Rng& rng, const NetCospan& to) {
  auto ext = gen_extension(rng, to.apex());
  NetCospan from = make_cospan(net_compose(ext, src_leg(to)), net_compose(ext, tgt_leg(to)));
  return NetCospanMap(from, to, OpArrow{ext});
}

// ---------------------------------------------------------------------------
// Law suites

enum class Law { pentagon, triangle, interchange, hexR, hexS, syllepsis, zigzag, swallowtail, coyoneda, cardinality };
enum class Bicat { span, rel, mat, prof, net };

inline const std::vector<std::pair<Law, std::string>>& law_names() {
  static const std::vector<std::pair<Law, std::string>> names{
      {Law::pentagon, "pentagon"},   {Law::triangle, "triangle"}, {Law::interchange, "interchange"},
      {Law::hexR, "hexR"},           {Law::hexS, "hexS"},         {Law::syllepsis, "syllepsis"},
      {Law::zigzag, "zigzag"},       {Law::swallowtail, "swallowtail"}, {Law::coyoneda, "coyoneda"},
      {Law::cardinality, "cardinality"}};
  return names;
}

inline const std::vector<std::pair<Bicat, std::string>>& bicat_names() {
  static const std::vector<std::pair<Bicat, std::string>> names{
      {Bicat::span, "span"}, {Bicat::rel, "rel"}, {Bicat::mat, "mat"}, {Bicat::prof, "prof"}, {Bicat::net, "net"}};
  return names;
}

inline std::string to_string(Law l) {
  for (const auto& [k, v] : law_names())
    if (k == l) return v;
  return "?";
}

inline std::string to_string(Bicat b) {
  for (const auto& [k, v] : bicat_names())
    if (k == b) return v;
  return "?";
}

inline std::optional<Law> parse_law(const std::string& s) {
  for (const auto& [k, v] : law_names())
    if (v == s) return k;
  return std::nullopt;
}

inline std::optional<Bicat> parse_bicat(const std::string& s) {
  for (const auto& [k, v] : bicat_names())
    if (v == s) return k;
  return std::nullopt;
}

inline bool law_supported(Law law, Bicat b) {
  switch (b) {
    case Bicat::span:
    case Bicat::net:
      return law != Law::coyoneda && law != Law::cardinality;
    case Bicat::rel:
      return law == Law::pentagon || law == Law::triangle || law == Law::zigzag || law == Law::swallowtail ||
             law == Law::cardinality;
    case Bicat::mat:
      return law == Law::pentagon || law == Law::triangle || law == Law::zigzag || law == Law::swallowtail ||
             law == Law::cardinality || law == Law::syllepsis;
    case Bicat::prof:
      return law == Law::coyoneda || law == Law::zigzag || law == Law::cardinality;
  }
  return false;
}

struct Failure {
  std::size_t case_index = 0;
  std::uint64_t seed = 0;
  json counterexample;
  std::string message;
};

struct LawReport {
  std::string law;
  std::string bicategory;
  std::size_t cases = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

inline json to_json(const LawReport& r) {
  json fs = json::array();
  for (const auto& f : r.failures)
    fs.push_back({{"case", f.case_index}, {"seed", f.seed}, {"counterexample", f.counterexample}, {"message", f.message}});
  return {{"law", r.law}, {"bicategory", r.bicategory}, {"cases", r.cases}, {"failures", fs}, {"passed", r.passed()}};
}

/// The outcome of one case: empty on success, otherwise what failed.
struct CaseResult {
  bool ok = true;
  json counterexample;
  std::string message;
};

namespace laws {

inline CaseResult fail(json counterexample, std::string message) { return {false, std::move(counterexample), std::move(message)}; }

inline json spans_json(const std::vector<FinSpan>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}
inline json spans_json(const std::vector<NetCospan>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}
inline json objects_json(const std::vector<FinSet>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}
inline json objects_json(const std::vector<ResNet>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}

struct FinSetGen {
  using C = FinSetCategory;
  const GenConfig& cfg;
  FinSet object(Rng& rng) const { return gen_finset(rng, cfg); }
  FinSpan span(Rng& rng, const FinSet& a, const FinSet& b) const { return gen_span(rng, cfg, a, b); }
  FinSpanMap refine(Rng& rng, const FinSpan& to) const { return gen_refinement(rng, cfg, to); }
};

struct NetGen {
  using C = ResNetOpCategory;
  const GenConfig& cfg;
  ResNet object(Rng& rng) const { return gen_network(rng, cfg); }
  NetCospan span(Rng& rng, const ResNet& a, const ResNet& b) const { return gen_cospan(rng, a, b); }
  NetCospanMap refine(Rng& rng, const NetCospan& to) const { return gen_cospan_refinement(rng, to); }
};

template <FiniteLimitCategory C>
bool strict_inverse_pair(const SpanMap<C>& m) {
  if (!is_invertible(m)) return false;
  auto inv = invert(m);
  return is_identity(vcompose(inv, m)) && is_identity(vcompose(m, inv));
}

template <class G>
CaseResult span_case(Law law, const G& gen, Rng& rng) {
  using C = typename G::C;
  using S = Span<C>;
  using O = typename C::Object;
  switch (law) {
    case Law::pentagon: {
      std::vector<O> o;
      for (int k = 0; k < 5; ++k) o.push_back(gen.object(rng));
      std::vector<S> r;
      for (int k = 0; k < 4; ++k) r.push_back(gen.span(rng, o[k], o[k + 1]));
      const auto &r1 = r[0], &r2 = r[1], &r3 = r[2], &r4 = r[3];
      auto lhs = vcompose(associator_span(r4, r3, compose_spans(r2, r1)), associator_span(compose_spans(r4, r3), r2, r1));
      auto s1 = hcompose(associator_span(r4, r3, r2), identity_map(r1));
      auto s2 = associator_span(r4, compose_spans(r3, r2), r1);
      auto s3 = hcompose(identity_map(r4), associator_span(r3, r2, r1));
      if (!(lhs == vcompose(s3, vcompose(s2, s1)))) return fail(spans_json(r), "pentagon sides differ");
      if (!strict_inverse_pair(structural_modification<C>(Modification::pentagonator, {o[0], o[1], o[2], o[3]})))
        return fail(objects_json(o), "pentagonator is not invertible");
      return {};
    }
    case Law::triangle: {
      std::vector<O> o{gen.object(rng), gen.object(rng), gen.object(rng)};
      S r = gen.span(rng, o[0], o[1]), s = gen.span(rng, o[1], o[2]);
      auto lhs = hcompose(unitor_span(Side::right, s), identity_map(r));
      auto rhs = vcompose(hcompose(identity_map(s), unitor_span(Side::left, r)), associator_span(s, id_span<C>(o[1]), r));
      if (!(lhs == rhs)) return fail(spans_json({r, s}), "triangle sides differ");
      const O I = C::terminal();
      for (auto [kind, args] : {std::pair{Modification::lambda, std::vector<O>{I, o[0], o[1]}},
                                std::pair{Modification::mu, std::vector<O>{o[0], I, o[1]}},
                                std::pair{Modification::rho, std::vector<O>{o[0], o[1], I}}})
        if (!strict_inverse_pair(structural_modification<C>(kind, args)))
          return fail(objects_json(o), std::string(to_string(kind)) + " is not invertible");
      return {};
    }
    case Law::interchange: {
      std::vector<O> o{gen.object(rng), gen.object(rng), gen.object(rng)};
      S r2 = gen.span(rng, o[0], o[1]), s2 = gen.span(rng, o[1], o[2]);
      auto m1b = gen.refine(rng, r2);
      auto m1a = gen.refine(rng, m1b.from());
      auto m2b = gen.refine(rng, s2);
      auto m2a = gen.refine(rng, m2b.from());
      auto lhs = hcompose(vcompose(m2b, m2a), vcompose(m1b, m1a));
      auto rhs = vcompose(hcompose(m2b, m1b), hcompose(m2a, m1a));
      if (!(lhs == rhs)) return fail(spans_json({m1a.from(), r2, m2a.from(), s2}), "interchange sides differ");
      return {};
    }
    case Law::hexR:
    case Law::hexS: {
      std::vector<O> o{gen.object(rng), gen.object(rng), gen.object(rng)};
      auto kind = law == Law::hexR ? Modification::hexagon_R : Modification::hexagon_S;
      auto m = structural_modification<C>(kind, o);
      if (!strict_inverse_pair(m)) return fail(objects_json(o), "hexagon modification is not invertible");
      return {};
    }
    case Law::syllepsis: {
      std::vector<O> o{gen.object(rng), gen.object(rng)};
      if (!is_identity(structural_modification<C>(Modification::syllepsis, o)))
        return fail(objects_json(o), "syllepsis is not the identity");
      return {};
    }
    case Law::zigzag: {
      O a = gen.object(rng);
      auto d = duality<C>(a);
      if (!strict_inverse_pair(d.zeta) || !strict_inverse_pair(d.theta))
        return fail(objects_json({a}), "zig-zag cells are not invertible");
      return {};
    }
    case Law::swallowtail: {
      O a = gen.object(rng);
      if (!is_identity(swallowtail_check<C>(a))) return fail(objects_json({a}), "swallowtail is not the identity");
      return {};
    }
    default:
      throw unsupported_error("unsupported law for spans");
  }
}

inline FinSet rel_object(Rng& rng, const GenConfig& cfg) { return gen_finset(rng, cfg); }

inline Relation gen_relation(Rng& rng, const GenConfig& cfg, const FinSet& a, const FinSet& b) {
  return span_to_rel(gen_span(rng, cfg, a, b));
}

inline json rels_json(const std::vector<Relation>& v) {
  json j = json::array();
  for (const auto& r : v) j.push_back(to_json(r));
  return j;
}

inline CaseResult rel_case(Law law, const GenConfig& cfg, Rng& rng) {
  switch (law) {
    case Law::pentagon: {
      std::vector<FinSet> o;
      for (int k = 0; k < 5; ++k) o.push_back(rel_object(rng, cfg));
      std::vector<Relation> r;
      for (int k = 0; k < 4; ++k) r.push_back(gen_relation(rng, cfg, o[k], o[k + 1]));
      auto c = [](const Relation& t, const Relation& s) { return rel_compose(t, s); };
      const auto &a = r[0], &b = r[1], &d = r[2], &e = r[3];
      std::vector<Relation> all{c(c(c(e, d), b), a), c(c(e, c(d, b)), a), c(e, c(c(d, b), a)), c(e, c(d, c(b, a))),
                                c(c(e, d), c(b, a))};
      for (const auto& x : all)
        if (!(x == all[0])) return fail(rels_json(r), "bracketings of a relational composite differ");
      return {};
    }
    case Law::triangle: {
      FinSet a = rel_object(rng, cfg), b = rel_object(rng, cfg);
      Relation r = gen_relation(rng, cfg, a, b);
      if (!(rel_compose(rel_identity(b), r) == r) || !(rel_compose(r, rel_identity(a)) == r))
        return fail(rels_json({r}), "identity relation is not a strict unit");
      return {};
    }
    case Law::zigzag: {
      FinSet a = rel_object(rng, cfg);
      auto s = rel_compact_structure(a);
      if (!s.structure_jointly_monic) return fail(objects_json({a}), "a structure 1-cell is not jointly monic");
      if (!(s.zeta_composite == rel_identity(a)) || !(s.theta_composite == rel_identity(a)))
        return fail(objects_json({a}), "zig-zag composite is not the identity relation");
      return {};
    }
    case Law::swallowtail: {
      FinSet a = rel_object(rng, cfg);
      auto p = swallowtail_pasting<FinSetCategory>(a);
      if (!is_identity(p.total)) return fail(objects_json({a}), "swallowtail is not the identity");
      if (!(span_to_rel(p.data.unit).span() == p.data.unit)) return fail(objects_json({a}), "unit is not a relation");
      return {};
    }
    case Law::cardinality: {
      FinSet a = rel_object(rng, cfg), b = rel_object(rng, cfg), c = rel_object(rng, cfg);
      Relation r = gen_relation(rng, cfg, a, b), s = gen_relation(rng, cfg, b, c);
      std::vector<std::pair<Index, Index>> expected;
      for (Index x = 0; x < a.size(); ++x)
        for (Index z = 0; z < c.size(); ++z) {
          bool any = false;
          for (Index y = 0; y < b.size() && !any; ++y) any = r.contains(x, y) && s.contains(y, z);
          if (any) expected.emplace_back(x, z);
        }
      if (rel_compose(s, r).pairs() != expected) return fail(rels_json({r, s}), "composite differs from boolean product");
      return {};
    }
    default:
      throw unsupported_error("unsupported law for relations");
  }
}

inline json mats_json(const std::vector<FinObMatrix>& v) {
  json j = json::array();
  for (const auto& m : v) j.push_back(to_json(m));
  return j;
}

inline CaseResult mat_case(Law law, const GenConfig& cfg, Rng& rng) {
  auto dim = [&] { return gen_size(rng, cfg.max_dim); };
  switch (law) {
    case Law::pentagon: {
      std::vector<std::size_t> d;
      for (int k = 0; k < 5; ++k) d.push_back(dim());
      std::vector<FinObMatrix> m;
      for (int k = 0; k < 4; ++k) m.push_back(gen_matrix(rng, cfg, d[k], d[k + 1]));
      if (!mat_pentagon_check(m[3], m[2], m[1], m[0])) return fail(mats_json(m), "pentagon sides differ");
      if (!inverse_cell(mat_associator(m[2], m[1], m[0]))) return fail(mats_json(m), "associator is not invertible");
      return {};
    }
    case Law::triangle: {
      std::size_t a = dim(), b = dim(), c = dim();
      auto m = gen_matrix(rng, cfg, a, b), n = gen_matrix(rng, cfg, b, c);
      if (!mat_triangle_check(n, m)) return fail(mats_json({m, n}), "triangle sides differ");
      if (!inverse_cell(mat_left_unitor(m)) || !inverse_cell(mat_right_unitor(m)))
        return fail(mats_json({m}), "unitor is not invertible");
      return {};
    }
    case Law::zigzag: {
      std::size_t n = dim();
      auto z = mat_zigzag_check<FinSetRig>(n);
      auto inv = inverse_cell(z.cell);
      if (!inv || !is_identity(vcompose(*inv, z.cell)) || !is_identity(vcompose(z.cell, *inv)))
        return fail(json{{"n", n}}, "zig-zag cell is not invertible");
      return {};
    }
    case Law::swallowtail: {
      std::size_t n = dim();
      auto z = mat_zigzag_check<FinSetRig>(n);
      if (!z.triangle_at_unit) return fail(json{{"n", n}}, "triangle at (I, I) fails");
      return {};
    }
    case Law::syllepsis: {
      std::size_t a = dim(), b = dim();
      auto cell = mat_braid_twice<FinSetRig>(a, b);
      for (const auto& f : cell.entries())
        if (!f.is_identity()) return fail(json{{"m", a}, {"n", b}}, "braiding twice is not the identity");
      return {};
    }
    case Law::cardinality: {
      std::size_t a = dim(), b = dim(), c = dim(), d = dim();
      auto m = gen_matrix(rng, cfg, a, b), n = gen_matrix(rng, cfg, b, c), p = gen_matrix(rng, cfg, c, d);
      auto sm = size_grid(m), sn = size_grid(n), sp = size_grid(p);
      std::vector<std::vector<std::size_t>> prod(c, std::vector<std::size_t>(a, 0));
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t k = 0; k < a; ++k)
          for (std::size_t j = 0; j < b; ++j) prod[i][k] += sn[i][j] * sm[j][k];
      if (size_grid(mat_compose(n, m)) != prod) return fail(mats_json({m, n}), "composite sizes differ from the integer product");
      std::vector<std::vector<std::size_t>> kron(b * d, std::vector<std::size_t>(a * c));
      for (std::size_t r = 0; r < b * d; ++r)
        for (std::size_t q = 0; q < a * c; ++q) kron[r][q] = sm[r / d][q / c] * sp[r % d][q % c];
      if (size_grid(mat_tensor(m, p)) != kron) return fail(mats_json({m, p}), "tensor sizes differ from the Kronecker product");
      return {};
    }
    default:
      throw unsupported_error("unsupported law for matrices");
  }
}

inline CaseResult prof_case(Law law, const GenConfig& cfg, Rng& rng) {
  switch (law) {
    case Law::coyoneda: {
      FinCat x = gen_fincat(rng), y = gen_fincat(rng);
      Profunctor f = gen_profunctor(rng, x, y);
      if (!validate_profunctor(f)) return fail(to_json(f), "generated profunctor is not functorial");
      if (!validate_witness(coyoneda_iso(f, UnitSide::right)) || !validate_witness(coyoneda_iso(f, UnitSide::left)))
        return fail(to_json(f), "co-Yoneda witness does not validate");
      return {};
    }
    case Law::zigzag: {
      FinCat c = gen_fincat(rng);
      if (!validate_witness(prof_zigzag_check(c).witness)) return fail(to_json(c), "zig-zag witness does not validate");
      return {};
    }
    case Law::cardinality: {
      std::size_t a = 1 + rng.below(3), b = 1 + rng.below(3), c = 1 + rng.below(3);
      Profunctor f = gen_discrete_profunctor(rng, cfg, a, b), g = gen_discrete_profunctor(rng, cfg, b, c);
      Profunctor gf = prof_compose(g, f);
      for (Index x = 0; x < a; ++x)
        for (Index z = 0; z < c; ++z) {
          std::size_t n = 0;
          for (Index y = 0; y < b; ++y) n += f.value(x, y).size() * g.value(y, z).size();
          if (gf.value(x, z).size() != n)
            return fail(json::array({to_json(f), to_json(g)}), "composite sizes differ from the integer product");
        }
      return {};
    }
    default:
      throw unsupported_error("unsupported law for profunctors");
  }
}

}  // namespace laws

/// Runs one case from its own seed.
inline CaseResult run_case(Law law, Bicat b, const GenConfig& cfg, std::uint64_t seed) {
  if (!law_supported(law, b)) throw unsupported_error("law " + to_string(law) + " is not supported for " + to_string(b));
  Rng rng(seed);
  try {
    switch (b) {
      case Bicat::span: return laws::span_case(law, laws::FinSetGen{cfg}, rng);
      case Bicat::net: return laws::span_case(law, laws::NetGen{cfg}, rng);
      case Bicat::rel: return laws::rel_case(law, cfg, rng);
      case Bicat::mat: return laws::mat_case(law, cfg, rng);
      case Bicat::prof: return laws::prof_case(law, cfg, rng);
    }
  } catch (const unsupported_error&) {
    throw;
  } catch (const std::exception& e) {
    return {false, json{{"seed", seed}}, std::string("exception: ") + e.what()};
  }
  return {};
}

inline LawReport run_law_suite(Law law, Bicat b, const GenConfig& cfg) {
  if (!law_supported(law, b)) throw unsupported_error("law " + to_string(law) + " is not supported for " + to_string(b));
  LawReport report{to_string(law), to_string(b), cfg.cases, {}};
  for (std::size_t k = 0; k < cfg.cases; ++k) {
    const std::uint64_t seed = case_seed(cfg.seed, k);
    CaseResult r = run_case(law, b, cfg, seed);
    if (!r.ok) report.failures.push_back({k, seed, std::move(r.counterexample), std::move(r.message)});
  }
  return report;
}

/// Re-runs a reported failure from its recorded seed.
inline CaseResult replay(Law law, Bicat b, const GenConfig& cfg, const Failure& f) { return run_case(law, b, cfg, f.seed); }

}  // namespace cobicat
