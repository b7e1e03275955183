#pragma once

// Resistor networks, their morphisms, and cospans of networks. Cospans in
// ResNet are spans in ResNet^op, so the cospan bicategory is the span
// bicategory of ResNetOpCategory: composition by pushout, tensor by
// juxtaposition. A 2-cell between cospans with apexes S and S' is therefore
// stored as an arrow S -> S' of ResNet^op, i.e. a network map S' -> S.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "cobicat/span.hpp"

namespace cobicat {

using Resistance = boost::rational<std::int64_t>;

inline std::string to_string(const Resistance& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q" or "p".
inline Resistance parse_resistance(const std::string& s) {
  try {
    auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      auto n = std::stoll(s, &used);
      if (used != s.size()) throw invariant_error("");
      return Resistance(n);
    }
    auto num_str = s.substr(0, slash), den_str = s.substr(slash + 1);
    auto n = std::stoll(num_str, &used);
    if (used != num_str.size()) throw invariant_error("");
    auto d = std::stoll(den_str, &used);
    if (used != den_str.size() || d == 0) throw invariant_error("");
    return Resistance(n, d);
  } catch (const std::exception&) {
    throw invariant_error("parse_resistance: malformed rational '" + s + "'");
  }
}

class ResNet {
 public:
  ResNet() = default;

  ResNet(FinSet v, FinSet e, FinFunction s, FinFunction t, std::vector<Resistance> r)
      : v_(std::move(v)), e_(std::move(e)), s_(std::move(s)), t_(std::move(t)), r_(std::move(r)) {
    if (!(s_.dom() == e_) || !(t_.dom() == e_) || !(s_.cod() == v_) || !(t_.cod() == v_))
      throw invariant_error("ResNet: source and target maps must run from edges to vertices");
    if (r_.size() != e_.size()) throw invariant_error("ResNet: one resistance per edge is required");
    for (const auto& x : r_)
      if (x <= 0) throw invariant_error("ResNet: resistance " + to_string(x) + " is not positive");
  }

  /// A network with vertices only.
  static ResNet edgeless(std::size_t vertices) {
    FinSet v(vertices), e(0);
    return ResNet(v, e, FinFunction(e, v, {}), FinFunction(e, v, {}), {});
  }

  static ResNet from_edges(std::size_t vertices, const std::vector<std::tuple<Index, Index, Resistance>>& edges) {
    FinSet v(vertices), e(edges.size());
    std::vector<Index> s, t;
    std::vector<Resistance> r;
    for (const auto& [a, b, x] : edges) {
      s.push_back(a);
      t.push_back(b);
      r.push_back(x);
    }
    return ResNet(v, e, FinFunction(e, v, std::move(s)), FinFunction(e, v, std::move(t)), std::move(r));
  }

  const FinSet& vertices() const { return v_; }
  const FinSet& edges() const { return e_; }
  const FinFunction& s() const { return s_; }
  const FinFunction& t() const { return t_; }
  const std::vector<Resistance>& r() const { return r_; }

  friend bool operator==(const ResNet& a, const ResNet& b) {
    return a.v_ == b.v_ && a.e_ == b.e_ && a.s_ == b.s_ && a.t_ == b.t_ && a.r_ == b.r_;
  }

 private:
  FinSet v_, e_;
  FinFunction s_, t_;
  std::vector<Resistance> r_;
};

/// A pair (eps on edges, ups on vertices). Construction checks only shapes;
/// validate_morphism checks the commuting squares.
struct ResNetMorphism {
  ResNet dom, cod;
  FinFunction eps;  // edges
  FinFunction ups;  // vertices

  friend bool operator==(const ResNetMorphism& a, const ResNetMorphism& b) {
    return a.dom == b.dom && a.cod == b.cod && a.eps == b.eps && a.ups == b.ups;
  }
};

/// r'∘eps = r, s'∘eps = ups∘s, t'∘eps = ups∘t.
inline bool validate_morphism(const ResNetMorphism& m) {
  if (!(m.eps.dom() == m.dom.edges()) || !(m.eps.cod() == m.cod.edges())) return false;
  if (!(m.ups.dom() == m.dom.vertices()) || !(m.ups.cod() == m.cod.vertices())) return false;
  for (Index e = 0; e < m.dom.edges().size(); ++e) {
    if (m.cod.r()[m.eps(e)] != m.dom.r()[e]) return false;
    if (m.cod.s()(m.eps(e)) != m.ups(m.dom.s()(e))) return false;
    if (m.cod.t()(m.eps(e)) != m.ups(m.dom.t()(e))) return false;
  }
  return true;
}

inline ResNetMorphism checked_morphism(ResNet dom, ResNet cod, FinFunction eps, FinFunction ups) {
  ResNetMorphism m{std::move(dom), std::move(cod), std::move(eps), std::move(ups)};
  if (!validate_morphism(m)) throw invariant_error("ResNetMorphism: squares do not commute");
  return m;
}

inline ResNetMorphism net_identity(const ResNet& n) {
  return {n, n, FinFunction::identity(n.edges()), FinFunction::identity(n.vertices())};
}

/// g after f.
inline ResNetMorphism net_compose(const ResNetMorphism& g, const ResNetMorphism& f) {
  if (!(f.cod == g.dom)) throw composition_error("net_compose: networks do not match");
  return {f.dom, g.cod, compose(g.eps, f.eps), compose(g.ups, f.ups)};
}

inline ResNet empty_net() { return ResNet::edgeless(0); }

inline ResNetMorphism from_empty(const ResNet& n) {
  return {empty_net(), n, from_initial(n.edges()), from_initial(n.vertices())};
}

struct NetCoproduct {
  ResNet apex;
  ResNetMorphism i1, i2;

  /// The unique map out of the coproduct restricting to k1 and k2.
  ResNetMorphism copair(const ResNetMorphism& k1, const ResNetMorphism& k2) const {
    if (!(k1.dom == i1.dom) || !(k2.dom == i2.dom) || !(k1.cod == k2.cod))
      throw composition_error("net copairing: cocone does not match the coproduct");
    auto ce = coproduct(k1.dom.edges(), k2.dom.edges());
    auto cv = coproduct(k1.dom.vertices(), k2.dom.vertices());
    return {apex, k1.cod, ce.copair(k1.eps, k2.eps), cv.copair(k1.ups, k2.ups)};
  }
};

/// Juxtaposition, first network first.
inline NetCoproduct net_coproduct(const ResNet& a, const ResNet& b) {
  auto cv = coproduct(a.vertices(), b.vertices());
  auto ce = coproduct(a.edges(), b.edges());
  std::vector<Index> s, t;
  std::vector<Resistance> r;
  for (Index e = 0; e < a.edges().size(); ++e) {
    s.push_back(cv.i1(a.s()(e)));
    t.push_back(cv.i1(a.t()(e)));
    r.push_back(a.r()[e]);
  }
  for (Index e = 0; e < b.edges().size(); ++e) {
    s.push_back(cv.i2(b.s()(e)));
    t.push_back(cv.i2(b.t()(e)));
    r.push_back(b.r()[e]);
  }
  ResNet n(cv.apex, ce.apex, FinFunction(ce.apex, cv.apex, std::move(s)), FinFunction(ce.apex, cv.apex, std::move(t)),
           std::move(r));
  return {n, {a, n, ce.i1, cv.i1}, {b, n, ce.i2, cv.i2}};
}

struct NetPushout {
  ResNet apex;
  ResNetMorphism in_f, in_g;  // from the codomains of f and g
  Pushout vertices, edges;

  /// The unique map out of the pushout restricting to k1 and k2.
  ResNetMorphism mediate(const ResNetMorphism& k1, const ResNetMorphism& k2) const {
    if (!(k1.dom == in_f.dom) || !(k2.dom == in_g.dom) || !(k1.cod == k2.cod))
      throw composition_error("net_pushout: cocone does not match the pushout");
    return {apex, k1.cod, edges.mediate(k1.eps, k2.eps), vertices.mediate(k1.ups, k2.ups)};
  }
};

/// Juxtaposition of the codomains followed by identifying the images of the
/// common domain, on vertices and edges separately.
inline NetPushout net_pushout(const ResNetMorphism& f, const ResNetMorphism& g) {
  if (!(f.dom == g.dom)) throw composition_error("net_pushout: morphisms do not share a domain");
  if (!validate_morphism(f) || !validate_morphism(g)) throw invariant_error("net_pushout: ill-formed morphism");
  const ResNet &S = f.cod, &T = g.cod;
  auto pv = pushout(f.ups, g.ups);
  auto pe = pushout(f.eps, g.eps);
  const std::size_t ne = pe.apex.size();
  std::vector<Index> s(ne, SIZE_MAX), t(ne, SIZE_MAX);
  std::vector<std::optional<Resistance>> r(ne);
  auto visit = [&](Index cls, Index sv, Index tv, const Resistance& x) {
    if (!r[cls]) {
      s[cls] = sv;
      t[cls] = tv;
      r[cls] = x;
    } else if (s[cls] != sv || t[cls] != tv || *r[cls] != x) {
      throw invariant_error("net_pushout: identified edges disagree on endpoints or resistance");
    }
  };
  for (Index e = 0; e < S.edges().size(); ++e)
    visit(pe.in_f(e), pv.in_f(S.s()(e)), pv.in_f(S.t()(e)), S.r()[e]);
  for (Index e = 0; e < T.edges().size(); ++e)
    visit(pe.in_g(e), pv.in_g(T.s()(e)), pv.in_g(T.t()(e)), T.r()[e]);
  std::vector<Resistance> rs;
  for (auto& x : r) rs.push_back(*x);
  ResNet p(pv.apex, pe.apex, FinFunction(pe.apex, pv.apex, std::move(s)), FinFunction(pe.apex, pv.apex, std::move(t)),
           std::move(rs));
  return {p, {S, p, pe.in_f, pv.in_f}, {T, p, pe.in_g, pv.in_g}, std::move(pv), std::move(pe)};
}

// ---------------------------------------------------------------------------
// ResNet^op

/// An arrow x -> y of ResNet^op, stored as the network map y -> x.
struct OpArrow {
  ResNetMorphism m;
  friend bool operator==(const OpArrow& a, const OpArrow& b) { return a.m == b.m; }
};

struct ResNetOpCategory {
  using Object = ResNet;
  using Arrow = OpArrow;

  static const ResNet& dom(const OpArrow& f) { return f.m.cod; }
  static const ResNet& cod(const OpArrow& f) { return f.m.dom; }
  static OpArrow identity(const ResNet& x) { return {net_identity(x)}; }
  /// g∘f in the opposite category is f.m∘g.m in ResNet.
  static OpArrow compose(const OpArrow& g, const OpArrow& f) { return {net_compose(f.m, g.m)}; }
  static bool same_object(const ResNet& a, const ResNet& b) { return a == b; }
  static ResNet terminal() { return empty_net(); }
  static OpArrow to_terminal(const ResNet& x) { return {from_empty(x)}; }

  static std::optional<OpArrow> inverse(const OpArrow& f) {
    auto e = f.m.eps.inverse();
    auto v = f.m.ups.inverse();
    if (!e || !v) return std::nullopt;
    ResNetMorphism inv{f.m.cod, f.m.dom, *e, *v};
    if (!validate_morphism(inv)) return std::nullopt;
    return OpArrow{inv};
  }

  struct Pullback {
    ResNet apex;
    OpArrow pi_f, pi_g;
    NetPushout po;
    OpArrow mediate(const OpArrow& a, const OpArrow& b) const { return {po.mediate(a.m, b.m)}; }
  };

  static Pullback pullback(const OpArrow& f, const OpArrow& g) {
    auto po = net_pushout(f.m, g.m);
    return {po.apex, {po.in_f}, {po.in_g}, po};
  }

  struct Product {
    ResNet apex;
    OpArrow p1, p2;
    NetCoproduct cp;
    OpArrow pair(const OpArrow& f, const OpArrow& g) const { return {cp.copair(f.m, g.m)}; }
  };

  static Product product(const ResNet& x, const ResNet& y) {
    auto cp = net_coproduct(x, y);
    return {cp.apex, {cp.i1}, {cp.i2}, cp};
  }

  /// Jointly monic in the opposite category: the two network maps into the
  /// common apex jointly cover its vertices and edges.
  static bool jointly_monic(const OpArrow& p, const OpArrow& q) {
    const ResNet& w = p.m.cod;
    std::vector<bool> v(w.vertices().size()), e(w.edges().size());
    for (const auto* m : {&p.m, &q.m}) {
      for (Index x : m->ups.table()) v[x] = true;
      for (Index x : m->eps.table()) e[x] = true;
    }
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; }) &&
           std::all_of(e.begin(), e.end(), [](bool b) { return b; });
  }

  /// The h with p2∘h = p and q2∘h = q when (p2, q2) is jointly monic here.
  static std::optional<OpArrow> factor_through(const OpArrow& p, const OpArrow& q, const OpArrow& p2,
                                               const OpArrow& q2) {
    if (!(p.m.dom == p2.m.dom) || !(q.m.dom == q2.m.dom) || !(p.m.cod == q.m.cod) || !(p2.m.cod == q2.m.cod))
      return std::nullopt;
    const ResNet &w2 = p2.m.cod, &w = p.m.cod;
    auto fill = [](std::size_t n, const FinFunction& a2, const FinFunction& a, const FinFunction& b2,
                   const FinFunction& b) -> std::optional<std::vector<Index>> {
      std::vector<Index> t(n, SIZE_MAX);
      auto put = [&](Index k, Index v) {
        if (t[k] != SIZE_MAX && t[k] != v) return false;
        t[k] = v;
        return true;
      };
      for (Index x = 0; x < a2.dom().size(); ++x)
        if (!put(a2(x), a(x))) return std::nullopt;
      for (Index x = 0; x < b2.dom().size(); ++x)
        if (!put(b2(x), b(x))) return std::nullopt;
      for (Index v : t)
        if (v == SIZE_MAX) return std::nullopt;
      return t;
    };
    auto ups = fill(w2.vertices().size(), p2.m.ups, p.m.ups, q2.m.ups, q.m.ups);
    auto eps = fill(w2.edges().size(), p2.m.eps, p.m.eps, q2.m.eps, q.m.eps);
    if (!ups || !eps) return std::nullopt;
    ResNetMorphism h{w2, w, FinFunction(w2.edges(), w.edges(), std::move(*eps)),
                     FinFunction(w2.vertices(), w.vertices(), std::move(*ups))};
    if (!validate_morphism(h)) return std::nullopt;
    return OpArrow{h};
  }
};

static_assert(FiniteLimitCategory<ResNetOpCategory>);

// ---------------------------------------------------------------------------
// Cospans and circuits

using NetCospan = Span<ResNetOpCategory>;
using NetCospanMap = SpanMap<ResNetOpCategory>;

/// src_foot -> apex <- tgt_foot
inline NetCospan make_cospan(const ResNetMorphism& src_leg, const ResNetMorphism& tgt_leg) {
  if (!validate_morphism(src_leg) || !validate_morphism(tgt_leg))
    throw invariant_error("make_cospan: legs are not network morphisms");
  return NetCospan(OpArrow{src_leg}, OpArrow{tgt_leg});
}

inline const ResNetMorphism& src_leg(const NetCospan& c) { return c.src_leg().m; }
inline const ResNetMorphism& tgt_leg(const NetCospan& c) { return c.tgt_leg().m; }

/// c2 after c1, by pushout over the shared foot.
inline NetCospan cospan_compose(const NetCospan& c2, const NetCospan& c1) { return compose_spans(c2, c1); }

inline NetCospan cospan_tensor(const NetCospan& c1, const NetCospan& c2) { return tensor_spans(c1, c2); }

class Circuit {
 public:
  explicit Circuit(NetCospan c) : c_(std::move(c)) {
    if (c_.src().edges().size() != 0 || c_.tgt().edges().size() != 0)
      throw invariant_error("Circuit: feet must have no edges");
  }

  const NetCospan& cospan() const { return c_; }

  friend bool operator==(const Circuit& a, const Circuit& b) { return a.c_ == b.c_; }

 private:
  NetCospan c_;
};

inline Circuit circuit_compose(const Circuit& c2, const Circuit& c1) {
  return Circuit(cospan_compose(c2.cospan(), c1.cospan()));
}

inline Circuit circuit_tensor(const Circuit& c1, const Circuit& c2) {
  return Circuit(cospan_tensor(c1.cospan(), c2.cospan()));
}

/// A circuit with a single resistor from input vertex 0 to output vertex 1.
inline Circuit single_resistor(const Resistance& r) {
  ResNet foot = ResNet::edgeless(1);
  ResNet apex = ResNet::from_edges(2, {{0, 1, r}});
  FinSet none(0);
  auto in = checked_morphism(foot, apex, FinFunction(none, apex.edges(), {}), FinFunction(foot.vertices(), apex.vertices(), {0}));
  auto out = checked_morphism(foot, apex, FinFunction(none, apex.edges(), {}), FinFunction(foot.vertices(), apex.vertices(), {1}));
  return Circuit(make_cospan(in, out));
}

/// The self-duality of an edgeless foot: unit and counit are the cospans
/// built from the codiagonal and the map out of the empty network.
inline DualityData<ResNetOpCategory> circuit_duality(const ResNet& foot) {
  if (foot.edges().size() != 0) throw invariant_error("circuit_duality: foot has edges");
  return duality<ResNetOpCategory>(foot);
}

inline NetCospanMap circuit_swallowtail(const ResNet& foot) {
  if (foot.edges().size() != 0) throw invariant_error("circuit_swallowtail: foot has edges");
  return swallowtail_check<ResNetOpCategory>(foot);
}

}  // namespace cobicat
