#pragma once

// The compact closed bicategory of spans in a category with finite limits.
//
// 1-cells are spans  src <- apex -> tgt,  2-cells are maps of apexes that
// commute with both legs on the nose. Every structure cell is produced from
// a pullback or product universal property, so coherence laws can be checked
// as exact equalities of arrows.

#include <string>
#include <vector>

#include "cobicat/category.hpp"

namespace cobicat {

template <FiniteLimitCategory C>
class Span {
 public:
  using Object = typename C::Object;
  using Arrow = typename C::Arrow;

  Span(Arrow src_leg, Arrow tgt_leg) : src_leg_(std::move(src_leg)), tgt_leg_(std::move(tgt_leg)) {
    if (!C::same_object(C::dom(src_leg_), C::dom(tgt_leg_)))
      throw invariant_error("Span: legs do not share an apex");
  }

  const Object& apex() const { return C::dom(src_leg_); }
  const Object& src() const { return C::cod(src_leg_); }
  const Object& tgt() const { return C::cod(tgt_leg_); }
  const Arrow& src_leg() const { return src_leg_; }
  const Arrow& tgt_leg() const { return tgt_leg_; }

  bool parallel_to(const Span& o) const { return C::same_object(src(), o.src()) && C::same_object(tgt(), o.tgt()); }

  friend bool operator==(const Span& a, const Span& b) {
    return a.src_leg_ == b.src_leg_ && a.tgt_leg_ == b.tgt_leg_;
  }

 private:
  Arrow src_leg_;
  Arrow tgt_leg_;
};

template <FiniteLimitCategory C>
class SpanMap {
 public:
  using Arrow = typename C::Arrow;

  SpanMap(Span<C> from, Span<C> to, Arrow h) : from_(std::move(from)), to_(std::move(to)), h_(std::move(h)) {
    if (!from_.parallel_to(to_)) throw composition_error("SpanMap: spans are not parallel");
    if (!C::same_object(C::dom(h_), from_.apex()) || !C::same_object(C::cod(h_), to_.apex()))
      throw composition_error("SpanMap: apex map has the wrong boundary");
    if (!(C::compose(to_.src_leg(), h_) == from_.src_leg()))
      throw invariant_error("SpanMap: source legs do not commute");
    if (!(C::compose(to_.tgt_leg(), h_) == from_.tgt_leg()))
      throw invariant_error("SpanMap: target legs do not commute");
  }

  const Span<C>& from() const { return from_; }
  const Span<C>& to() const { return to_; }
  const Arrow& h() const { return h_; }

  friend bool operator==(const SpanMap& a, const SpanMap& b) {
    return a.from_ == b.from_ && a.to_ == b.to_ && a.h_ == b.h_;
  }

 private:
  Span<C> from_;
  Span<C> to_;
  Arrow h_;
};

using FinSpan = Span<FinSetCategory>;
using FinSpanMap = SpanMap<FinSetCategory>;

// ---------------------------------------------------------------------------
// 1-cells

template <FiniteLimitCategory C>
Span<C> id_span(const typename C::Object& a) {
  return Span<C>(C::identity(a), C::identity(a));
}

/// The span  dom f <- dom f -> cod f  of an arrow.
template <FiniteLimitCategory C>
Span<C> graph_span(const typename C::Arrow& f) {
  return Span<C>(C::identity(C::dom(f)), f);
}

/// Legs swapped. This is the dual of a 1-cell, and the adjoint of a graph span
/// of an isomorphism.
template <FiniteLimitCategory C>
Span<C> reverse_span(const Span<C>& s) {
  return Span<C>(s.tgt_leg(), s.src_leg());
}

namespace detail {

template <FiniteLimitCategory C>
struct Composite {
  using Cone = decltype(C::pullback(std::declval<typename C::Arrow>(), std::declval<typename C::Arrow>()));
  Cone pb;  // pi_f into r's apex, pi_g into s's apex
  Span<C> span;
};

template <FiniteLimitCategory C>
Composite<C> composite(const Span<C>& s, const Span<C>& r) {
  if (!C::same_object(r.tgt(), s.src())) throw composition_error("compose_spans: boundary mismatch");
  auto pb = C::pullback(r.tgt_leg(), s.src_leg());
  Span<C> sp(C::compose(r.src_leg(), pb.pi_f), C::compose(s.tgt_leg(), pb.pi_g));
  return {std::move(pb), std::move(sp)};
}

}  // namespace detail

/// s after r, by pullback of r's target leg against s's source leg.
template <FiniteLimitCategory C>
Span<C> compose_spans(const Span<C>& s, const Span<C>& r) {
  return detail::composite(s, r).span;
}

/// cells[n-1] ∘ (... ∘ (cells[1] ∘ cells[0])).
template <FiniteLimitCategory C>
Span<C> compose_chain(const std::vector<Span<C>>& cells) {
  if (cells.empty()) throw composition_error("compose_chain: empty chain");
  Span<C> acc = cells.front();
  for (std::size_t k = 1; k < cells.size(); ++k) acc = compose_spans(cells[k], acc);
  return acc;
}

template <FiniteLimitCategory C>
Span<C> tensor_spans(const Span<C>& s, const Span<C>& r) {
  return Span<C>(cartesian::product_map<C>(s.src_leg(), r.src_leg()),
                 cartesian::product_map<C>(s.tgt_leg(), r.tgt_leg()));
}

/// b_{A,B}: A⊗B -> B⊗A, apex A⊗B with legs (1, σ).
template <FiniteLimitCategory C>
Span<C> braiding_span(const typename C::Object& a, const typename C::Object& b) {
  return graph_span<C>(cartesian::swap<C>(a, b));
}

/// a_{A,B,C}: (A⊗B)⊗C -> A⊗(B⊗C)
template <FiniteLimitCategory C>
Span<C> associator_1cell(const typename C::Object& a, const typename C::Object& b, const typename C::Object& c) {
  return graph_span<C>(cartesian::reassociate<C>(a, b, c));
}

/// a•_{A,B,C}: A⊗(B⊗C) -> (A⊗B)⊗C
template <FiniteLimitCategory C>
Span<C> associator_adjoint(const typename C::Object& a, const typename C::Object& b, const typename C::Object& c) {
  return reverse_span(associator_1cell<C>(a, b, c));
}

/// l_A: I⊗A -> A
template <FiniteLimitCategory C>
Span<C> left_unitor_1cell(const typename C::Object& a) {
  return graph_span<C>(cartesian::left_unit<C>(a));
}

/// r_A: A⊗I -> A
template <FiniteLimitCategory C>
Span<C> right_unitor_1cell(const typename C::Object& a) {
  return graph_span<C>(cartesian::right_unit<C>(a));
}

// ---------------------------------------------------------------------------
// 2-cells

template <FiniteLimitCategory C>
SpanMap<C> identity_map(const Span<C>& s) {
  return SpanMap<C>(s, s, C::identity(s.apex()));
}

template <FiniteLimitCategory C>
bool is_identity(const SpanMap<C>& m) {
  return m.from() == m.to() && m.h() == C::identity(m.from().apex());
}

template <FiniteLimitCategory C>
bool is_invertible(const SpanMap<C>& m) {
  return C::inverse(m.h()).has_value();
}

template <FiniteLimitCategory C>
SpanMap<C> invert(const SpanMap<C>& m) {
  auto inv = C::inverse(m.h());
  if (!inv) throw invariant_error("invert: 2-cell is not invertible");
  return SpanMap<C>(m.to(), m.from(), *inv);
}

/// m2 after m1.
template <FiniteLimitCategory C>
SpanMap<C> vcompose(const SpanMap<C>& m2, const SpanMap<C>& m1) {
  if (!(m1.to() == m2.from())) throw composition_error("vcompose: 2-cells are not composable");
  return SpanMap<C>(m1.from(), m2.to(), C::compose(m2.h(), m1.h()));
}

/// Horizontal composite m2 ∘ m1 : s∘r => s'∘r' for m1: r => r', m2: s => s'.
template <FiniteLimitCategory C>
SpanMap<C> hcompose(const SpanMap<C>& m2, const SpanMap<C>& m1) {
  auto src = detail::composite(m2.from(), m1.from());
  auto tgt = detail::composite(m2.to(), m1.to());
  auto h = tgt.pb.mediate(C::compose(m1.h(), src.pb.pi_f), C::compose(m2.h(), src.pb.pi_g));
  return SpanMap<C>(src.span, tgt.span, std::move(h));
}

/// (t∘s)∘r => t∘(s∘r)
template <FiniteLimitCategory C>
SpanMap<C> associator_span(const Span<C>& t, const Span<C>& s, const Span<C>& r) {
  auto ts = detail::composite(t, s);
  auto left = detail::composite(ts.span, r);
  auto sr = detail::composite(s, r);
  auto right = detail::composite(t, sr.span);
  auto to_sr = sr.pb.mediate(left.pb.pi_f, C::compose(ts.pb.pi_f, left.pb.pi_g));
  auto h = right.pb.mediate(to_sr, C::compose(ts.pb.pi_g, left.pb.pi_g));
  return SpanMap<C>(left.span, right.span, std::move(h));
}

enum class Side { left, right };

/// left: 1_B ∘ r => r;  right: r ∘ 1_A => r.
template <FiniteLimitCategory C>
SpanMap<C> unitor_span(Side side, const Span<C>& r) {
  if (side == Side::left) {
    auto c = detail::composite(id_span<C>(r.tgt()), r);
    return SpanMap<C>(c.span, r, c.pb.pi_f);
  }
  auto c = detail::composite(r, id_span<C>(r.src()));
  return SpanMap<C>(c.span, r, c.pb.pi_g);
}

template <FiniteLimitCategory C>
SpanMap<C> tensor_maps(const SpanMap<C>& m1, const SpanMap<C>& m2) {
  return SpanMap<C>(tensor_spans(m1.from(), m2.from()), tensor_spans(m1.to(), m2.to()),
                    cartesian::product_map<C>(m1.h(), m2.h()));
}

/// (s⊗s2)∘(r⊗r2) => (s∘r)⊗(s2∘r2)
template <FiniteLimitCategory C>
SpanMap<C> tensorator(const Span<C>& s, const Span<C>& s2, const Span<C>& r, const Span<C>& r2) {
  auto src = detail::composite(tensor_spans(s, s2), tensor_spans(r, r2));
  auto sr = detail::composite(s, r);
  auto sr2 = detail::composite(s2, r2);
  auto pr = C::product(r.apex(), r2.apex());
  auto ps = C::product(s.apex(), s2.apex());
  auto tgt = C::product(sr.span.apex(), sr2.span.apex());
  auto first = sr.pb.mediate(C::compose(pr.p1, src.pb.pi_f), C::compose(ps.p1, src.pb.pi_g));
  auto second = sr2.pb.mediate(C::compose(pr.p2, src.pb.pi_f), C::compose(ps.p2, src.pb.pi_g));
  return SpanMap<C>(src.span, tensor_spans(sr.span, sr2.span), tgt.pair(first, second));
}

/// 1_{A⊗B} => 1_A ⊗ 1_B
template <FiniteLimitCategory C>
SpanMap<C> tensor_identity_iso(const typename C::Object& a, const typename C::Object& b) {
  Span<C> from = id_span<C>(cartesian::tensor<C>(a, b));
  return SpanMap<C>(from, tensor_spans(id_span<C>(a), id_span<C>(b)), C::identity(from.apex()));
}

/// The strict isomap between parallel spans whose target has an invertible
/// source leg: h = (to.src_leg)^-1 ∘ from.src_leg. Throws when the target
/// legs then fail to commute, i.e. when the underlying polygon of arrows
/// does not commute on the nose.
template <FiniteLimitCategory C>
SpanMap<C> strict_isomap(const Span<C>& from, const Span<C>& to) {
  if (!from.parallel_to(to)) throw composition_error("strict_isomap: spans are not parallel");
  auto inv = C::inverse(to.src_leg());
  if (!inv) throw invariant_error("strict_isomap: target source leg is not invertible");
  return SpanMap<C>(from, to, C::compose(*inv, from.src_leg()));
}

/// The unique map into a jointly monic span.
template <FiniteLimitCategory C>
SpanMap<C> jointly_monic_map(const Span<C>& from, const Span<C>& to) {
  if (!from.parallel_to(to)) throw composition_error("jointly_monic_map: spans are not parallel");
  auto h = C::factor_through(from.src_leg(), from.tgt_leg(), to.src_leg(), to.tgt_leg());
  if (!h) throw invariant_error("jointly_monic_map: no map of spans into the target");
  return SpanMap<C>(from, to, *h);
}

// ---------------------------------------------------------------------------
// Monoidal structure modifications

enum class Modification { pentagonator, lambda, mu, rho, hexagon_R, hexagon_S, syllepsis };

inline const char* to_string(Modification k) {
  switch (k) {
    case Modification::pentagonator: return "pi";
    case Modification::lambda: return "lambda";
    case Modification::mu: return "mu";
    case Modification::rho: return "rho";
    case Modification::hexagon_R: return "R";
    case Modification::hexagon_S: return "S";
    case Modification::syllepsis: return "v";
  }
  return "?";
}

inline std::size_t modification_arity(Modification k) {
  switch (k) {
    case Modification::pentagonator: return 4;
    case Modification::syllepsis: return 2;
    default: return 3;
  }
}

/// Source and target 1-cells of a structure modification.
template <FiniteLimitCategory C>
std::pair<Span<C>, Span<C>> modification_boundary(Modification kind, const std::vector<typename C::Object>& obs) {
  using S = Span<C>;
  if (obs.size() != modification_arity(kind))
    throw composition_error(std::string("structural_modification: ") + to_string(kind) + " takes " +
                            std::to_string(modification_arity(kind)) + " objects, got " +
                            std::to_string(obs.size()));
  auto unit_at = [&](std::size_t k) {
    if (!C::same_object(obs[k], C::terminal()))
      throw composition_error(std::string("structural_modification: ") + to_string(kind) +
                              " expects the monoidal unit in position " + std::to_string(k));
  };
  auto t = [](const auto& x, const auto& y) { return cartesian::tensor<C>(x, y); };
  auto id = [](const auto& x) { return id_span<C>(x); };
  auto a = [](const auto& x, const auto& y, const auto& z) { return associator_1cell<C>(x, y, z); };
  auto ad = [](const auto& x, const auto& y, const auto& z) { return associator_adjoint<C>(x, y, z); };
  auto b = [](const auto& x, const auto& y) { return braiding_span<C>(x, y); };

  switch (kind) {
    case Modification::pentagonator: {
      const auto &A = obs[0], &B = obs[1], &Cc = obs[2], &D = obs[3];
      S from = compose_chain<C>({tensor_spans(a(A, B, Cc), id(D)), a(A, t(B, Cc), D), tensor_spans(id(A), a(B, Cc, D))});
      S to = compose_chain<C>({a(t(A, B), Cc, D), a(A, B, t(Cc, D))});
      return {from, to};
    }
    case Modification::lambda: {
      unit_at(0);
      const auto &I = obs[0], &A = obs[1], &B = obs[2];
      return {tensor_spans(left_unitor_1cell<C>(A), id(B)), compose_chain<C>({a(I, A, B), left_unitor_1cell<C>(t(A, B))})};
    }
    case Modification::mu: {
      unit_at(1);
      const auto &A = obs[0], &I = obs[1], &B = obs[2];
      return {compose_chain<C>({a(A, I, B), tensor_spans(id(A), left_unitor_1cell<C>(B))}),
              tensor_spans(right_unitor_1cell<C>(A), id(B))};
    }
    case Modification::rho: {
      unit_at(2);
      const auto &A = obs[0], &B = obs[1], &I = obs[2];
      return {right_unitor_1cell<C>(t(A, B)), compose_chain<C>({a(A, B, I), tensor_spans(id(A), right_unitor_1cell<C>(B))})};
    }
    case Modification::hexagon_R: {
      const auto &A = obs[0], &B = obs[1], &Cc = obs[2];
      S from = compose_chain<C>({a(A, B, Cc), b(A, t(B, Cc)), a(B, Cc, A)});
      S to = compose_chain<C>({tensor_spans(b(A, B), id(Cc)), a(B, A, Cc), tensor_spans(id(B), b(A, Cc))});
      return {from, to};
    }
    case Modification::hexagon_S: {
      const auto &A = obs[0], &B = obs[1], &Cc = obs[2];
      S from = compose_chain<C>({ad(A, B, Cc), b(t(A, B), Cc), ad(Cc, A, B)});
      S to = compose_chain<C>({tensor_spans(id(A), b(B, Cc)), ad(A, Cc, B), tensor_spans(b(A, Cc), id(B))});
      return {from, to};
    }
    case Modification::syllepsis: {
      const auto &A = obs[0], &B = obs[1];
      return {id(t(A, B)), compose_chain<C>({b(A, B), b(B, A)})};
    }
  }
  throw composition_error("structural_modification: unknown kind");
}

/// The canonical strict isomap filling the polygon of the given kind. Every
/// boundary 1-cell is a composite of graph spans, so the cell is determined
/// by the invertible source leg of its target.
template <FiniteLimitCategory C>
SpanMap<C> structural_modification(Modification kind, const std::vector<typename C::Object>& obs) {
  auto [from, to] = modification_boundary<C>(kind, obs);
  return strict_isomap(from, to);
}

// ---------------------------------------------------------------------------
// Duals

template <FiniteLimitCategory C>
struct DualityData {
  typename C::Object object;  // A, self-dual
  Span<C> unit;               // i: I -> A⊗A
  Span<C> counit;             // e: A⊗A -> I
  SpanMap<C> zeta;            // 1_A => r∘(A⊗e)∘a∘(i⊗A)∘l•
  SpanMap<C> theta;           // 1_A* => l∘(e⊗A*)∘a•∘(A*⊗i)∘r•
};

/// i_A: I -> A⊗A with apex A and legs (!, Δ).
template <FiniteLimitCategory C>
Span<C> unit_span(const typename C::Object& a) {
  return Span<C>(C::to_terminal(a), cartesian::diagonal<C>(a));
}

/// e_A: A⊗A -> I, the reverse of i_A.
template <FiniteLimitCategory C>
Span<C> counit_span(const typename C::Object& a) {
  return reverse_span(unit_span<C>(a));
}

/// The zig-zag composite r ∘ (A⊗e) ∘ a ∘ (i⊗A) ∘ l•  : A -> A.
template <FiniteLimitCategory C>
Span<C> zeta_composite(const typename C::Object& a) {
  return compose_chain<C>({reverse_span(left_unitor_1cell<C>(a)),
                           tensor_spans(unit_span<C>(a), id_span<C>(a)),
                           associator_1cell<C>(a, a, a),
                           tensor_spans(id_span<C>(a), counit_span<C>(a)),
                           right_unitor_1cell<C>(a)});
}

/// The zig-zag composite l ∘ (e⊗A*) ∘ a• ∘ (A*⊗i) ∘ r•  : A* -> A*.
template <FiniteLimitCategory C>
Span<C> theta_composite(const typename C::Object& a) {
  return compose_chain<C>({reverse_span(right_unitor_1cell<C>(a)),
                           tensor_spans(id_span<C>(a), unit_span<C>(a)),
                           associator_adjoint<C>(a, a, a),
                           tensor_spans(counit_span<C>(a), id_span<C>(a)),
                           left_unitor_1cell<C>(a)});
}

template <FiniteLimitCategory C>
DualityData<C> duality(const typename C::Object& a) {
  return {a, unit_span<C>(a), counit_span<C>(a), strict_isomap(id_span<C>(a), zeta_composite<C>(a)),
          strict_isomap(id_span<C>(a), theta_composite<C>(a))};
}

/// The swallowtail pasting as a vertical chain of 2-cells i => i.
///
/// Linearization, read top to bottom:
///   i  => 1_{AA*} ∘ i               inverse left unitor for composition
///      => (1_A ⊗ 1_A*) ∘ i          tensor of identities, whiskered by i
///      => (z ⊗ 1_A*) ∘ i            (ζ A*) ∘ i
///      => (1_A ⊗ t) ∘ i             the unlabeled iso cell
///      => (1_A ⊗ 1_A*) ∘ i          (A θ^-1) ∘ i
///      => 1_{AA*} ∘ i               inverse of the second step
///      => i                         left unitor
/// where z and t are the zig-zag composites of ζ and θ. The unlabeled cell
/// relates two spans that are both isomorphic to the jointly monic i, and is
/// taken to be the unique map of spans between them.
template <FiniteLimitCategory C>
struct SwallowtailPasting {
  DualityData<C> data;
  std::vector<SpanMap<C>> steps;
  SpanMap<C> zeta_side;   // (ζ A*) ∘ i
  SpanMap<C> theta_side;  // (A θ^-1) ∘ i
  SpanMap<C> total;
};

template <FiniteLimitCategory C>
SwallowtailPasting<C> swallowtail_pasting(const typename C::Object& a) {
  auto d = duality<C>(a);
  const Span<C>& i = d.unit;
  const auto id_i = identity_map(i);
  const auto id_a = identity_map(id_span<C>(a));

  auto s1 = invert(unitor_span(Side::left, i));
  auto s2 = hcompose(tensor_identity_iso<C>(a, a), id_i);
  auto zeta_side = hcompose(tensor_maps(d.zeta, id_a), id_i);
  auto theta_side = hcompose(tensor_maps(id_a, invert(d.theta)), id_i);
  auto middle = jointly_monic_map(zeta_side.to(), theta_side.from());
  auto s6 = invert(s2);
  auto s7 = unitor_span(Side::left, i);

  std::vector<SpanMap<C>> steps{s1, s2, zeta_side, middle, theta_side, s6, s7};
  SpanMap<C> total = steps.front();
  for (std::size_t k = 1; k < steps.size(); ++k) total = vcompose(steps[k], total);
  return {std::move(d), std::move(steps), std::move(zeta_side), std::move(theta_side), std::move(total)};
}

/// The pasted swallowtail 2-cell i_A => i_A. It is the identity whenever the
/// compact closed structure is coherent.
template <FiniteLimitCategory C>
SpanMap<C> swallowtail_check(const typename C::Object& a) {
  return swallowtail_pasting<C>(a).total;
}

}  // namespace cobicat
