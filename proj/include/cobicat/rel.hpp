#pragma once

// Rel as the jointly monic spans of finite sets. A relation is stored as a
// span whose apex enumerates its pairs in ascending (src, tgt) order.

#include <algorithm>
#include <utility>
#include <vector>

#include "cobicat/span.hpp"

namespace cobicat {

class Relation {
 public:
  /// Throws unless the legs of s are jointly monic.
  explicit Relation(const FinSpan& s) : span_(canonical(s)) {}

  static Relation from_pairs(const FinSet& src, const FinSet& tgt, std::vector<std::pair<Index, Index>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<Index> p, q;
    for (auto [x, y] : pairs) {
      p.push_back(x);
      q.push_back(y);
    }
    FinSet apex(pairs.size());
    return Relation(FinSpan(FinFunction(apex, src, std::move(p)), FinFunction(apex, tgt, std::move(q))));
  }

  const FinSpan& span() const { return span_; }
  const FinSet& src() const { return span_.src(); }
  const FinSet& tgt() const { return span_.tgt(); }
  std::size_t size() const { return span_.apex().size(); }

  std::vector<std::pair<Index, Index>> pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index k = 0; k < size(); ++k) out.emplace_back(span_.src_leg()(k), span_.tgt_leg()(k));
    return out;
  }

  bool contains(Index x, Index y) const {
    auto ps = pairs();
    return std::binary_search(ps.begin(), ps.end(), std::make_pair(x, y));
  }

  friend bool operator==(const Relation& a, const Relation& b) { return a.span_ == b.span_; }

 private:
  static FinSpan canonical(const FinSpan& s) {
    if (!jointly_monic(s.src_leg(), s.tgt_leg())) throw invariant_error("Relation: legs are not jointly monic");
    std::vector<std::pair<Index, Index>> ps;
    for (Index k = 0; k < s.apex().size(); ++k) ps.emplace_back(s.src_leg()(k), s.tgt_leg()(k));
    if (std::is_sorted(ps.begin(), ps.end())) return s;
    std::sort(ps.begin(), ps.end());
    std::vector<Index> p, q;
    for (auto [x, y] : ps) {
      p.push_back(x);
      q.push_back(y);
    }
    return FinSpan(FinFunction(s.apex(), s.src(), std::move(p)), FinFunction(s.apex(), s.tgt(), std::move(q)));
  }

  FinSpan span_;
};

/// Reflection of a span onto its joint image.
inline Relation span_to_rel(const FinSpan& s) {
  auto im = image_factorization(s.src_leg(), s.tgt_leg());
  return Relation(FinSpan(im.left, im.right));
}

inline Relation rel_identity(const FinSet& a) { return Relation(id_span<FinSetCategory>(a)); }

/// t after s.
inline Relation rel_compose(const Relation& t, const Relation& s) {
  return span_to_rel(compose_spans(t.span(), s.span()));
}

inline Relation rel_compose_chain(const std::vector<Relation>& rs) {
  if (rs.empty()) throw composition_error("rel_compose_chain: empty chain");
  Relation acc = rs.front();
  for (std::size_t k = 1; k < rs.size(); ++k) acc = rel_compose(rs[k], acc);
  return acc;
}

/// Whether s is contained in t, i.e. whether a map of spans s => t exists.
inline bool rel_leq(const Relation& s, const Relation& t) {
  if (!s.span().parallel_to(t.span())) throw composition_error("rel_leq: relations are not parallel");
  return FinSetCategory::factor_through(s.span().src_leg(), s.span().tgt_leg(), t.span().src_leg(),
                                        t.span().tgt_leg())
      .has_value();
}

inline Relation rel_tensor(const Relation& s, const Relation& t) {
  return Relation(tensor_spans(s.span(), t.span()));
}

inline Relation rel_dual(const Relation& s) { return Relation(reverse_span(s.span())); }

struct RelCompactStructure {
  FinSet object;
  Relation unit;
  Relation counit;
  Relation braiding;
  bool structure_jointly_monic;  // unit, counit, braiding, associators and unitors
  Relation zeta_composite;       // r∘(A⊗e)∘a∘(i⊗A)∘l• computed in Rel
  Relation theta_composite;      // l∘(e⊗A)∘a•∘(A⊗i)∘r• computed in Rel
};

/// The compact closed structure of Span restricted to A. Every structure
/// 1-cell is checked to be jointly monic already, and the zig-zag
/// composites are recomputed with relational composition.
inline RelCompactStructure rel_compact_structure(const FinSet& a) {
  using C = FinSetCategory;
  std::vector<FinSpan> cells{unit_span<C>(a),
                             counit_span<C>(a),
                             braiding_span<C>(a, a),
                             associator_1cell<C>(a, a, a),
                             associator_adjoint<C>(a, a, a),
                             left_unitor_1cell<C>(a),
                             right_unitor_1cell<C>(a),
                             reverse_span(left_unitor_1cell<C>(a)),
                             reverse_span(right_unitor_1cell<C>(a))};
  bool monic = true;
  for (const auto& c : cells) monic = monic && jointly_monic(c.src_leg(), c.tgt_leg()) && span_to_rel(c).span() == c;

  Relation i = span_to_rel(cells[0]);
  Relation e = span_to_rel(cells[1]);
  Relation id = rel_identity(a);
  Relation zeta = rel_compose_chain({span_to_rel(cells[7]), rel_tensor(i, id), span_to_rel(cells[3]),
                                     rel_tensor(id, e), span_to_rel(cells[6])});
  Relation theta = rel_compose_chain({span_to_rel(cells[8]), rel_tensor(id, i), span_to_rel(cells[4]),
                                      rel_tensor(e, id), span_to_rel(cells[5])});
  return {a, i, e, span_to_rel(cells[2]), monic, zeta, theta};
}

}  // namespace cobicat
