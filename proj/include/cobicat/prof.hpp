#pragma once

// Finite categories and profunctors between them. A profunctor P: X ↛ Y is
// a functor X^op × Y -> FinSet, composed by coends over the inner object.
//
// Action conventions: for g: x -> x' the left action maps P(x', y) -> P(x, y);
// for h: y -> y' the right action maps P(x, y) -> P(x, y').

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cobicat/finset.hpp"

namespace cobicat {

inline constexpr Index no_index = std::numeric_limits<Index>::max();

class FinCat {
 public:
  FinCat() = default;

  /// comp[g * morphisms + f] is g∘f, or no_index when tgt(f) != src(g).
  FinCat(std::size_t objects, std::vector<Index> src, std::vector<Index> tgt, std::vector<Index> id,
         std::vector<Index> comp)
      : objects_(objects), src_(std::move(src)), tgt_(std::move(tgt)), id_(std::move(id)), comp_(std::move(comp)) {
    const std::size_t m = src_.size();
    if (tgt_.size() != m) throw invariant_error("FinCat: source and target tables differ in length");
    if (id_.size() != objects_) throw invariant_error("FinCat: identity table has the wrong length");
    if (comp_.size() != m * m) throw invariant_error("FinCat: composition table has the wrong size");
    for (Index f = 0; f < m; ++f)
      if (src_[f] >= objects_ || tgt_[f] >= objects_) throw invariant_error("FinCat: object index out of range");
    for (Index x : id_)
      if (x >= m) throw invariant_error("FinCat: identity is not a morphism");
    for (Index x : comp_)
      if (x != no_index && x >= m) throw invariant_error("FinCat: composite is not a morphism");
  }

  std::size_t objects() const { return objects_; }
  std::size_t morphisms() const { return src_.size(); }
  Index src(Index f) const { return src_[f]; }
  Index tgt(Index f) const { return tgt_[f]; }
  Index id(Index x) const { return id_[x]; }
  /// g∘f
  Index comp(Index g, Index f) const { return comp_[g * morphisms() + f]; }

  const std::vector<Index>& src_table() const { return src_; }
  const std::vector<Index>& tgt_table() const { return tgt_; }
  const std::vector<Index>& id_table() const { return id_; }
  const std::vector<Index>& comp_table() const { return comp_; }

  FinSet object_set() const { return FinSet(objects_); }
  FinSet morphism_set() const { return FinSet(morphisms()); }

  /// Morphisms a -> b in ascending index order.
  std::vector<Index> hom(Index a, Index b) const {
    std::vector<Index> out;
    for (Index f = 0; f < morphisms(); ++f)
      if (src_[f] == a && tgt_[f] == b) out.push_back(f);
    return out;
  }

  /// Position of f within hom(src f, tgt f).
  Index hom_position(Index f) const {
    Index k = 0;
    for (Index g = 0; g < f; ++g)
      if (src_[g] == src_[f] && tgt_[g] == tgt_[f]) ++k;
    return k;
  }

  friend bool operator==(const FinCat& a, const FinCat& b) {
    return a.objects_ == b.objects_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.id_ == b.id_ && a.comp_ == b.comp_;
  }

 private:
  std::size_t objects_ = 0;
  std::vector<Index> src_, tgt_, id_, comp_;
};

/// All category axioms, checked exhaustively.
inline bool validate_fincat(const FinCat& c) {
  const std::size_t m = c.morphisms();
  for (Index x = 0; x < c.objects(); ++x)
    if (c.src(c.id(x)) != x || c.tgt(c.id(x)) != x) return false;
  for (Index g = 0; g < m; ++g)
    for (Index f = 0; f < m; ++f) {
      Index gf = c.comp(g, f);
      if ((c.tgt(f) == c.src(g)) != (gf != no_index)) return false;
      if (gf != no_index && (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))) return false;
    }
  for (Index f = 0; f < m; ++f)
    if (c.comp(c.id(c.tgt(f)), f) != f || c.comp(f, c.id(c.src(f))) != f) return false;
  for (Index h = 0; h < m; ++h)
    for (Index g = 0; g < m; ++g) {
      if (c.tgt(g) != c.src(h)) continue;
      for (Index f = 0; f < m; ++f) {
        if (c.tgt(f) != c.src(g)) continue;
        if (c.comp(c.comp(h, g), f) != c.comp(h, c.comp(g, f))) return false;
      }
    }
  return true;
}

inline FinCat op(const FinCat& c) {
  const std::size_t m = c.morphisms();
  std::vector<Index> comp(m * m);
  for (Index g = 0; g < m; ++g)
    for (Index f = 0; f < m; ++f) comp[g * m + f] = c.comp(f, g);
  return FinCat(c.objects(), c.tgt_table(), c.src_table(), c.id_table(), std::move(comp));
}

/// Objects (a, b) flatten to a·|B| + b, morphisms likewise.
inline FinCat product(const FinCat& a, const FinCat& b) {
  const std::size_t ma = a.morphisms(), mb = b.morphisms(), m = ma * mb, ob = b.objects();
  std::vector<Index> src(m), tgt(m), id(a.objects() * ob), comp(m * m, no_index);
  for (Index f = 0; f < ma; ++f)
    for (Index g = 0; g < mb; ++g) {
      src[f * mb + g] = a.src(f) * ob + b.src(g);
      tgt[f * mb + g] = a.tgt(f) * ob + b.tgt(g);
    }
  for (Index x = 0; x < a.objects(); ++x)
    for (Index y = 0; y < ob; ++y) id[x * ob + y] = a.id(x) * mb + b.id(y);
  for (Index u = 0; u < m; ++u)
    for (Index v = 0; v < m; ++v) {
      Index f = a.comp(u / mb, v / mb), g = b.comp(u % mb, v % mb);
      if (f != no_index && g != no_index) comp[u * m + v] = f * mb + g;
    }
  return FinCat(a.objects() * ob, std::move(src), std::move(tgt), std::move(id), std::move(comp));
}

inline FinCat discrete_category(std::size_t n) {
  std::vector<Index> ids(n), comp(n * n, no_index);
  for (Index k = 0; k < n; ++k) {
    ids[k] = k;
    comp[k * n + k] = k;
  }
  return FinCat(n, ids, ids, ids, std::move(comp));
}

inline FinCat terminal_category() { return discrete_category(1); }

/// 0 -> 1, with morphisms id_0, id_1, f.
inline FinCat walking_arrow() {
  const Index N = no_index;
  return FinCat(2, {0, 1, 0}, {0, 1, 1}, {0, 1}, {0, N, N, N, 1, 2, 2, N, N});
}

/// The preorder on n objects whose arrows x -> y are the pairs with leq(x, y),
/// which must be reflexive and transitive. Arrows are numbered by (x, y).
inline FinCat preorder_category(std::size_t n, const std::function<bool(Index, Index)>& leq) {
  std::vector<Index> src, tgt, id(n);
  std::vector<Index> number(n * n, no_index);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (leq(x, y)) {
        number[x * n + y] = src.size();
        if (x == y) id[x] = src.size();
        src.push_back(x);
        tgt.push_back(y);
      }
  const std::size_t m = src.size();
  std::vector<Index> comp(m * m, no_index);
  for (Index g = 0; g < m; ++g)
    for (Index f = 0; f < m; ++f)
      if (tgt[f] == src[g]) {
        Index k = number[src[f] * n + tgt[g]];
        if (k == no_index) throw invariant_error("preorder_category: relation is not transitive");
        comp[g * m + f] = k;
      }
  return FinCat(n, std::move(src), std::move(tgt), std::move(id), std::move(comp));
}

/// A one-object category from a monoid table; element 0 is the unit.
inline FinCat monoid_category(std::size_t k, const std::function<Index(Index, Index)>& mult) {
  std::vector<Index> zeros(k, 0), comp(k * k);
  for (Index g = 0; g < k; ++g)
    for (Index f = 0; f < k; ++f) comp[g * k + f] = mult(g, f);
  return FinCat(1, zeros, zeros, {0}, std::move(comp));
}

/// A ⊔ B, objects and morphisms of A first.
inline FinCat disjoint_union(const FinCat& a, const FinCat& b) {
  const std::size_t ma = a.morphisms(), m = ma + b.morphisms(), oa = a.objects();
  std::vector<Index> src, tgt, id, comp(m * m, no_index);
  for (Index f = 0; f < ma; ++f) {
    src.push_back(a.src(f));
    tgt.push_back(a.tgt(f));
  }
  for (Index f = 0; f < b.morphisms(); ++f) {
    src.push_back(oa + b.src(f));
    tgt.push_back(oa + b.tgt(f));
  }
  for (Index x = 0; x < oa; ++x) id.push_back(a.id(x));
  for (Index x = 0; x < b.objects(); ++x) id.push_back(ma + b.id(x));
  for (Index g = 0; g < ma; ++g)
    for (Index f = 0; f < ma; ++f)
      if (a.comp(g, f) != no_index) comp[g * m + f] = a.comp(g, f);
  for (Index g = 0; g < b.morphisms(); ++g)
    for (Index f = 0; f < b.morphisms(); ++f)
      if (b.comp(g, f) != no_index) comp[(ma + g) * m + ma + f] = ma + b.comp(g, f);
  return FinCat(oa + b.objects(), std::move(src), std::move(tgt), std::move(id), std::move(comp));
}

// ---------------------------------------------------------------------------
// Profunctors

class Profunctor {
 public:
  using Action = std::function<Index(Index morphism, Index other, Index element)>;

  /// Stored tables: left[g * |Y| + y] and right[h * |X| + x].
  Profunctor(FinCat src, FinCat tgt, std::vector<FinSet> values, std::vector<FinFunction> left,
             std::vector<FinFunction> right)
      : src_(std::move(src)), tgt_(std::move(tgt)), values_(std::move(values)), left_(std::move(left)),
        right_(std::move(right)) {
    const std::size_t X = src_.objects(), Y = tgt_.objects();
    if (values_.size() != X * Y) throw invariant_error("Profunctor: wrong number of values");
    if (left_.size() != src_.morphisms() * Y || right_.size() != tgt_.morphisms() * X)
      throw invariant_error("Profunctor: wrong number of action tables");
    for (Index g = 0; g < src_.morphisms(); ++g)
      for (Index y = 0; y < Y; ++y) {
        const auto& a = this->left(g, y);
        if (!(a.dom() == value(src_.tgt(g), y)) || !(a.cod() == value(src_.src(g), y)))
          throw invariant_error("Profunctor: left action has the wrong boundary");
      }
    for (Index h = 0; h < tgt_.morphisms(); ++h)
      for (Index x = 0; x < X; ++x) {
        const auto& a = this->right(h, x);
        if (!(a.dom() == value(x, tgt_.src(h))) || !(a.cod() == value(x, tgt_.tgt(h))))
          throw invariant_error("Profunctor: right action has the wrong boundary");
      }
  }

  /// Tabulates the actions from element-level rules.
  static Profunctor build(const FinCat& src, const FinCat& tgt, std::vector<FinSet> values, const Action& left,
                          const Action& right) {
    const std::size_t Y = tgt.objects(), X = src.objects();
    std::vector<FinFunction> l, r;
    for (Index g = 0; g < src.morphisms(); ++g)
      for (Index y = 0; y < Y; ++y) {
        const FinSet& d = values[src.tgt(g) * Y + y];
        std::vector<Index> t(d.size());
        for (Index e = 0; e < d.size(); ++e) t[e] = left(g, y, e);
        l.emplace_back(d, values[src.src(g) * Y + y], std::move(t));
      }
    for (Index h = 0; h < tgt.morphisms(); ++h)
      for (Index x = 0; x < X; ++x) {
        const FinSet& d = values[x * Y + tgt.src(h)];
        std::vector<Index> t(d.size());
        for (Index e = 0; e < d.size(); ++e) t[e] = right(h, x, e);
        r.emplace_back(d, values[x * Y + tgt.tgt(h)], std::move(t));
      }
    return Profunctor(src, tgt, std::move(values), std::move(l), std::move(r));
  }

  const FinCat& src() const { return src_; }
  const FinCat& tgt() const { return tgt_; }
  const FinSet& value(Index x, Index y) const { return values_[x * tgt_.objects() + y]; }
  const std::vector<FinSet>& values() const { return values_; }
  /// g: x -> x' acting P(x', y) -> P(x, y)
  const FinFunction& left(Index g, Index y) const { return left_[g * tgt_.objects() + y]; }
  /// h: y -> y' acting P(x, y) -> P(x, y')
  const FinFunction& right(Index h, Index x) const { return right_[h * src_.objects() + x]; }
  const std::vector<FinFunction>& left_tables() const { return left_; }
  const std::vector<FinFunction>& right_tables() const { return right_; }

  friend bool operator==(const Profunctor& a, const Profunctor& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.values_ == b.values_ && a.left_ == b.left_ &&
           a.right_ == b.right_;
  }

 private:
  FinCat src_, tgt_;
  std::vector<FinSet> values_;
  std::vector<FinFunction> left_, right_;
};

/// Functoriality of both actions and their commutation, exhaustively.
inline bool validate_profunctor(const Profunctor& p) {
  const FinCat &X = p.src(), &Y = p.tgt();
  for (Index y = 0; y < Y.objects(); ++y)
    for (Index x = 0; x < X.objects(); ++x)
      if (!p.left(X.id(x), y).is_identity()) return false;
  for (Index x = 0; x < X.objects(); ++x)
    for (Index y = 0; y < Y.objects(); ++y)
      if (!p.right(Y.id(y), x).is_identity()) return false;
  for (Index g2 = 0; g2 < X.morphisms(); ++g2)
    for (Index g1 = 0; g1 < X.morphisms(); ++g1) {
      Index g = X.comp(g2, g1);
      if (g == no_index) continue;
      for (Index y = 0; y < Y.objects(); ++y)
        if (!(p.left(g, y) == compose(p.left(g1, y), p.left(g2, y)))) return false;
    }
  for (Index h2 = 0; h2 < Y.morphisms(); ++h2)
    for (Index h1 = 0; h1 < Y.morphisms(); ++h1) {
      Index h = Y.comp(h2, h1);
      if (h == no_index) continue;
      for (Index x = 0; x < X.objects(); ++x)
        if (!(p.right(h, x) == compose(p.right(h2, x), p.right(h1, x)))) return false;
    }
  for (Index g = 0; g < X.morphisms(); ++g)
    for (Index h = 0; h < Y.morphisms(); ++h) {
      auto a = compose(p.left(g, Y.tgt(h)), p.right(h, X.tgt(g)));
      auto b = compose(p.right(h, X.src(g)), p.left(g, Y.src(h)));
      if (!(a == b)) return false;
    }
  return true;
}

/// hom: C ↛ C, actions by pre- and post-composition.
inline Profunctor prof_id(const FinCat& c) {
  const std::size_t n = c.objects();
  std::vector<FinSet> values;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) values.emplace_back(c.hom(a, b).size());
  auto left = [&c](Index g, Index b, Index e) { return c.hom_position(c.comp(c.hom(c.tgt(g), b)[e], g)); };
  auto right = [&c](Index h, Index a, Index e) { return c.hom_position(c.comp(h, c.hom(a, c.src(h))[e])); };
  return Profunctor::build(c, c, std::move(values), left, right);
}

/// P* : Y^op ↛ X^op, P*(y, x) = P(x, y); the two actions trade places.
inline Profunctor prof_dual(const Profunctor& p) {
  const std::size_t X = p.src().objects(), Y = p.tgt().objects();
  std::vector<FinSet> values;
  for (Index y = 0; y < Y; ++y)
    for (Index x = 0; x < X; ++x) values.push_back(p.value(x, y));
  auto left = [&p](Index g, Index x, Index e) { return p.right(g, x)(e); };
  auto right = [&p](Index h, Index y, Index e) { return p.left(h, y)(e); };
  return Profunctor::build(op(p.tgt()), op(p.src()), std::move(values), left, right);
}

/// P ⊗ Q : X × X' ↛ Y × Y', value P(x, y) × Q(x', y').
inline Profunctor prof_tensor(const Profunctor& p, const Profunctor& q) {
  const FinCat X = product(p.src(), q.src()), Y = product(p.tgt(), q.tgt());
  const std::size_t oy = q.tgt().objects(), ox = q.src().objects();
  const std::size_t mx = q.src().morphisms(), my = q.tgt().morphisms();
  std::vector<FinSet> values;
  for (Index x = 0; x < X.objects(); ++x)
    for (Index y = 0; y < Y.objects(); ++y) values.emplace_back(p.value(x / ox, y / oy).size() * q.value(x % ox, y % oy).size());
  auto left = [&](Index g, Index y, Index e) {
    const auto& a = p.left(g / mx, y / oy);
    const auto& b = q.left(g % mx, y % oy);
    const std::size_t w = b.dom().size();
    return a(e / w) * b.cod().size() + b(e % w);
  };
  auto right = [&](Index h, Index x, Index e) {
    const auto& a = p.right(h / my, x / ox);
    const auto& b = q.right(h % my, x % ox);
    const std::size_t w = b.dom().size();
    return a(e / w) * b.cod().size() + b(e % w);
  };
  return Profunctor::build(X, Y, std::move(values), left, right);
}

// ---------------------------------------------------------------------------
// Coends

struct Coend {
  std::vector<std::size_t> offset;  // start of the summand F(a, a) in the sum
  Coequalizer quotient;
};

/// The coequalizer of  Σ_{g: a -> a'} F(a', a)  ⇉  Σ_a F(a, a)
/// given by the left and right actions of g.
inline Coend coend(const Profunctor& f) {
  if (!(f.src() == f.tgt())) throw composition_error("coend: profunctor is not an endo-profunctor");
  const FinCat& c = f.src();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (Index a = 0; a < c.objects(); ++a) {
    offset.push_back(total);
    total += f.value(a, a).size();
  }
  std::vector<Index> via_left, via_right;
  for (Index g = 0; g < c.morphisms(); ++g) {
    const Index a = c.src(g), b = c.tgt(g);
    const auto& l = f.left(g, a);   // F(b, a) -> F(a, a)
    const auto& r = f.right(g, b);  // F(b, a) -> F(b, b)
    for (Index y = 0; y < f.value(b, a).size(); ++y) {
      via_left.push_back(offset[a] + l(y));
      via_right.push_back(offset[b] + r(y));
    }
  }
  FinSet sum(total), pairs(via_left.size());
  return {std::move(offset), coequalizer(FinFunction(pairs, sum, std::move(via_left)),
                                         FinFunction(pairs, sum, std::move(via_right)))};
}

/// G∘F with the quotient data of every value, so classes can be encoded and
/// decoded.
class ProfComposite {
 public:
  struct Element {
    Index mid;  // the inner object d
    Index x;    // in F(c, d)
    Index y;    // in G(d, e)
  };

  ProfComposite(const Profunctor& g, const Profunctor& f) : g_(g), f_(f) {
    if (!(f.tgt() == g.src())) throw composition_error("prof_compose: inner categories differ");
    const FinCat &C = f.src(), &D = f.tgt(), &E = g.tgt();
    std::vector<FinSet> values;
    for (Index c = 0; c < C.objects(); ++c)
      for (Index e = 0; e < E.objects(); ++e) {
        Cell cell;
        std::size_t total = 0;
        for (Index d = 0; d < D.objects(); ++d) {
          cell.offset.push_back(total);
          total += f.value(c, d).size() * g.value(d, e).size();
        }
        std::vector<Index> lhs, rhs;
        for (Index k = 0; k < D.morphisms(); ++k) {
          const Index d = D.src(k), d2 = D.tgt(k);
          const auto& push = f.right(k, c);  // F(c, d) -> F(c, d2)
          const auto& pull = g.left(k, e);   // G(d2, e) -> G(d, e)
          for (Index x = 0; x < f.value(c, d).size(); ++x)
            for (Index y = 0; y < g.value(d2, e).size(); ++y) {
              lhs.push_back(encode(cell, g, d2, e, push(x), y));
              rhs.push_back(encode(cell, g, d, e, x, pull(y)));
            }
        }
        FinSet sum(total), pairs(lhs.size());
        cell.q = coequalizer(FinFunction(pairs, sum, std::move(lhs)), FinFunction(pairs, sum, std::move(rhs)));
        values.push_back(cell.q.apex);
        cells_.push_back(std::move(cell));
      }

    auto left = [&](Index gm, Index e, Index cls) {
      const Index c = C.src(gm), c2 = C.tgt(gm);
      return act_on_class(c2, e, cls, [&](const Element& el) {
        return Element{el.mid, f.left(gm, el.mid)(el.x), el.y};
      }, c, e);
    };
    auto right = [&](Index h, Index c, Index cls) {
      const Index e = E.src(h), e2 = E.tgt(h);
      return act_on_class(c, e, cls, [&](const Element& el) {
        return Element{el.mid, el.x, g.right(h, el.mid)(el.y)};
      }, c, e2);
    };
    result_ = std::make_unique<Profunctor>(Profunctor::build(C, E, std::move(values), left, right));
  }

  const Profunctor& result() const { return *result_; }

  Index class_of(Index c, Index e, const Element& el) const {
    const Cell& cell = cells_[c * g_.tgt().objects() + e];
    return cell.q.q(encode(cell, g_, el.mid, e, el.x, el.y));
  }

  /// Every member of a class, in enumeration order.
  std::vector<Element> members(Index c, Index e, Index cls) const {
    const Cell& cell = cells_[c * g_.tgt().objects() + e];
    std::vector<Element> out;
    for (Index s = 0; s < cell.q.q.dom().size(); ++s)
      if (cell.q.q(s) == cls) out.push_back(decode(cell, e, s));
    return out;
  }

  Element representative(Index c, Index e, Index cls) const {
    const Cell& cell = cells_[c * g_.tgt().objects() + e];
    return decode(cell, e, cell.q.representative[cls]);
  }

 private:
  struct Cell {
    std::vector<std::size_t> offset;
    Coequalizer q;
  };

  static Index encode(const Cell& cell, const Profunctor& g, Index d, Index e, Index x, Index y) {
    return cell.offset[d] + x * g.value(d, e).size() + y;
  }

  Element decode(const Cell& cell, Index e, Index s) const {
    Index d = 0;
    while (d + 1 < cell.offset.size() && cell.offset[d + 1] <= s) ++d;
    const std::size_t w = g_.value(d, e).size();
    const Index local = s - cell.offset[d];
    return {d, local / w, local % w};
  }

  /// Applies an element-level map to every member of a class and checks that
  /// all images land in one class.
  template <class Fn>
  Index act_on_class(Index c, Index e, Index cls, Fn fn, Index c2, Index e2) const {
    Index image = no_index;
    for (const Element& el : members(c, e, cls)) {
      Index k = class_of(c2, e2, fn(el));
      if (image == no_index) image = k;
      if (k != image) throw invariant_error("prof_compose: action is not well defined on a coend class");
    }
    return image;
  }

  Profunctor g_, f_;
  std::vector<Cell> cells_;
  std::unique_ptr<Profunctor> result_;
};

/// G after F.
inline Profunctor prof_compose(const Profunctor& g, const Profunctor& f) { return ProfComposite(g, f).result(); }

// ---------------------------------------------------------------------------
// Natural isomorphisms

/// One bijection per (x, y), natural in both variables.
struct IsoWitness {
  Profunctor from;
  Profunctor to;
  std::vector<FinFunction> maps;  // maps[x * |Y| + y]: from(x, y) -> to(x, y)

  const FinFunction& at(Index x, Index y) const { return maps[x * from.tgt().objects() + y]; }
};

/// Bijectivity and every naturality square, exhaustively.
inline bool validate_witness(const IsoWitness& w) {
  const FinCat &X = w.from.src(), &Y = w.from.tgt();
  if (!(X == w.to.src()) || !(Y == w.to.tgt())) return false;
  if (w.maps.size() != X.objects() * Y.objects()) return false;
  for (Index x = 0; x < X.objects(); ++x)
    for (Index y = 0; y < Y.objects(); ++y) {
      const auto& m = w.at(x, y);
      if (!(m.dom() == w.from.value(x, y)) || !(m.cod() == w.to.value(x, y)) || !m.is_bijective()) return false;
    }
  for (Index g = 0; g < X.morphisms(); ++g)
    for (Index y = 0; y < Y.objects(); ++y)
      if (!(compose(w.to.left(g, y), w.at(X.tgt(g), y)) == compose(w.at(X.src(g), y), w.from.left(g, y))))
        return false;
  for (Index h = 0; h < Y.morphisms(); ++h)
    for (Index x = 0; x < X.objects(); ++x)
      if (!(compose(w.to.right(h, x), w.at(x, Y.src(h))) == compose(w.at(x, Y.tgt(h)), w.from.right(h, x))))
        return false;
  return true;
}

enum class UnitSide { left, right };

namespace detail {

/// Checks that `inverse` undoes `forward` at every (x, y).
inline void require_inverse(const IsoWitness& forward, const std::vector<FinFunction>& inverse, const char* who) {
  for (std::size_t k = 0; k < inverse.size(); ++k)
    if (!compose(inverse[k], forward.maps[k]).is_identity() || !compose(forward.maps[k], inverse[k]).is_identity())
      throw invariant_error(std::string(who) + ": representative map is not inverse to the witness");
}

}  // namespace detail

/// F ≅ F∘hom (right) or F ≅ hom∘F (left): x ↦ [(id, x)] or [(x, id)]. The
/// inverse, computed on representatives by acting with the hom component,
/// is checked against the forward map.
inline IsoWitness coyoneda_iso(const Profunctor& f, UnitSide side = UnitSide::right) {
  const FinCat &C = f.src(), &D = f.tgt();
  const bool right = side == UnitSide::right;
  ProfComposite comp = right ? ProfComposite(f, prof_id(C)) : ProfComposite(prof_id(D), f);
  const Profunctor& target = comp.result();
  std::vector<FinFunction> maps, inverse;
  for (Index c = 0; c < C.objects(); ++c)
    for (Index d = 0; d < D.objects(); ++d) {
      std::vector<Index> t, inv;
      for (Index x = 0; x < f.value(c, d).size(); ++x)
        t.push_back(right ? comp.class_of(c, d, {c, C.hom_position(C.id(c)), x})
                          : comp.class_of(c, d, {d, x, D.hom_position(D.id(d))}));
      for (Index cls = 0; cls < target.value(c, d).size(); ++cls) {
        auto el = comp.representative(c, d, cls);
        if (right) {
          Index u = C.hom(c, el.mid)[el.x];  // u: c -> mid
          inv.push_back(f.left(u, d)(el.y));
        } else {
          Index u = D.hom(el.mid, d)[el.y];  // u: mid -> d
          inv.push_back(f.right(u, c)(el.x));
        }
      }
      maps.emplace_back(f.value(c, d), target.value(c, d), std::move(t));
      inverse.emplace_back(target.value(c, d), f.value(c, d), std::move(inv));
    }
  IsoWitness w{f, target, std::move(maps)};
  detail::require_inverse(w, inverse, "coyoneda_iso");
  return w;
}

/// (H∘G)∘F ≅ H∘(G∘F), [(d, x, [(e, y, z)])] ↦ [(e, [(d, x, y)], z)].
inline IsoWitness prof_associator(const Profunctor& h, const Profunctor& g, const Profunctor& f) {
  ProfComposite hg(h, g), gf(g, f);
  ProfComposite lhs(hg.result(), f), rhs(h, gf.result());
  const FinCat &C = f.src(), &F = h.tgt();
  std::vector<FinFunction> maps;
  for (Index c = 0; c < C.objects(); ++c)
    for (Index t = 0; t < F.objects(); ++t) {
      const FinSet &dom = lhs.result().value(c, t), &cod = rhs.result().value(c, t);
      std::vector<Index> table;
      for (Index cls = 0; cls < dom.size(); ++cls) {
        Index image = no_index;
        for (const auto& outer : lhs.members(c, t, cls))
          for (const auto& inner : hg.members(outer.mid, t, outer.y)) {
            Index mid = gf.class_of(c, inner.mid, {outer.mid, outer.x, inner.x});
            Index k = rhs.class_of(c, t, {inner.mid, mid, inner.y});
            if (image == no_index) image = k;
            if (k != image) throw invariant_error("prof_associator: map is not well defined");
          }
        table.push_back(image);
      }
      maps.emplace_back(dom, cod, std::move(table));
    }
  return {lhs.result(), rhs.result(), std::move(maps)};
}

struct ProfDuality {
  FinCat object;
  FinCat dual;     // A^op
  Profunctor unit;    // 1 ↛ A × A^op, value hom(a', a) at (a, a')
  Profunctor counit;  // A^op × A ↛ 1, value hom(r, q) at (q, r)
};

inline ProfDuality prof_duality(const FinCat& a) {
  const FinCat one = terminal_category();
  const FinCat aop = op(a);
  const FinCat a_aop = product(a, aop), aop_a = product(aop, a);
  const std::size_t n = a.objects(), m = a.morphisms();

  std::vector<FinSet> iv;
  for (Index k = 0; k < a_aop.objects(); ++k) iv.emplace_back(a.hom(k % n, k / n).size());
  auto i_left = [](Index, Index, Index e) { return e; };
  auto i_right = [&](Index h, Index, Index e) {
    // h = (f: x -> y in A, g: x' -> y' in A^op, i.e. g: y' -> x' in A); u ↦ f∘u∘g
    const Index f = h / m, g = h % m;
    const Index x = a.src(f), xp = a.tgt(g);
    const Index u = a.hom(xp, x)[e];
    return a.hom_position(a.comp(f, a.comp(u, g)));
  };
  Profunctor unit = Profunctor::build(one, a_aop, std::move(iv), i_left, i_right);

  std::vector<FinSet> ev;
  for (Index k = 0; k < aop_a.objects(); ++k) ev.emplace_back(a.hom(k % n, k / n).size());
  auto e_left = [&](Index gm, Index, Index e) {
    // gm = (g1: q -> q' in A^op, i.e. g1: q' -> q in A; g2: r -> r' in A); u ↦ g1∘u∘g2
    const Index g1 = gm / m, g2 = gm % m;
    const Index qp = a.src(g1), rp = a.tgt(g2);
    const Index u = a.hom(rp, qp)[e];
    return a.hom_position(a.comp(g1, a.comp(u, g2)));
  };
  auto e_right = [](Index, Index, Index e) { return e; };
  Profunctor counit = Profunctor::build(aop_a, one, std::move(ev), e_left, e_right);
  return {a, aop, std::move(unit), std::move(counit)};
}

struct ProfZigzag {
  Profunctor composite;  // (hom ⊗ e) ∘ (i ⊗ hom) : A ↛ A
  IsoWitness witness;    // hom => composite
};

/// The zig-zag through A × A^op × A. The product categories 1 × A, A × 1 and
/// the two bracketings of A × A^op × A coincide as tables with A and with
/// each other, so the composite is formed directly.
inline ProfZigzag prof_zigzag_check(const FinCat& a) {
  auto d = prof_duality(a);
  const Profunctor hom = prof_id(a);
  const Profunctor first = prof_tensor(d.unit, hom);     // 1×A ↛ (A×A^op)×A
  const Profunctor second = prof_tensor(hom, d.counit);  // A×(A^op×A) ↛ A×1
  ProfComposite comp(second, first);
  const Profunctor& z = comp.result();
  if (!(z.src() == a) || !(z.tgt() == a)) throw invariant_error("prof_zigzag_check: composite is not an endo-profunctor of A");

  const std::size_t n = a.objects();
  auto mid_index = [n](Index x, Index xp, Index y) { return (x * n + xp) * n + y; };
  std::vector<FinFunction> maps, inverse;
  for (Index s = 0; s < n; ++s)
    for (Index t = 0; t < n; ++t) {
      const auto hs = a.hom(s, t);
      const Index ids = a.hom_position(a.id(s));
      const std::size_t ws = a.hom(s, s).size();
      std::vector<Index> fwd, back;
      for (Index k = 0; k < hs.size(); ++k) {
        // u ↦ [((id_s, id_s), (u, id_s))] through the middle object (s, s, s)
        const Index x1 = ids * ws + ids;
        const Index y1 = a.hom_position(hs[k]) * ws + ids;
        fwd.push_back(comp.class_of(s, t, {mid_index(s, s, s), x1, y1}));
      }
      for (Index cls = 0; cls < z.value(s, t).size(); ++cls) {
        auto el = comp.representative(s, t, cls);
        const Index x = el.mid / (n * n), xp = (el.mid / n) % n, y = el.mid % n;
        const std::size_t w1 = a.hom(s, y).size(), w2 = a.hom(y, xp).size();
        const Index sigma = a.hom(xp, x)[el.x / w1];  // xp -> x
        const Index tau = a.hom(s, y)[el.x % w1];     // s -> y
        const Index v = a.hom(x, t)[el.y / w2];       // x -> t
        const Index w = a.hom(y, xp)[el.y % w2];      // y -> xp
        back.push_back(a.hom_position(a.comp(v, a.comp(sigma, a.comp(w, tau)))));
      }
      maps.emplace_back(FinSet(hs.size()), z.value(s, t), std::move(fwd));
      inverse.emplace_back(z.value(s, t), FinSet(hs.size()), std::move(back));
    }
  IsoWitness w{hom, z, std::move(maps)};
  detail::require_inverse(w, inverse, "prof_zigzag_check");
  return {z, std::move(w)};
}

}  // namespace cobicat
