#pragma once

// 2-rigs: monoidal categories with finite coproducts over which the tensor
// distributes. FinSetRig is finite sets under product and disjoint union.

#include <concepts>
#include <optional>

#include "cobicat/category.hpp"

namespace cobicat {

template <class R>
concept TwoRig = requires(const typename R::Object& x, const typename R::Morphism& f) {
  { R::unit() } -> std::same_as<typename R::Object>;
  { R::zero() } -> std::same_as<typename R::Object>;
  { R::dom(f) } -> std::convertible_to<typename R::Object>;
  { R::cod(f) } -> std::convertible_to<typename R::Object>;
  { R::identity(x) } -> std::same_as<typename R::Morphism>;
  { R::compose(f, f) } -> std::same_as<typename R::Morphism>;
  { R::same_object(x, x) } -> std::same_as<bool>;
  { R::inverse(f) } -> std::same_as<std::optional<typename R::Morphism>>;
  { R::tensor(x, x) } -> std::same_as<typename R::Object>;
  { R::tensor(f, f) } -> std::same_as<typename R::Morphism>;
  { R::plus(x, x) } -> std::same_as<typename R::Object>;
  { R::plus(f, f) } -> std::same_as<typename R::Morphism>;
  { R::inl(x, x) } -> std::same_as<typename R::Morphism>;
  { R::inr(x, x) } -> std::same_as<typename R::Morphism>;
  { R::copair(f, f) } -> std::same_as<typename R::Morphism>;
  { R::initial(x) } -> std::same_as<typename R::Morphism>;
  { R::associator(x, x, x) } -> std::same_as<typename R::Morphism>;
  { R::left_unitor(x) } -> std::same_as<typename R::Morphism>;
  { R::right_unitor(x) } -> std::same_as<typename R::Morphism>;
  { R::symmetry(x, x) } -> std::same_as<typename R::Morphism>;
  { R::annihilate_left(x) } -> std::same_as<typename R::Morphism>;
  { R::annihilate_right(x) } -> std::same_as<typename R::Morphism>;
  { R::distribute_left(x, x, x) } -> std::same_as<typename R::Morphism>;
  { R::distribute_right(x, x, x) } -> std::same_as<typename R::Morphism>;
  { f == f } -> std::convertible_to<bool>;
};

struct FinSetRig {
  using Object = FinSet;
  using Morphism = FinFunction;
  using C = FinSetCategory;

  static FinSet unit() { return FinSet(1); }
  static FinSet zero() { return FinSet(0); }
  static const FinSet& dom(const FinFunction& f) { return f.dom(); }
  static const FinSet& cod(const FinFunction& f) { return f.cod(); }
  static FinFunction identity(const FinSet& x) { return FinFunction::identity(x); }
  static FinFunction compose(const FinFunction& g, const FinFunction& f) { return cobicat::compose(g, f); }
  static bool same_object(const FinSet& a, const FinSet& b) { return a == b; }
  static std::optional<FinFunction> inverse(const FinFunction& f) { return f.inverse(); }

  static FinSet tensor(const FinSet& x, const FinSet& y) { return product(x, y).apex; }
  static FinFunction tensor(const FinFunction& f, const FinFunction& g) { return cartesian::product_map<C>(f, g); }
  static FinSet plus(const FinSet& x, const FinSet& y) { return coproduct(x, y).apex; }
  static FinFunction plus(const FinFunction& f, const FinFunction& g) {
    auto tgt = coproduct(f.cod(), g.cod());
    return coproduct(f.dom(), g.dom()).copair(cobicat::compose(tgt.i1, f), cobicat::compose(tgt.i2, g));
  }
  static FinFunction inl(const FinSet& x, const FinSet& y) { return coproduct(x, y).i1; }
  static FinFunction inr(const FinSet& x, const FinSet& y) { return coproduct(x, y).i2; }
  static FinFunction copair(const FinFunction& f, const FinFunction& g) {
    return coproduct(f.dom(), g.dom()).copair(f, g);
  }
  static FinFunction initial(const FinSet& x) { return from_initial(x); }

  /// (x⊗y)⊗z -> x⊗(y⊗z)
  static FinFunction associator(const FinSet& x, const FinSet& y, const FinSet& z) {
    return cartesian::reassociate<C>(x, y, z);
  }
  /// I⊗x -> x
  static FinFunction left_unitor(const FinSet& x) { return cartesian::left_unit<C>(x); }
  /// x⊗I -> x
  static FinFunction right_unitor(const FinSet& x) { return cartesian::right_unit<C>(x); }
  /// x⊗y -> y⊗x
  static FinFunction symmetry(const FinSet& x, const FinSet& y) { return cartesian::swap<C>(x, y); }
  /// 0⊗x -> 0
  static FinFunction annihilate_left(const FinSet& x) { return product(zero(), x).p1; }
  /// x⊗0 -> 0
  static FinFunction annihilate_right(const FinSet& x) { return product(x, zero()).p2; }

  /// x⊗(y⊕z) -> (x⊗y)⊕(x⊗z)
  static FinFunction distribute_left(const FinSet& x, const FinSet& y, const FinSet& z) {
    auto yz = coproduct(y, z);
    auto src = product(x, yz.apex);
    auto xy = product(x, y);
    auto xz = product(x, z);
    auto tgt = coproduct(xy.apex, xz.apex);
    std::vector<Index> t(src.apex.size());
    for (Index a = 0; a < x.size(); ++a) {
      for (Index b = 0; b < y.size(); ++b) t[src.index(a, yz.i1(b))] = tgt.i1(xy.index(a, b));
      for (Index c = 0; c < z.size(); ++c) t[src.index(a, yz.i2(c))] = tgt.i2(xz.index(a, c));
    }
    return FinFunction(src.apex, tgt.apex, std::move(t));
  }

  /// (x⊕y)⊗z -> (x⊗z)⊕(y⊗z)
  static FinFunction distribute_right(const FinSet& x, const FinSet& y, const FinSet& z) {
    auto xy = coproduct(x, y);
    auto src = product(xy.apex, z);
    auto xz = product(x, z);
    auto yz = product(y, z);
    auto tgt = coproduct(xz.apex, yz.apex);
    std::vector<Index> t(src.apex.size());
    for (Index c = 0; c < z.size(); ++c) {
      for (Index a = 0; a < x.size(); ++a) t[src.index(xy.i1(a), c)] = tgt.i1(xz.index(a, c));
      for (Index b = 0; b < y.size(); ++b) t[src.index(xy.i2(b), c)] = tgt.i2(yz.index(b, c));
    }
    return FinFunction(src.apex, tgt.apex, std::move(t));
  }
};

static_assert(TwoRig<FinSetRig>);

}  // namespace cobicat
