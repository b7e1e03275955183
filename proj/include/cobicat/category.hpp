#pragma once

// The interface the span bicategory is written against: a category with
// pullbacks and finite products whose universal properties are computable.
// FinSetCategory is the canonical instance; resnet.hpp supplies ResNet^op,
// which turns spans into cospans of resistor networks.

#include <concepts>
#include <optional>

#include "cobicat/finset.hpp"

namespace cobicat {

template <class C>
concept FiniteLimitCategory = requires(const typename C::Object& x, const typename C::Arrow& f) {
  { C::dom(f) } -> std::convertible_to<typename C::Object>;
  { C::cod(f) } -> std::convertible_to<typename C::Object>;
  { C::identity(x) } -> std::same_as<typename C::Arrow>;
  { C::compose(f, f) } -> std::same_as<typename C::Arrow>;
  { C::same_object(x, x) } -> std::same_as<bool>;
  { C::terminal() } -> std::same_as<typename C::Object>;
  { C::to_terminal(x) } -> std::same_as<typename C::Arrow>;
  { C::inverse(f) } -> std::same_as<std::optional<typename C::Arrow>>;
  { C::jointly_monic(f, f) } -> std::same_as<bool>;
  { C::factor_through(f, f, f, f) } -> std::same_as<std::optional<typename C::Arrow>>;
  { C::pullback(f, f).apex } -> std::convertible_to<typename C::Object>;
  { C::pullback(f, f).pi_f } -> std::convertible_to<typename C::Arrow>;
  { C::pullback(f, f).pi_g } -> std::convertible_to<typename C::Arrow>;
  { C::pullback(f, f).mediate(f, f) } -> std::same_as<typename C::Arrow>;
  { C::product(x, x).apex } -> std::convertible_to<typename C::Object>;
  { C::product(x, x).p1 } -> std::convertible_to<typename C::Arrow>;
  { C::product(x, x).p2 } -> std::convertible_to<typename C::Arrow>;
  { C::product(x, x).pair(f, f) } -> std::same_as<typename C::Arrow>;
  { f == f } -> std::convertible_to<bool>;
};

struct FinSetCategory {
  using Object = FinSet;
  using Arrow = FinFunction;

  static const FinSet& dom(const FinFunction& f) { return f.dom(); }
  static const FinSet& cod(const FinFunction& f) { return f.cod(); }
  static FinFunction identity(const FinSet& x) { return FinFunction::identity(x); }
  static FinFunction compose(const FinFunction& g, const FinFunction& f) { return cobicat::compose(g, f); }
  static bool same_object(const FinSet& a, const FinSet& b) { return a == b; }
  static FinSet terminal() { return terminal_set(); }
  static FinFunction to_terminal(const FinSet& x) { return cobicat::to_terminal(x); }
  static std::optional<FinFunction> inverse(const FinFunction& f) { return f.inverse(); }
  static Pullback pullback(const FinFunction& f, const FinFunction& g) { return cobicat::pullback(f, g); }
  static Product product(const FinSet& x, const FinSet& y) { return cobicat::product(x, y); }
  static bool jointly_monic(const FinFunction& p, const FinFunction& q) { return cobicat::jointly_monic(p, q); }

  /// The h with p2∘h = p and q2∘h = q, when (p2, q2) is jointly monic and the
  /// image of (p, q) lies inside the image of (p2, q2).
  static std::optional<FinFunction> factor_through(const FinFunction& p, const FinFunction& q,
                                                   const FinFunction& p2, const FinFunction& q2) {
    if (!(p.cod() == p2.cod()) || !(q.cod() == q2.cod()) || !(p.dom() == q.dom()) || !(p2.dom() == q2.dom()))
      return std::nullopt;
    const std::size_t w = q2.cod().size();
    std::vector<std::size_t> slot(p2.cod().size() * w, SIZE_MAX);
    for (Index y = 0; y < p2.dom().size(); ++y) {
      std::size_t key = p2(y) * w + q2(y);
      if (slot[key] != SIZE_MAX) return std::nullopt;
      slot[key] = y;
    }
    std::vector<Index> t(p.dom().size());
    for (Index x = 0; x < t.size(); ++x) {
      std::size_t y = slot[p(x) * w + q(x)];
      if (y == SIZE_MAX) return std::nullopt;
      t[x] = y;
    }
    return FinFunction(p.dom(), p2.dom(), std::move(t));
  }
};

static_assert(FiniteLimitCategory<FinSetCategory>);

// Structure maps of the cartesian monoidal structure, each obtained from the
// universal property of the product.
namespace cartesian {

template <FiniteLimitCategory C>
typename C::Arrow product_map(const typename C::Arrow& f, const typename C::Arrow& g) {
  auto src = C::product(C::dom(f), C::dom(g));
  auto tgt = C::product(C::cod(f), C::cod(g));
  return tgt.pair(C::compose(f, src.p1), C::compose(g, src.p2));
}

template <FiniteLimitCategory C>
typename C::Arrow diagonal(const typename C::Object& x) {
  return C::product(x, x).pair(C::identity(x), C::identity(x));
}

/// x⊗y -> y⊗x
template <FiniteLimitCategory C>
typename C::Arrow swap(const typename C::Object& x, const typename C::Object& y) {
  auto src = C::product(x, y);
  return C::product(y, x).pair(src.p2, src.p1);
}

/// (x⊗y)⊗z -> x⊗(y⊗z)
template <FiniteLimitCategory C>
typename C::Arrow reassociate(const typename C::Object& x, const typename C::Object& y,
                              const typename C::Object& z) {
  auto xy = C::product(x, y);
  auto src = C::product(xy.apex, z);
  auto yz = C::product(y, z);
  auto tgt = C::product(x, yz.apex);
  return tgt.pair(C::compose(xy.p1, src.p1),
                  yz.pair(C::compose(xy.p2, src.p1), src.p2));
}

/// I⊗x -> x
template <FiniteLimitCategory C>
typename C::Arrow left_unit(const typename C::Object& x) {
  return C::product(C::terminal(), x).p2;
}

/// x⊗I -> x
template <FiniteLimitCategory C>
typename C::Arrow right_unit(const typename C::Object& x) {
  return C::product(x, C::terminal()).p1;
}

template <FiniteLimitCategory C>
typename C::Object tensor(const typename C::Object& x, const typename C::Object& y) {
  return C::product(x, y).apex;
}

}  // namespace cartesian
}  // namespace cobicat
