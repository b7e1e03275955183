#pragma once

// Mat(R): objects are natural numbers, a 1-cell n -> m is an m×n grid of
// objects of the 2-rig R, and a 2-cell is a grid of R-morphisms. Composition
// is the matrix product with ⊗ for multiplication and ⊕ for addition. Sums
// are bracketed to the left and run over the inner index in ascending order.

#include <functional>
#include <string>
#include <vector>

#include "cobicat/two_rig.hpp"

namespace cobicat {

template <TwoRig R>
class ObMatrix {
 public:
  using Object = typename R::Object;

  ObMatrix(std::size_t src, std::size_t tgt, std::vector<Object> entries)
      : src_(src), tgt_(tgt), entries_(std::move(entries)) {
    if (entries_.size() != src_ * tgt_)
      throw invariant_error("ObMatrix: " + std::to_string(entries_.size()) + " entries for a " +
                            std::to_string(tgt_) + "x" + std::to_string(src_) + " grid");
  }

  std::size_t src() const { return src_; }
  std::size_t tgt() const { return tgt_; }
  const Object& at(std::size_t row, std::size_t col) const { return entries_[row * src_ + col]; }
  const std::vector<Object>& entries() const { return entries_; }

  friend bool operator==(const ObMatrix& a, const ObMatrix& b) {
    if (a.src_ != b.src_ || a.tgt_ != b.tgt_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (!R::same_object(a.entries_[k], b.entries_[k])) return false;
    return true;
  }

 private:
  std::size_t src_;
  std::size_t tgt_;
  std::vector<Object> entries_;
};

template <TwoRig R>
class MorMatrix {
 public:
  using Morphism = typename R::Morphism;

  MorMatrix(ObMatrix<R> from, ObMatrix<R> to, std::vector<Morphism> entries)
      : from_(std::move(from)), to_(std::move(to)), entries_(std::move(entries)) {
    if (from_.src() != to_.src() || from_.tgt() != to_.tgt())
      throw composition_error("MorMatrix: boundary matrices are not parallel");
    if (entries_.size() != from_.entries().size()) throw invariant_error("MorMatrix: wrong number of entries");
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!R::same_object(R::dom(entries_[k]), from_.entries()[k]) ||
          !R::same_object(R::cod(entries_[k]), to_.entries()[k]))
        throw invariant_error("MorMatrix: entry " + std::to_string(k) + " has the wrong boundary");
  }

  const ObMatrix<R>& from() const { return from_; }
  const ObMatrix<R>& to() const { return to_; }
  const Morphism& at(std::size_t row, std::size_t col) const { return entries_[row * from_.src() + col]; }
  const std::vector<Morphism>& entries() const { return entries_; }

  friend bool operator==(const MorMatrix& a, const MorMatrix& b) {
    return a.from_ == b.from_ && a.to_ == b.to_ && a.entries_ == b.entries_;
  }

 private:
  ObMatrix<R> from_;
  ObMatrix<R> to_;
  std::vector<Morphism> entries_;
};

using FinObMatrix = ObMatrix<FinSetRig>;
using FinMorMatrix = MorMatrix<FinSetRig>;

// ---------------------------------------------------------------------------
// Iterated sums  ((t0 ⊕ t1) ⊕ t2) ⊕ ...,  with the empty sum equal to 0.

namespace sums {

template <TwoRig R>
typename R::Object total(const std::vector<typename R::Object>& terms) {
  if (terms.empty()) return R::zero();
  auto acc = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) acc = R::plus(acc, terms[k]);
  return acc;
}

/// terms[k] -> total(terms)
template <TwoRig R>
typename R::Morphism inject(const std::vector<typename R::Object>& terms, std::size_t k) {
  std::vector<typename R::Object> prefix(terms.begin(), terms.begin() + k + 1);
  auto m = k == 0 ? R::identity(terms[0]) : R::inr(total<R>({prefix.begin(), prefix.end() - 1}), terms[k]);
  for (std::size_t j = k + 1; j < terms.size(); ++j) {
    m = R::compose(R::inl(total<R>(prefix), terms[j]), m);
    prefix.push_back(terms[j]);
  }
  return m;
}

/// The map out of total(terms) restricting to maps[k] on each summand.
template <TwoRig R>
typename R::Morphism copair(const std::vector<typename R::Morphism>& maps, const typename R::Object& target) {
  if (maps.empty()) return R::initial(target);
  auto acc = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) acc = R::copair(acc, maps[k]);
  return acc;
}

/// ⊕ f_k
template <TwoRig R>
typename R::Morphism sum_map(const std::vector<typename R::Morphism>& fs) {
  if (fs.empty()) return R::identity(R::zero());
  auto acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = R::plus(acc, fs[k]);
  return acc;
}

/// (⊕ t_j) ⊗ z -> ⊕ (t_j ⊗ z)
template <TwoRig R>
typename R::Morphism distribute_right(const std::vector<typename R::Object>& terms, const typename R::Object& z) {
  if (terms.empty()) return R::annihilate_left(z);
  if (terms.size() == 1) return R::identity(R::tensor(terms[0], z));
  std::vector<typename R::Object> prefix(terms.begin(), terms.end() - 1);
  const auto& last = terms.back();
  auto step = R::distribute_right(total<R>(prefix), last, z);
  return R::compose(R::plus(distribute_right<R>(prefix, z), R::identity(R::tensor(last, z))), step);
}

/// ⊕ (x ⊗ t_k) -> x ⊗ (⊕ t_k)
template <TwoRig R>
typename R::Morphism factor_left(const typename R::Object& x, const std::vector<typename R::Object>& terms) {
  auto target = R::tensor(x, total<R>(terms));
  std::vector<typename R::Morphism> maps;
  for (std::size_t k = 0; k < terms.size(); ++k) maps.push_back(R::tensor(R::identity(x), inject<R>(terms, k)));
  return copair<R>(maps, target);
}

}  // namespace sums

// ---------------------------------------------------------------------------
// 1-cells

template <TwoRig R>
ObMatrix<R> mat_identity(std::size_t n) {
  std::vector<typename R::Object> e;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e.push_back(r == c ? R::unit() : R::zero());
  return ObMatrix<R>(n, n, std::move(e));
}

/// The summands N(i,j) ⊗ M(j,k) of entry (i,k) of N∘M, j ascending.
template <TwoRig R>
std::vector<typename R::Object> compose_terms(const ObMatrix<R>& n, const ObMatrix<R>& m, std::size_t i,
                                              std::size_t k) {
  std::vector<typename R::Object> terms;
  for (std::size_t j = 0; j < m.tgt(); ++j) terms.push_back(R::tensor(n.at(i, j), m.at(j, k)));
  return terms;
}

/// N after M.
template <TwoRig R>
ObMatrix<R> mat_compose(const ObMatrix<R>& n, const ObMatrix<R>& m) {
  if (m.tgt() != n.src())
    throw composition_error("mat_compose: target " + std::to_string(m.tgt()) + " does not match source " +
                            std::to_string(n.src()));
  std::vector<typename R::Object> e;
  for (std::size_t i = 0; i < n.tgt(); ++i)
    for (std::size_t k = 0; k < m.src(); ++k) e.push_back(sums::total<R>(compose_terms(n, m, i, k)));
  return ObMatrix<R>(m.src(), n.tgt(), std::move(e));
}

/// Kronecker product; index (a, b) flattens to a·dim2 + b.
template <TwoRig R>
ObMatrix<R> mat_tensor(const ObMatrix<R>& n, const ObMatrix<R>& m) {
  const std::size_t src = n.src() * m.src(), tgt = n.tgt() * m.tgt();
  std::vector<typename R::Object> e;
  e.reserve(src * tgt);
  for (std::size_t r = 0; r < tgt; ++r)
    for (std::size_t c = 0; c < src; ++c)
      e.push_back(R::tensor(n.at(r / m.tgt(), c / m.src()), m.at(r % m.tgt(), c % m.src())));
  return ObMatrix<R>(src, tgt, std::move(e));
}

/// Transpose.
template <TwoRig R>
ObMatrix<R> mat_dual(const ObMatrix<R>& m) {
  std::vector<typename R::Object> e;
  for (std::size_t r = 0; r < m.src(); ++r)
    for (std::size_t c = 0; c < m.tgt(); ++c) e.push_back(m.at(c, r));
  return ObMatrix<R>(m.tgt(), m.src(), std::move(e));
}

/// i_n: 1 -> n·n, I at the flattened diagonal positions (k, k).
template <TwoRig R>
ObMatrix<R> mat_unit(std::size_t n) {
  std::vector<typename R::Object> e;
  for (std::size_t r = 0; r < n * n; ++r) e.push_back(r / n == r % n ? R::unit() : R::zero());
  return ObMatrix<R>(1, n * n, std::move(e));
}

/// e_n: n·n -> 1
template <TwoRig R>
ObMatrix<R> mat_counit(std::size_t n) {
  return mat_dual(mat_unit<R>(n));
}

/// b_{m,n}: m·n -> n·m, I where row (j, i) meets column (i, j).
template <TwoRig R>
ObMatrix<R> mat_braiding(std::size_t m, std::size_t n) {
  std::vector<typename R::Object> e;
  for (std::size_t r = 0; r < n * m; ++r)
    for (std::size_t c = 0; c < m * n; ++c) e.push_back(r / m == c % n && r % m == c / n ? R::unit() : R::zero());
  return ObMatrix<R>(m * n, n * m, std::move(e));
}

// ---------------------------------------------------------------------------
// 2-cells

template <TwoRig R>
MorMatrix<R> identity_cell(const ObMatrix<R>& m) {
  std::vector<typename R::Morphism> e;
  for (const auto& x : m.entries()) e.push_back(R::identity(x));
  return MorMatrix<R>(m, m, std::move(e));
}

template <TwoRig R>
bool is_identity(const MorMatrix<R>& a) {
  return a == identity_cell(a.from());
}

/// b after a.
template <TwoRig R>
MorMatrix<R> vcompose(const MorMatrix<R>& b, const MorMatrix<R>& a) {
  if (!(a.to() == b.from())) throw composition_error("vcompose: 2-cells are not composable");
  std::vector<typename R::Morphism> e;
  for (std::size_t k = 0; k < a.entries().size(); ++k) e.push_back(R::compose(b.entries()[k], a.entries()[k]));
  return MorMatrix<R>(a.from(), b.to(), std::move(e));
}

template <TwoRig R>
std::optional<MorMatrix<R>> inverse_cell(const MorMatrix<R>& a) {
  std::vector<typename R::Morphism> e;
  for (const auto& f : a.entries()) {
    auto inv = R::inverse(f);
    if (!inv) return std::nullopt;
    e.push_back(*inv);
  }
  return MorMatrix<R>(a.to(), a.from(), std::move(e));
}

/// Horizontal composite b∘a : N∘M => N'∘M' for a: M => M', b: N => N'.
template <TwoRig R>
MorMatrix<R> hcompose(const MorMatrix<R>& b, const MorMatrix<R>& a) {
  auto from = mat_compose(b.from(), a.from());
  auto to = mat_compose(b.to(), a.to());
  std::vector<typename R::Morphism> e;
  for (std::size_t i = 0; i < from.tgt(); ++i)
    for (std::size_t k = 0; k < from.src(); ++k) {
      std::vector<typename R::Morphism> fs;
      for (std::size_t j = 0; j < a.from().tgt(); ++j) fs.push_back(R::tensor(b.at(i, j), a.at(j, k)));
      e.push_back(sums::sum_map<R>(fs));
    }
  return MorMatrix<R>(std::move(from), std::move(to), std::move(e));
}

template <TwoRig R>
MorMatrix<R> tensor_cells(const MorMatrix<R>& b, const MorMatrix<R>& a) {
  auto from = mat_tensor(b.from(), a.from());
  auto to = mat_tensor(b.to(), a.to());
  const std::size_t ar = a.from().tgt(), ac = a.from().src();
  std::vector<typename R::Morphism> e;
  for (std::size_t r = 0; r < from.tgt(); ++r)
    for (std::size_t c = 0; c < from.src(); ++c) e.push_back(R::tensor(b.at(r / ar, c / ac), a.at(r % ar, c % ac)));
  return MorMatrix<R>(std::move(from), std::move(to), std::move(e));
}

/// Transpose of a 2-cell.
template <TwoRig R>
MorMatrix<R> mat_dual(const MorMatrix<R>& a) {
  std::vector<typename R::Morphism> e;
  for (std::size_t r = 0; r < a.from().src(); ++r)
    for (std::size_t c = 0; c < a.from().tgt(); ++c) e.push_back(a.at(c, r));
  return MorMatrix<R>(mat_dual(a.from()), mat_dual(a.to()), std::move(e));
}

/// (N∘M)* => M*∘N*, the rig symmetry on every summand.
template <TwoRig R>
MorMatrix<R> dual_compose_iso(const ObMatrix<R>& n, const ObMatrix<R>& m) {
  auto from = mat_dual(mat_compose(n, m));
  auto to = mat_compose(mat_dual(m), mat_dual(n));
  std::vector<typename R::Morphism> e;
  for (std::size_t k = 0; k < m.src(); ++k)
    for (std::size_t i = 0; i < n.tgt(); ++i) {
      std::vector<typename R::Morphism> fs;
      for (std::size_t j = 0; j < m.tgt(); ++j) fs.push_back(R::symmetry(n.at(i, j), m.at(j, k)));
      e.push_back(sums::sum_map<R>(fs));
    }
  return MorMatrix<R>(std::move(from), std::move(to), std::move(e));
}

/// (P∘N)∘M => P∘(N∘M): distribute, reassociate each summand, exchange the
/// order of summation, then factor P(i,j) back out.
template <TwoRig R>
MorMatrix<R> mat_associator(const ObMatrix<R>& p, const ObMatrix<R>& n, const ObMatrix<R>& m) {
  using Ob = typename R::Object;
  using Mor = typename R::Morphism;
  auto pn = mat_compose(p, n);
  auto from = mat_compose(pn, m);
  auto to = mat_compose(p, mat_compose(n, m));
  const std::size_t J = n.tgt(), K = m.tgt();
  std::vector<Mor> e;
  for (std::size_t i = 0; i < p.tgt(); ++i)
    for (std::size_t l = 0; l < m.src(); ++l) {
      std::vector<Mor> distribute, reassociate;
      std::vector<std::vector<Ob>> by_k(K), by_j(J);
      for (std::size_t k = 0; k < K; ++k) {
        distribute.push_back(sums::distribute_right<R>(compose_terms(p, n, i, k), m.at(k, l)));
        std::vector<Mor> inner;
        for (std::size_t j = 0; j < J; ++j) {
          inner.push_back(R::associator(p.at(i, j), n.at(j, k), m.at(k, l)));
          by_k[k].push_back(R::tensor(p.at(i, j), R::tensor(n.at(j, k), m.at(k, l))));
        }
        reassociate.push_back(sums::sum_map<R>(inner));
      }
      for (std::size_t j = 0; j < J; ++j)
        for (std::size_t k = 0; k < K; ++k) by_j[j].push_back(by_k[k][j]);
      std::vector<Ob> outer_j;
      for (const auto& t : by_j) outer_j.push_back(sums::total<R>(t));
      const Ob exchanged_total = sums::total<R>(outer_j);
      std::vector<Mor> exchange_k;
      for (std::size_t k = 0; k < K; ++k) {
        std::vector<Mor> exchange_j;
        for (std::size_t j = 0; j < J; ++j)
          exchange_j.push_back(R::compose(sums::inject<R>(outer_j, j), sums::inject<R>(by_j[j], k)));
        exchange_k.push_back(sums::copair<R>(exchange_j, exchanged_total));
      }
      std::vector<Mor> factor;
      for (std::size_t j = 0; j < J; ++j) factor.push_back(sums::factor_left<R>(p.at(i, j), compose_terms(n, m, j, l)));

      Mor h = sums::sum_map<R>(distribute);
      h = R::compose(sums::sum_map<R>(reassociate), h);
      h = R::compose(sums::copair<R>(exchange_k, exchanged_total), h);
      h = R::compose(sums::sum_map<R>(factor), h);
      e.push_back(h);
    }
  return MorMatrix<R>(std::move(from), std::move(to), std::move(e));
}

/// 1∘M => M
template <TwoRig R>
MorMatrix<R> mat_left_unitor(const ObMatrix<R>& m) {
  auto id = mat_identity<R>(m.tgt());
  std::vector<typename R::Morphism> e;
  for (std::size_t i = 0; i < m.tgt(); ++i)
    for (std::size_t k = 0; k < m.src(); ++k) {
      std::vector<typename R::Morphism> maps;
      for (std::size_t j = 0; j < m.tgt(); ++j)
        maps.push_back(j == i ? R::left_unitor(m.at(i, k))
                              : R::compose(R::initial(m.at(i, k)), R::annihilate_left(m.at(j, k))));
      e.push_back(sums::copair<R>(maps, m.at(i, k)));
    }
  return MorMatrix<R>(mat_compose(id, m), m, std::move(e));
}

/// M∘1 => M
template <TwoRig R>
MorMatrix<R> mat_right_unitor(const ObMatrix<R>& m) {
  auto id = mat_identity<R>(m.src());
  std::vector<typename R::Morphism> e;
  for (std::size_t i = 0; i < m.tgt(); ++i)
    for (std::size_t k = 0; k < m.src(); ++k) {
      std::vector<typename R::Morphism> maps;
      for (std::size_t j = 0; j < m.src(); ++j)
        maps.push_back(j == k ? R::right_unitor(m.at(i, k))
                              : R::compose(R::initial(m.at(i, k)), R::annihilate_right(m.at(i, j))));
      e.push_back(sums::copair<R>(maps, m.at(i, k)));
    }
  return MorMatrix<R>(mat_compose(m, id), m, std::move(e));
}

/// The pentagon for Q, P, N, M as an exact comparison of the two pasted
/// composites ((Q∘P)∘N)∘M => Q∘(P∘(N∘M)).
template <TwoRig R>
bool mat_pentagon_check(const ObMatrix<R>& q, const ObMatrix<R>& p, const ObMatrix<R>& n, const ObMatrix<R>& m) {
  auto top = vcompose(mat_associator(q, p, mat_compose(n, m)), mat_associator(mat_compose(q, p), n, m));
  auto s1 = hcompose(mat_associator(q, p, n), identity_cell(m));
  auto s2 = mat_associator(q, mat_compose(p, n), m);
  auto s3 = hcompose(identity_cell(q), mat_associator(p, n, m));
  return top == vcompose(s3, vcompose(s2, s1));
}

/// The triangle (N∘1)∘M => N∘M.
template <TwoRig R>
bool mat_triangle_check(const ObMatrix<R>& n, const ObMatrix<R>& m) {
  auto lhs = hcompose(mat_right_unitor(n), identity_cell(m));
  auto rhs = vcompose(hcompose(identity_cell(n), mat_left_unitor(m)),
                      mat_associator(n, mat_identity<R>(n.src()), m));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Cells between composites of 0/I patterns

/// A tensor expression whose leaves are the unit or the initial object.
struct Shape {
  enum Kind { unit, zero, tensor } kind;
  std::vector<Shape> children;

  static Shape leaf(bool is_unit) { return {is_unit ? unit : zero, {}}; }
  static Shape of(Shape a, Shape b) { return {tensor, {std::move(a), std::move(b)}}; }

  bool is_unit() const {
    if (kind == tensor) return children[0].is_unit() && children[1].is_unit();
    return kind == unit;
  }
};

template <TwoRig R>
typename R::Object shape_object(const Shape& s) {
  switch (s.kind) {
    case Shape::unit: return R::unit();
    case Shape::zero: return R::zero();
    case Shape::tensor: return R::tensor(shape_object<R>(s.children[0]), shape_object<R>(s.children[1]));
  }
  return R::zero();
}

/// The canonical map from the object of s to I or 0, by unitors and
/// annihilators applied from the leaves up.
template <TwoRig R>
typename R::Morphism collapse(const Shape& s) {
  if (s.kind != Shape::tensor) return R::identity(shape_object<R>(s));
  const Shape &a = s.children[0], &b = s.children[1];
  auto f = R::tensor(collapse<R>(a), collapse<R>(b));
  const bool ua = a.is_unit(), ub = b.is_unit();
  if (ua && ub) return R::compose(R::left_unitor(R::unit()), f);
  if (!ua) return R::compose(R::annihilate_left(ub ? R::unit() : R::zero()), f);
  return R::compose(R::annihilate_right(R::unit()), f);
}

/// A grid of sums of shapes, for composites of 0/I matrices.
struct ShapeGrid {
  std::size_t src = 0, tgt = 0;
  std::vector<std::vector<Shape>> entries;  // row-major, each entry a sum of terms

  const std::vector<Shape>& at(std::size_t r, std::size_t c) const { return entries[r * src + c]; }

  static ShapeGrid delta(std::size_t src, std::size_t tgt, const std::function<bool(std::size_t, std::size_t)>& unit_at) {
    ShapeGrid g{src, tgt, {}};
    for (std::size_t r = 0; r < tgt; ++r)
      for (std::size_t c = 0; c < src; ++c) g.entries.push_back({Shape::leaf(unit_at(r, c))});
    return g;
  }

  /// Single-term grids only.
  static ShapeGrid kronecker(const ShapeGrid& n, const ShapeGrid& m) {
    ShapeGrid g{n.src * m.src, n.tgt * m.tgt, {}};
    for (std::size_t r = 0; r < g.tgt; ++r)
      for (std::size_t c = 0; c < g.src; ++c)
        g.entries.push_back({Shape::of(n.at(r / m.tgt, c / m.src).at(0), m.at(r % m.tgt, c % m.src).at(0))});
    return g;
  }

  /// Single-term grids only; n after m.
  static ShapeGrid compose(const ShapeGrid& n, const ShapeGrid& m) {
    ShapeGrid g{m.src, n.tgt, {}};
    for (std::size_t i = 0; i < n.tgt; ++i)
      for (std::size_t k = 0; k < m.src; ++k) {
        std::vector<Shape> terms;
        for (std::size_t j = 0; j < m.tgt; ++j) terms.push_back(Shape::of(n.at(i, j).at(0), m.at(j, k).at(0)));
        g.entries.push_back(std::move(terms));
      }
    return g;
  }
};

template <TwoRig R>
ObMatrix<R> shape_matrix(const ShapeGrid& g) {
  std::vector<typename R::Object> e;
  for (const auto& terms : g.entries) {
    std::vector<typename R::Object> obs;
    for (const auto& t : terms) obs.push_back(shape_object<R>(t));
    e.push_back(sums::total<R>(obs));
  }
  return ObMatrix<R>(g.src, g.tgt, std::move(e));
}

/// The cell from a composite of 0/I patterns onto the 0/I pattern `target`,
/// collapsing every summand. Only well-typed when each entry has at most one
/// unit summand, and that entry of target is I.
template <TwoRig R>
MorMatrix<R> collapse_cell(const ShapeGrid& g, const ObMatrix<R>& target) {
  std::vector<typename R::Morphism> e;
  for (std::size_t k = 0; k < g.entries.size(); ++k) {
    const auto& tgt = target.entries()[k];
    std::vector<typename R::Morphism> maps;
    for (const auto& t : g.entries[k]) {
      auto c = collapse<R>(t);
      maps.push_back(t.is_unit() ? R::compose(R::identity(tgt), c) : R::compose(R::initial(tgt), c));
    }
    e.push_back(sums::copair<R>(maps, tgt));
  }
  return MorMatrix<R>(shape_matrix<R>(g), target, std::move(e));
}

template <TwoRig R>
struct MatZigzag {
  ObMatrix<R> composite;  // (A⊗e)∘(i⊗A)
  MorMatrix<R> cell;      // composite => identity
  bool triangle_at_unit;  // R's triangle equation at (I, I)
};

/// The triangle equation of R at (I, I): (I⊗l)∘a = r⊗I, and the composite
/// (I⊗l)∘a∘(r⁻¹⊗I) is the identity of I⊗I.
template <TwoRig R>
bool rig_triangle_at_unit() {
  const auto I = R::unit();
  auto lhs = R::compose(R::tensor(R::identity(I), R::left_unitor(I)), R::associator(I, I, I));
  auto rhs = R::tensor(R::right_unitor(I), R::identity(I));
  if (!(lhs == rhs)) return false;
  auto rinv = R::inverse(R::right_unitor(I));
  if (!rinv) return false;
  return R::compose(lhs, R::tensor(*rinv, R::identity(I))) == R::identity(R::tensor(I, I));
}

/// (A⊗e)∘(i⊗A) for A = n, with the cell collapsing it onto the identity.
template <TwoRig R>
MatZigzag<R> mat_zigzag_check(std::size_t n) {
  auto id = ShapeGrid::delta(n, n, [](std::size_t r, std::size_t c) { return r == c; });
  auto i = ShapeGrid::delta(1, n * n, [n](std::size_t r, std::size_t) { return r / n == r % n; });
  auto e = ShapeGrid::delta(n * n, 1, [n](std::size_t, std::size_t c) { return c / n == c % n; });
  auto g = ShapeGrid::compose(ShapeGrid::kronecker(id, e), ShapeGrid::kronecker(i, id));
  auto composite = mat_compose(mat_tensor(mat_identity<R>(n), mat_counit<R>(n)),
                               mat_tensor(mat_unit<R>(n), mat_identity<R>(n)));
  if (!(composite == shape_matrix<R>(g))) throw invariant_error("mat_zigzag_check: composite disagrees with its shape");
  return {composite, collapse_cell<R>(g, mat_identity<R>(n)), rig_triangle_at_unit<R>()};
}

/// b_{n,m}∘b_{m,n} => 1_{mn}
template <TwoRig R>
MorMatrix<R> mat_braid_twice(std::size_t m, std::size_t n) {
  auto b1 = ShapeGrid::delta(m * n, n * m,
                             [m, n](std::size_t r, std::size_t c) { return r / m == c % n && r % m == c / n; });
  auto b2 = ShapeGrid::delta(n * m, m * n,
                             [m, n](std::size_t r, std::size_t c) { return r / n == c % m && r % n == c / m; });
  auto g = ShapeGrid::compose(b2, b1);
  if (!(shape_matrix<R>(g) == mat_compose(mat_braiding<R>(n, m), mat_braiding<R>(m, n))))
    throw invariant_error("mat_braid_twice: composite disagrees with its shape");
  return collapse_cell<R>(g, mat_identity<R>(m * n));
}

/// Entry sizes of a matrix over FinSetRig.
inline std::vector<std::vector<std::size_t>> size_grid(const FinObMatrix& m) {
  std::vector<std::vector<std::size_t>> g(m.tgt(), std::vector<std::size_t>(m.src()));
  for (std::size_t r = 0; r < m.tgt(); ++r)
    for (std::size_t c = 0; c < m.src(); ++c) g[r][c] = m.at(r, c).size();
  return g;
}

}  // namespace cobicat
