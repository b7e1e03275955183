#pragma once

// Finite sets as index ranges 0..n-1 and table-driven functions between them,
// together with the finite limits and colimits everything else is built from.
//
// Element orders of constructed sets are fixed:
//   product / pullback   lexicographic in (left, right)
//   coproduct            left summand first
//   quotient             classes in order of their smallest member
// so that every canonical comparison map is a plain table and 2-cell
// equality reduces to table equality.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cobicat {

using Index = std::size_t;

class cobicat_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Boundary mismatch: domains/codomains or 1-cell endpoints that do not line up.
class composition_error : public cobicat_error {
 public:
  using cobicat_error::cobicat_error;
};

/// A value that violates its type invariants (bad table, malformed input).
class invariant_error : public cobicat_error {
 public:
  using cobicat_error::cobicat_error;
};

class FinSet;

enum class Origin { atom, product, coproduct, pullback, quotient };

inline const char* to_string(Origin o) {
  switch (o) {
    case Origin::atom: return "atom";
    case Origin::product: return "product";
    case Origin::coproduct: return "coproduct";
    case Origin::pullback: return "pullback";
    case Origin::quotient: return "quotient";
  }
  return "?";
}

struct Provenance;

/// The finite set {0, ..., size-1}. Provenance is diagnostic only and never
/// participates in operator==.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::size_t n) : size_(n) {}

  static FinSet built(std::size_t n, Origin origin, std::vector<FinSet> parts);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Origin origin() const;
  const std::vector<FinSet>& parts() const;

  /// Size plus provenance tree.
  bool same_construction(const FinSet& other) const;
  std::string describe() const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.size_ == b.size_; }

 private:
  std::size_t size_ = 0;
  std::shared_ptr<const Provenance> prov_;
};

struct Provenance {
  Origin origin;
  std::vector<FinSet> parts;
};

inline FinSet FinSet::built(std::size_t n, Origin origin, std::vector<FinSet> parts) {
  FinSet s(n);
  s.prov_ = std::make_shared<const Provenance>(Provenance{origin, std::move(parts)});
  return s;
}

inline Origin FinSet::origin() const { return prov_ ? prov_->origin : Origin::atom; }

inline const std::vector<FinSet>& FinSet::parts() const {
  static const std::vector<FinSet> none;
  return prov_ ? prov_->parts : none;
}

inline bool FinSet::same_construction(const FinSet& other) const {
  if (size_ != other.size_ || origin() != other.origin()) return false;
  const auto& a = parts();
  const auto& b = other.parts();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_construction(b[i])) return false;
  return true;
}

inline std::string FinSet::describe() const {
  std::ostringstream os;
  os << size_;
  if (origin() != Origin::atom) {
    os << ':' << to_string(origin()) << '(';
    const auto& ps = parts();
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i].describe();
    os << ')';
  }
  return os.str();
}

/// A function dom -> cod stored as the table of images.
class FinFunction {
 public:
  FinFunction() = default;
  FinFunction(FinSet dom, FinSet cod, std::vector<Index> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size())
      throw invariant_error("FinFunction: table length " + std::to_string(table_.size()) +
                            " != domain size " + std::to_string(dom_.size()));
    for (Index v : table_)
      if (v >= cod_.size())
        throw invariant_error("FinFunction: entry " + std::to_string(v) +
                              " out of range for codomain of size " + std::to_string(cod_.size()));
  }

  static FinFunction identity(const FinSet& a) {
    std::vector<Index> t(a.size());
    std::iota(t.begin(), t.end(), Index{0});
    return FinFunction(a, a, std::move(t));
  }

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<Index>& table() const { return table_; }
  Index operator()(Index i) const { return table_[i]; }

  bool is_injective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (Index v : table_) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }
  bool is_surjective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (Index v : table_) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }
  bool is_bijective() const { return dom_.size() == cod_.size() && is_injective(); }

  std::optional<FinFunction> inverse() const {
    if (!is_bijective()) return std::nullopt;
    std::vector<Index> inv(table_.size());
    for (Index i = 0; i < table_.size(); ++i) inv[table_[i]] = i;
    return FinFunction(cod_, dom_, std::move(inv));
  }

  bool is_identity() const {
    if (!(dom_ == cod_)) return false;
    for (Index i = 0; i < table_.size(); ++i)
      if (table_[i] != i) return false;
    return true;
  }

  friend bool operator==(const FinFunction& a, const FinFunction& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Index> table_;
};

/// g after f.
inline FinFunction compose(const FinFunction& g, const FinFunction& f) {
  if (!(f.cod() == g.dom()))
    throw composition_error("compose: codomain " + std::to_string(f.cod().size()) +
                            " does not match domain " + std::to_string(g.dom().size()));
  std::vector<Index> t(f.dom().size());
  for (Index i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinFunction(f.dom(), g.cod(), std::move(t));
}

inline FinSet terminal_set() { return FinSet(1); }

inline FinFunction to_terminal(const FinSet& a) {
  return FinFunction(a, terminal_set(), std::vector<Index>(a.size(), 0));
}

inline FinFunction from_initial(const FinSet& a) { return FinFunction(FinSet(0), a, {}); }

// ---------------------------------------------------------------------------
// Products

struct Product {
  FinSet apex;
  FinFunction p1, p2;

  Index index(Index a, Index b) const { return a * p2.cod().size() + b; }

  /// The unique h with p1∘h = f and p2∘h = g.
  FinFunction pair(const FinFunction& f, const FinFunction& g) const {
    if (!(f.dom() == g.dom()) || !(f.cod() == p1.cod()) || !(g.cod() == p2.cod()))
      throw composition_error("product pairing: cone does not match the product");
    std::vector<Index> t(f.dom().size());
    for (Index z = 0; z < t.size(); ++z) t[z] = index(f(z), g(z));
    return FinFunction(f.dom(), apex, std::move(t));
  }
};

inline Product product(const FinSet& x, const FinSet& y) {
  const std::size_t n = x.size() * y.size();
  FinSet p = FinSet::built(n, Origin::product, {x, y});
  std::vector<Index> t1(n), t2(n);
  for (Index k = 0; k < n; ++k) {
    t1[k] = k / y.size();
    t2[k] = k % y.size();
  }
  return {p, FinFunction(p, x, std::move(t1)), FinFunction(p, y, std::move(t2))};
}

// ---------------------------------------------------------------------------
// Pullbacks

class Pullback {
 public:
  FinSet apex;
  FinFunction pi_f, pi_g;

  Pullback(const FinFunction& f, const FinFunction& g) : f_(f), g_(g) {
    if (!(f.cod() == g.cod()))
      throw composition_error("pullback: codomains " + std::to_string(f.cod().size()) + " and " +
                              std::to_string(g.cod().size()) + " differ");
    // fibre ranks of g, so that index(s,t) is O(1)
    std::vector<std::size_t> fibre(g.cod().size(), 0);
    rank_.resize(g.dom().size());
    for (Index t = 0; t < g.dom().size(); ++t) rank_[t] = fibre[g(t)]++;
    offset_.resize(f.dom().size() + 1, 0);
    for (Index s = 0; s < f.dom().size(); ++s) offset_[s + 1] = offset_[s] + fibre[f(s)];
    const std::size_t n = offset_.back();
    apex = FinSet::built(n, Origin::pullback, {f.dom(), g.dom()});
    std::vector<Index> ts(n), tt(n);
    Index k = 0;
    for (Index s = 0; s < f.dom().size(); ++s)
      for (Index t = 0; t < g.dom().size(); ++t)
        if (f(s) == g(t)) {
          ts[k] = s;
          tt[k] = t;
          ++k;
        }
    pi_f = FinFunction(apex, f.dom(), std::move(ts));
    pi_g = FinFunction(apex, g.dom(), std::move(tt));
  }

  const FinFunction& left() const { return f_; }
  const FinFunction& right() const { return g_; }

  std::optional<Index> index(Index s, Index t) const {
    if (f_(s) != g_(t)) return std::nullopt;
    return offset_[s] + rank_[t];
  }

  /// The unique h with pi_f∘h = a and pi_g∘h = b, for a commuting cone (a, b).
  FinFunction mediate(const FinFunction& a, const FinFunction& b) const {
    if (!(a.dom() == b.dom()) || !(a.cod() == f_.dom()) || !(b.cod() == g_.dom()))
      throw composition_error("pullback mediation: cone has the wrong shape");
    std::vector<Index> t(a.dom().size());
    for (Index z = 0; z < t.size(); ++z) {
      auto k = index(a(z), b(z));
      if (!k) throw composition_error("pullback mediation: cone does not commute");
      t[z] = *k;
    }
    return FinFunction(a.dom(), apex, std::move(t));
  }

 private:
  FinFunction f_, g_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> offset_;
};

inline Pullback pullback(const FinFunction& f, const FinFunction& g) { return Pullback(f, g); }

// ---------------------------------------------------------------------------
// Coproducts

struct Coproduct {
  FinSet apex;
  FinFunction i1, i2;

  /// The unique u with u∘i1 = f and u∘i2 = g.
  FinFunction copair(const FinFunction& f, const FinFunction& g) const {
    if (!(f.cod() == g.cod()) || !(f.dom() == i1.dom()) || !(g.dom() == i2.dom()))
      throw composition_error("coproduct copairing: cocone does not match the coproduct");
    std::vector<Index> t(apex.size());
    const std::size_t n1 = f.dom().size();
    for (Index k = 0; k < n1; ++k) t[k] = f(k);
    for (Index k = 0; k < g.dom().size(); ++k) t[n1 + k] = g(k);
    return FinFunction(apex, f.cod(), std::move(t));
  }
};

inline Coproduct coproduct(const FinSet& x, const FinSet& y) {
  const std::size_t n = x.size() + y.size();
  FinSet c = FinSet::built(n, Origin::coproduct, {x, y});
  std::vector<Index> t1(x.size()), t2(y.size());
  std::iota(t1.begin(), t1.end(), Index{0});
  std::iota(t2.begin(), t2.end(), x.size());
  return {c, FinFunction(x, c, std::move(t1)), FinFunction(y, c, std::move(t2))};
}

// ---------------------------------------------------------------------------
// Quotients

/// Union-find whose root is always the smallest member of its class.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }

  Index find(Index x) {
    Index root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      Index next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

  /// Class number per element; classes numbered by their smallest member.
  std::pair<std::size_t, std::vector<Index>> classes() {
    std::vector<Index> cls(parent_.size());
    std::size_t count = 0;
    for (Index x = 0; x < parent_.size(); ++x) {
      Index r = find(x);
      cls[x] = (r == x) ? count++ : cls[r];
    }
    return {count, std::move(cls)};
  }

 private:
  std::vector<Index> parent_;
};

struct Coequalizer {
  FinSet apex;
  FinFunction q;
  std::vector<Index> representative;  // smallest member of each class

  /// The unique u with u∘q = k, for k coequalizing the pair.
  FinFunction mediate(const FinFunction& k) const {
    if (!(k.dom() == q.dom()))
      throw composition_error("coequalizer mediation: cocone has the wrong domain");
    std::vector<Index> t(apex.size());
    for (Index c = 0; c < t.size(); ++c) t[c] = k(representative[c]);
    for (Index b = 0; b < q.dom().size(); ++b)
      if (t[q(b)] != k(b)) throw composition_error("coequalizer mediation: map does not coequalize");
    return FinFunction(apex, k.cod(), std::move(t));
  }
};

inline Coequalizer quotient(const FinSet& base, UnionFind& uf) {
  auto [count, cls] = uf.classes();
  FinSet qs = FinSet::built(count, Origin::quotient, {base});
  std::vector<Index> reps(count);
  for (Index b = cls.size(); b-- > 0;) reps[cls[b]] = b;
  return {qs, FinFunction(base, qs, std::move(cls)), std::move(reps)};
}

inline Coequalizer coequalizer(const FinFunction& f, const FinFunction& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw composition_error("coequalizer: maps are not parallel");
  UnionFind uf(f.cod().size());
  for (Index a = 0; a < f.dom().size(); ++a) uf.unite(f(a), g(a));
  return quotient(f.cod(), uf);
}

// ---------------------------------------------------------------------------
// Pushouts

struct Pushout {
  FinSet apex;
  FinFunction in_f, in_g;  // from f.cod and g.cod
  Coproduct sum;
  Coequalizer glue;

  /// The unique u with u∘in_f = k1 and u∘in_g = k2.
  FinFunction mediate(const FinFunction& k1, const FinFunction& k2) const {
    return glue.mediate(sum.copair(k1, k2));
  }
};

inline Pushout pushout(const FinFunction& f, const FinFunction& g) {
  if (!(f.dom() == g.dom())) throw composition_error("pushout: maps do not share a domain");
  Coproduct c = coproduct(f.cod(), g.cod());
  Coequalizer q = coequalizer(compose(c.i1, f), compose(c.i2, g));
  return {q.apex, compose(q.q, c.i1), compose(q.q, c.i2), std::move(c), std::move(q)};
}

// ---------------------------------------------------------------------------
// Image factorization of a pair of maps with common domain

struct ImageFactorization {
  FinSet image;
  FinFunction surj;         // dom -> image
  FinFunction left, right;  // image -> p.cod, image -> q.cod, jointly monic
};

inline ImageFactorization image_factorization(const FinFunction& p, const FinFunction& q) {
  if (!(p.dom() == q.dom())) throw composition_error("image_factorization: maps do not share a domain");
  const std::size_t w = q.cod().size();
  std::vector<std::size_t> slot(p.cod().size() * w, SIZE_MAX);
  std::vector<Index> s(p.dom().size()), l, r;
  for (Index x = 0; x < p.dom().size(); ++x) {
    std::size_t key = p(x) * w + q(x);
    if (slot[key] == SIZE_MAX) {
      slot[key] = l.size();
      l.push_back(p(x));
      r.push_back(q(x));
    }
    s[x] = slot[key];
  }
  FinSet im(l.size());
  return {im, FinFunction(p.dom(), im, std::move(s)), FinFunction(im, p.cod(), std::move(l)),
          FinFunction(im, q.cod(), std::move(r))};
}

inline bool jointly_monic(const FinFunction& p, const FinFunction& q) {
  return image_factorization(p, q).surj.is_bijective();
}

}  // namespace cobicat
