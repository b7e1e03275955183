#pragma once

// JSON encodings of every value type. Output is canonical: object keys are
// sorted and dump() emits no insignificant whitespace, so encode∘decode is
// byte-exact on canonical input. Decoding validates every invariant and
// throws parse_error on malformed input.

#include <string>
#include <vector>

#include "json.hpp"

#include "cobicat/mat.hpp"
#include "cobicat/prof.hpp"
#include "cobicat/rel.hpp"
#include "cobicat/resnet.hpp"

namespace cobicat {

using json = nlohmann::json;

class parse_error : public cobicat_error {
 public:
  using cobicat_error::cobicat_error;
};

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

inline std::vector<Index> index_array(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<Index> out;
  for (const auto& x : j) out.push_back(natural(x, what));
  return out;
}

/// Runs a constructor, reporting invariant violations as parse errors.
template <class Fn>
auto guarded(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const parse_error&) {
    throw;
  } catch (const cobicat_error& e) {
    throw parse_error(e.what());
  } catch (const json::exception& e) {
    throw parse_error(e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FinSet, FinFunction

inline json to_json(const FinSet& s) { return {{"size", s.size()}}; }

inline FinSet finset_from_json(const json& j) { return FinSet(detail::natural(detail::field(j, "size"), "size")); }

inline json to_json(const FinFunction& f) {
  return {{"dom", f.dom().size()}, {"cod", f.cod().size()}, {"table", f.table()}};
}

inline FinFunction finfunction_from_json(const json& j) {
  return detail::guarded([&] {
    return FinFunction(FinSet(detail::natural(detail::field(j, "dom"), "dom")),
                       FinSet(detail::natural(detail::field(j, "cod"), "cod")),
                       detail::index_array(detail::field(j, "table"), "table"));
  });
}

// ---------------------------------------------------------------------------
// Spans and relations

inline json to_json(const FinSpan& s) {
  return {{"src", s.src().size()},
          {"tgt", s.tgt().size()},
          {"apex", s.apex().size()},
          {"srcLeg", s.src_leg().table()},
          {"tgtLeg", s.tgt_leg().table()}};
}

inline FinSpan span_from_json(const json& j) {
  return detail::guarded([&] {
    FinSet src(detail::natural(detail::field(j, "src"), "src"));
    FinSet tgt(detail::natural(detail::field(j, "tgt"), "tgt"));
    FinSet apex(detail::natural(detail::field(j, "apex"), "apex"));
    return FinSpan(FinFunction(apex, src, detail::index_array(detail::field(j, "srcLeg"), "srcLeg")),
                   FinFunction(apex, tgt, detail::index_array(detail::field(j, "tgtLeg"), "tgtLeg")));
  });
}

inline json to_json(const FinSpanMap& m) { return {{"from", to_json(m.from())}, {"to", to_json(m.to())}, {"h", m.h().table()}}; }

inline FinSpanMap spanmap_from_json(const json& j) {
  return detail::guarded([&] {
    FinSpan from = span_from_json(detail::field(j, "from"));
    FinSpan to = span_from_json(detail::field(j, "to"));
    return FinSpanMap(from, to, FinFunction(from.apex(), to.apex(), detail::index_array(detail::field(j, "h"), "h")));
  });
}

inline json to_json(const Relation& r) { return to_json(r.span()); }

/// Rejects spans whose legs are not jointly monic.
inline Relation relation_from_json(const json& j) {
  return detail::guarded([&] { return Relation(span_from_json(j)); });
}

// ---------------------------------------------------------------------------
// Matrices over FinSetRig

inline json to_json(const FinObMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.tgt(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.src(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return {{"src", m.src()}, {"tgt", m.tgt()}, {"entries", rows}};
}

namespace detail {

template <class T, class Fn>
std::vector<T> grid(const json& rows, std::size_t src, std::size_t tgt, Fn decode) {
  if (!rows.is_array() || rows.size() != tgt) throw parse_error("entries must have one row per target index");
  std::vector<T> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != src) throw parse_error("entries rows must have one column per source index");
    for (const auto& x : row) out.push_back(decode(x));
  }
  return out;
}

}  // namespace detail

inline FinObMatrix obmatrix_from_json(const json& j) {
  return detail::guarded([&] {
    auto src = detail::natural(detail::field(j, "src"), "src");
    auto tgt = detail::natural(detail::field(j, "tgt"), "tgt");
    return FinObMatrix(src, tgt, detail::grid<FinSet>(detail::field(j, "entries"), src, tgt, finset_from_json));
  });
}

inline json to_json(const FinMorMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.from().tgt(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.from().src(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return {{"from", to_json(m.from())}, {"to", to_json(m.to())}, {"entries", rows}};
}

inline FinMorMatrix mormatrix_from_json(const json& j) {
  return detail::guarded([&] {
    auto from = obmatrix_from_json(detail::field(j, "from"));
    auto to = obmatrix_from_json(detail::field(j, "to"));
    return FinMorMatrix(from, to,
                        detail::grid<FinFunction>(detail::field(j, "entries"), from.src(), from.tgt(),
                                                  finfunction_from_json));
  });
}

// ---------------------------------------------------------------------------
// Categories and profunctors

/// Composition is listed as [g, f, g∘f] triples for composable pairs.
inline json to_json(const FinCat& c) {
  json comp = json::array();
  for (Index g = 0; g < c.morphisms(); ++g)
    for (Index f = 0; f < c.morphisms(); ++f)
      if (c.comp(g, f) != no_index) comp.push_back({g, f, c.comp(g, f)});
  return {{"objects", c.objects()},
          {"src", c.src_table()},
          {"tgt", c.tgt_table()},
          {"id", c.id_table()},
          {"comp", comp}};
}

/// Rejects tables that violate the category axioms.
inline FinCat fincat_from_json(const json& j) {
  return detail::guarded([&] {
    auto src = detail::index_array(detail::field(j, "src"), "src");
    const std::size_t m = src.size();
    std::vector<Index> comp(m * m, no_index);
    const json& triples = detail::field(j, "comp");
    if (!triples.is_array()) throw parse_error("comp must be an array");
    for (const auto& t : triples) {
      auto v = detail::index_array(t, "comp entry");
      if (v.size() != 3 || v[0] >= m || v[1] >= m) throw parse_error("comp entries must be [g, f, g∘f] triples");
      comp[v[0] * m + v[1]] = v[2];
    }
    FinCat c(detail::natural(detail::field(j, "objects"), "objects"), std::move(src),
             detail::index_array(detail::field(j, "tgt"), "tgt"), detail::index_array(detail::field(j, "id"), "id"),
             std::move(comp));
    if (!validate_fincat(c)) throw parse_error("category axioms fail");
    return c;
  });
}

/// values[x][y] are sizes; left[g][y] and right[h][x] are action tables.
inline json to_json(const Profunctor& p) {
  const std::size_t X = p.src().objects(), Y = p.tgt().objects();
  json values = json::array(), left = json::array(), right = json::array();
  for (Index x = 0; x < X; ++x) {
    json row = json::array();
    for (Index y = 0; y < Y; ++y) row.push_back(p.value(x, y).size());
    values.push_back(row);
  }
  for (Index g = 0; g < p.src().morphisms(); ++g) {
    json row = json::array();
    for (Index y = 0; y < Y; ++y) row.push_back(p.left(g, y).table());
    left.push_back(row);
  }
  for (Index h = 0; h < p.tgt().morphisms(); ++h) {
    json row = json::array();
    for (Index x = 0; x < X; ++x) row.push_back(p.right(h, x).table());
    right.push_back(row);
  }
  return {{"src", to_json(p.src())}, {"tgt", to_json(p.tgt())}, {"values", values}, {"left", left}, {"right", right}};
}

/// Rejects action tables that are not functorial or do not commute.
inline Profunctor profunctor_from_json(const json& j) {
  return detail::guarded([&] {
    FinCat X = fincat_from_json(detail::field(j, "src"));
    FinCat Y = fincat_from_json(detail::field(j, "tgt"));
    std::vector<FinSet> values;
    const json& vs = detail::field(j, "values");
    if (!vs.is_array() || vs.size() != X.objects()) throw parse_error("values must have one row per source object");
    for (const auto& row : vs) {
      if (!row.is_array() || row.size() != Y.objects()) throw parse_error("values rows must have one entry per target object");
      for (const auto& v : row) values.emplace_back(detail::natural(v, "value"));
    }
    auto table = [](const json& rows, std::size_t outer, std::size_t inner, const char* what) {
      if (!rows.is_array() || rows.size() != outer) throw parse_error(std::string(what) + " has the wrong number of rows");
      std::vector<std::vector<Index>> out;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != inner) throw parse_error(std::string(what) + " row has the wrong length");
        for (const auto& t : row) out.push_back(detail::index_array(t, what));
      }
      return out;
    };
    auto lt = table(detail::field(j, "left"), X.morphisms(), Y.objects(), "left");
    auto rt = table(detail::field(j, "right"), Y.morphisms(), X.objects(), "right");
    std::vector<FinFunction> left, right;
    const std::size_t ny = Y.objects(), nx = X.objects();
    for (Index g = 0; g < X.morphisms(); ++g)
      for (Index y = 0; y < ny; ++y)
        left.emplace_back(values[X.tgt(g) * ny + y], values[X.src(g) * ny + y], lt[g * ny + y]);
    for (Index h = 0; h < Y.morphisms(); ++h)
      for (Index x = 0; x < nx; ++x)
        right.emplace_back(values[x * ny + Y.src(h)], values[x * ny + Y.tgt(h)], rt[h * nx + x]);
    Profunctor p(X, Y, std::move(values), std::move(left), std::move(right));
    if (!validate_profunctor(p)) throw parse_error("profunctor actions are not functorial");
    return p;
  });
}

// ---------------------------------------------------------------------------
// Resistor networks and cospans

inline json to_json(const ResNet& n) {
  json r = json::array();
  for (const auto& x : n.r()) r.push_back(to_string(x));
  return {{"V", n.vertices().size()}, {"E", n.edges().size()}, {"s", n.s().table()}, {"t", n.t().table()}, {"r", r}};
}

inline ResNet resnet_from_json(const json& j) {
  return detail::guarded([&] {
    FinSet v(detail::natural(detail::field(j, "V"), "V")), e(detail::natural(detail::field(j, "E"), "E"));
    std::vector<Resistance> r;
    const json& rs = detail::field(j, "r");
    if (!rs.is_array()) throw parse_error("r must be an array");
    for (const auto& x : rs) {
      if (!x.is_string()) throw parse_error("resistances must be \"p/q\" strings");
      r.push_back(parse_resistance(x.get<std::string>()));
    }
    return ResNet(v, e, FinFunction(e, v, detail::index_array(detail::field(j, "s"), "s")),
                  FinFunction(e, v, detail::index_array(detail::field(j, "t"), "t")), std::move(r));
  });
}

inline json to_json(const ResNetMorphism& m) {
  return {{"dom", to_json(m.dom)}, {"cod", to_json(m.cod)}, {"eps", m.eps.table()}, {"ups", m.ups.table()}};
}

inline ResNetMorphism morphism_from_json(const json& j) {
  return detail::guarded([&] {
    ResNet dom = resnet_from_json(detail::field(j, "dom")), cod = resnet_from_json(detail::field(j, "cod"));
    return checked_morphism(dom, cod,
                            FinFunction(dom.edges(), cod.edges(), detail::index_array(detail::field(j, "eps"), "eps")),
                            FinFunction(dom.vertices(), cod.vertices(),
                                        detail::index_array(detail::field(j, "ups"), "ups")));
  });
}

inline json to_json(const NetCospan& c) {
  auto leg = [](const ResNetMorphism& m) { return json{{"eps", m.eps.table()}, {"ups", m.ups.table()}}; };
  return {{"srcFoot", to_json(c.src())},
          {"tgtFoot", to_json(c.tgt())},
          {"apex", to_json(c.apex())},
          {"srcLeg", leg(src_leg(c))},
          {"tgtLeg", leg(tgt_leg(c))}};
}

inline NetCospan cospan_from_json(const json& j) {
  return detail::guarded([&] {
    ResNet s = resnet_from_json(detail::field(j, "srcFoot"));
    ResNet t = resnet_from_json(detail::field(j, "tgtFoot"));
    ResNet a = resnet_from_json(detail::field(j, "apex"));
    auto leg = [&](const json& l, const ResNet& foot) {
      return checked_morphism(foot, a,
                              FinFunction(foot.edges(), a.edges(), detail::index_array(detail::field(l, "eps"), "eps")),
                              FinFunction(foot.vertices(), a.vertices(),
                                          detail::index_array(detail::field(l, "ups"), "ups")));
    };
    return make_cospan(leg(detail::field(j, "srcLeg"), s), leg(detail::field(j, "tgtLeg"), t));
  });
}

inline json to_json(const NetCospanMap& m) {
  return {{"from", to_json(m.from())}, {"to", to_json(m.to())}, {"h", to_json(m.h().m)}};
}

inline std::string canonical(const json& j) { return j.dump(); }

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cobicat
