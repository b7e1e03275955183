// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every criterion produces a JSON report; the last one
// reruns all of them with the same seed and compares the bytes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cobicat/harness.hpp"
#include "cobicat/serialize.hpp"
#include "oracles.hpp"
#include "universal.hpp"

using namespace cobicat;
using C = FinSetCategory;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  json report = json::object();

  void require(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) report["firstFailure"] = what;
    ok = ok && cond;
  }
  void absorb(const LawReport& r) {
    cases += r.cases;
    ok = ok && r.passed();
    report[r.law + "/" + r.bicategory] = to_json(r);
  }
};

GenConfig config(std::uint64_t seed, std::size_t max_set, std::size_t max_dim, std::size_t cases) {
  return GenConfig{seed, max_set, max_dim, 3, cases};
}

// 1. Universal properties of the FinSet constructions.
Outcome universal_properties(std::uint64_t seed) {
  Outcome o;
  auto all = universal::enumerate_all(2);
  auto random = universal::random_suite(seed, 120, 3);
  o.cases = all.checked + random.checked;
  o.ok = all.failures == 0 && random.failures == 0 && random.checked >= 500;
  o.report = {{"enumerated", all.checked}, {"enumeratedFailures", all.failures},
              {"random", random.checked}, {"randomFailures", random.failures}};
  return o;
}

// 2. Span(FinSet) pentagon, triangle, interchange.
Outcome span_axioms(std::uint64_t seed) {
  Outcome o;
  for (Law law : {Law::pentagon, Law::triangle, Law::interchange})
    o.absorb(run_law_suite(law, Bicat::span, config(seed, 4, 4, 1000)));
  return o;
}

// 3. Zig-zag isomorphisms and the swallowtail in Span(FinSet).
Outcome span_compact_closed(std::uint64_t) {
  Outcome o;
  for (std::size_t n = 0; n <= 8; ++n) {
    auto d = duality<C>(FinSet(n));
    bool ok = is_invertible(d.zeta) && is_invertible(d.theta) &&
              is_identity(vcompose(invert(d.zeta), d.zeta)) && is_identity(vcompose(d.theta, invert(d.theta)));
    o.require(ok, "zig-zag at size " + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 6; ++n)
    o.require(is_identity(swallowtail_check<C>(FinSet(n))), "swallowtail at size " + std::to_string(n));
  o.report["sizes"] = "zigzag 0-8, swallowtail 0-6";
  return o;
}

std::vector<std::vector<bool>> incidence(const Relation& r) {
  std::vector<std::vector<bool>> m(r.span().src().size(), std::vector<bool>(r.span().tgt().size(), false));
  for (auto [x, y] : r.pairs()) m[x][y] = true;
  return m;
}

// 4. Rel against boolean matrix products; compact structure.
Outcome relations(std::uint64_t seed) {
  Outcome o;
  GenConfig cfg = config(seed, 6, 3, 0);
  Rng rng(case_seed(seed, 4));
  for (int k = 0; k < 1000; ++k) {
    FinSet a = gen_finset(rng, cfg), b = gen_finset(rng, cfg), c = gen_finset(rng, cfg);
    auto r = span_to_rel(gen_span(rng, cfg, a, b)), s = span_to_rel(gen_span(rng, cfg, b, c));
    auto sr = rel_compose(s, r);
    o.require(sr.pairs() == oracle::bool_product(incidence(r), incidence(s), c.size()) &&
                  jointly_monic(sr.span().src_leg(), sr.span().tgt_leg()),
              "composition case " + std::to_string(k));
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    auto st = rel_compact_structure(FinSet(n));
    o.require(st.structure_jointly_monic, "structure not jointly monic at size " + std::to_string(n));
    o.require(st.zeta_composite == rel_identity(FinSet(n)) && st.theta_composite == rel_identity(FinSet(n)),
              "zig-zag at size " + std::to_string(n));
  }
  return o;
}

// 5. Mat(FinSetRig) cardinalities and zig-zag.
Outcome matrices(std::uint64_t seed) {
  Outcome o;
  GenConfig cfg = config(seed, 3, 4, 0);
  Rng rng(case_seed(seed, 5));
  auto dim = [&] { return gen_size(rng, cfg.max_dim); };
  for (int k = 0; k < 500; ++k) {
    std::size_t a = dim(), b = dim(), c = dim();
    auto m = gen_matrix(rng, cfg, a, b), n = gen_matrix(rng, cfg, b, c);
    o.require(size_grid(mat_compose(n, m)) == oracle::int_product(size_grid(n), size_grid(m), b, a),
              "composition case " + std::to_string(k));
  }
  for (int k = 0; k < 200; ++k) {
    std::size_t a = dim(), b = dim(), c = dim(), d = dim();
    auto m = gen_matrix(rng, cfg, a, b), n = gen_matrix(rng, cfg, c, d);
    o.require(size_grid(mat_tensor(m, n)) == oracle::kronecker(size_grid(m), size_grid(n), a, c),
              "tensor case " + std::to_string(k));
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    auto z = mat_zigzag_check<FinSetRig>(n);
    auto inv = inverse_cell(z.cell);
    o.require(inv && is_identity(vcompose(*inv, z.cell)) && is_identity(vcompose(z.cell, *inv)) && z.triangle_at_unit,
              "zig-zag at n = " + std::to_string(n));
  }
  return o;
}

// 6. Prof: co-Yoneda, discrete composition, zig-zag.
Outcome profunctors(std::uint64_t seed) {
  Outcome o;
  o.absorb(run_law_suite(Law::coyoneda, Bicat::prof, config(seed, 3, 3, 60)));
  o.absorb(run_law_suite(Law::cardinality, Bicat::prof, config(seed, 3, 3, 200)));
  for (const auto& [name, c] : {std::pair{std::string("terminal"), terminal_category()},
                                std::pair{std::string("discrete-3"), discrete_category(3)},
                                std::pair{std::string("walking arrow"), walking_arrow()}})
    o.require(validate_witness(prof_zigzag_check(c).witness), "zig-zag on " + name);
  return o;
}

Circuit parallel_resistor(const Resistance& r) {
  ResNet foot = ResNet::edgeless(2);
  ResNet apex = ResNet::from_edges(2, {{0, 1, r}});
  auto leg = checked_morphism(foot, apex, FinFunction(foot.edges(), apex.edges(), {}),
                              FinFunction(foot.vertices(), apex.vertices(), {0, 1}));
  return Circuit(make_cospan(leg, leg));
}

// 7. Cospan(ResNet) pushouts and circuits.
Outcome circuits(std::uint64_t seed) {
  Outcome o;
  Rng rng(case_seed(seed, 7));
  for (int k = 0; k < 200; ++k) {
    auto c = universal::small_net_cocone(rng);
    o.require(universal::net_pushout_case(c.f, c.g, c.k1, c.k2), "pushout case " + std::to_string(k));
  }
  auto series = circuit_compose(single_resistor(Resistance(1)), single_resistor(Resistance(1))).cospan().apex();
  o.require(series.vertices().size() == 3 && series.edges().size() == 2, "series composite");
  auto parallel = circuit_compose(parallel_resistor(Resistance(1)), parallel_resistor(Resistance(1))).cospan().apex();
  o.require(parallel.vertices().size() == 2 && parallel.edges().size() == 2, "parallel composite");
  for (std::size_t n = 0; n <= 5; ++n)
    o.require(is_identity(circuit_swallowtail(ResNet::edgeless(n))), "swallowtail at foot size " + std::to_string(n));
  o.report["series"] = to_json(series);
  o.report["parallel"] = to_json(parallel);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "universal properties of finite sets", 30, universal_properties},
      {2, "span bicategory axioms", 120, span_axioms},
      {3, "compact closed spans", 60, span_compact_closed},
      {4, "relations", 60, relations},
      {5, "matrices over finite sets", 60, matrices},
      {6, "profunctors", 120, profunctors},
      {7, "resistor network cospans", 60, circuits},
  };
  return all;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  bool all_ok = true;
  std::vector<std::string> first_run;
  auto line = [&](bool ok, int id, const std::string& name, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    all_ok = all_ok && ok;
  };

  for (const auto& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run(kSeed);
    } catch (const std::exception& e) {
      o.ok = false;
      error = e.what();
    }
    const double secs = seconds_since(t0);
    first_run.push_back(canonical(o.report));
    char detail[256];
    std::snprintf(detail, sizeof detail, "%zu checks, %.2f s (limit %.0f s)", o.cases, secs, c.limit_seconds);
    std::string text = detail;
    if (!error.empty()) text += ", exception: " + error;
    if (o.report.contains("firstFailure")) text += ", first failure: " + o.report["firstFailure"].get<std::string>();
    line(o.ok && secs < c.limit_seconds, c.id, c.name, text);
  }

  auto t0 = std::chrono::steady_clock::now();
  std::size_t identical = 0;
  for (std::size_t k = 0; k < criteria().size(); ++k) {
    std::string again;
    try {
      again = canonical(criteria()[k].run(kSeed).report);
    } catch (const std::exception& e) {
      again = e.what();
    }
    identical += again == first_run[k];
  }
  char detail[128];
  std::snprintf(detail, sizeof detail, "%zu of %zu reports byte-identical on rerun, %.2f s", identical,
                criteria().size(), seconds_since(t0));
  line(identical == criteria().size(), 8, "determinism", detail);

  return all_ok ? 0 : 1;
}
