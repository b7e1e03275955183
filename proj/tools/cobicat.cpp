// cobicat: compose, tensor, dualize and generate serialized 1-cells, and run
// law suites.
//
// Exit codes: 0 ok, 1 law failures, 2 parse error or bad selector,
// 3 boundary mismatch, 4 unsupported law, 5 write failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cobicat/harness.hpp"

namespace {

using namespace cobicat;

enum Exit { ok = 0, law_failed = 1, bad_input = 2, mismatch = 3, unsupported = 4, write_failed = 5 };

struct Exiting {
  int code;
  std::string message;
};

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exiting{bad_input, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const std::exception& e) {
    throw Exiting{bad_input, path + ": " + e.what()};
  }
}

Bicat selector(const std::string& name) {
  auto b = parse_bicat(name);
  if (!b) throw Exiting{bad_input, "unknown bicategory '" + name + "' (expected span|rel|mat|prof|net)"};
  return *b;
}

/// A parsed 1-cell of any bicategory.
struct Cell {
  Bicat bicat;
  std::optional<FinSpan> span;
  std::optional<Relation> rel;
  std::optional<FinObMatrix> mat;
  std::optional<Profunctor> prof;
  std::optional<NetCospan> net;

  json to_json() const {
    switch (bicat) {
      case Bicat::span: return cobicat::to_json(*span);
      case Bicat::rel: return cobicat::to_json(*rel);
      case Bicat::mat: return cobicat::to_json(*mat);
      case Bicat::prof: return cobicat::to_json(*prof);
      case Bicat::net: return cobicat::to_json(*net);
    }
    return {};
  }

  std::string summary() const {
    std::ostringstream os;
    os << to_string(bicat) << ": ";
    switch (bicat) {
      case Bicat::span:
        os << span->src().size() << " -> " << span->tgt().size() << ", apex " << span->apex().size();
        break;
      case Bicat::rel:
        os << rel->span().src().size() << " -> " << rel->span().tgt().size() << ", pairs " << rel->pairs().size();
        break;
      case Bicat::mat: os << mat->src() << " -> " << mat->tgt(); break;
      case Bicat::prof:
        os << prof->src().objects() << " objects -> " << prof->tgt().objects() << " objects";
        break;
      case Bicat::net:
        os << net->src().vertices().size() << " -> " << net->tgt().vertices().size() << ", apex "
           << net->apex().vertices().size() << " vertices / " << net->apex().edges().size() << " edges";
        break;
    }
    return os.str();
  }
};

Cell parse_cell(Bicat b, const std::string& path) {
  json j = read_json(path);
  Cell c{b, {}, {}, {}, {}, {}};
  try {
    switch (b) {
      case Bicat::span: c.span = span_from_json(j); break;
      case Bicat::rel: c.rel = relation_from_json(j); break;
      case Bicat::mat: c.mat = obmatrix_from_json(j); break;
      case Bicat::prof: c.prof = profunctor_from_json(j); break;
      case Bicat::net: c.net = cospan_from_json(j); break;
    }
  } catch (const std::exception& e) {
    throw Exiting{bad_input, path + ": " + e.what()};
  }
  return c;
}

/// `first` then `second`.
Cell compose_cells(const Cell& first, const Cell& second) {
  Cell c{first.bicat, {}, {}, {}, {}, {}};
  switch (first.bicat) {
    case Bicat::span: c.span = compose_spans(*second.span, *first.span); break;
    case Bicat::rel: c.rel = rel_compose(*second.rel, *first.rel); break;
    case Bicat::mat: c.mat = mat_compose(*second.mat, *first.mat); break;
    case Bicat::prof: c.prof = prof_compose(*second.prof, *first.prof); break;
    case Bicat::net: c.net = cospan_compose(*second.net, *first.net); break;
  }
  return c;
}

Cell tensor_cells(const Cell& a, const Cell& b) {
  Cell c{a.bicat, {}, {}, {}, {}, {}};
  switch (a.bicat) {
    case Bicat::span: c.span = tensor_spans(*a.span, *b.span); break;
    case Bicat::rel: c.rel = rel_tensor(*a.rel, *b.rel); break;
    case Bicat::mat: c.mat = mat_tensor(*a.mat, *b.mat); break;
    case Bicat::prof: c.prof = prof_tensor(*a.prof, *b.prof); break;
    case Bicat::net: c.net = cospan_tensor(*a.net, *b.net); break;
  }
  return c;
}

Cell dual_cell(const Cell& a) {
  Cell c{a.bicat, {}, {}, {}, {}, {}};
  switch (a.bicat) {
    case Bicat::span: c.span = reverse_span(*a.span); break;
    case Bicat::rel: c.rel = rel_dual(*a.rel); break;
    case Bicat::mat: c.mat = mat_dual(*a.mat); break;
    case Bicat::prof: c.prof = prof_dual(*a.prof); break;
    case Bicat::net: c.net = reverse_span(*a.net); break;
  }
  return c;
}

Cell generate_cell(Bicat b, const GenConfig& cfg) {
  Rng rng(case_seed(cfg.seed, 0));
  Cell c{b, {}, {}, {}, {}, {}};
  switch (b) {
    case Bicat::span: {
      FinSet x = gen_finset(rng, cfg), y = gen_finset(rng, cfg);
      c.span = gen_span(rng, cfg, x, y);
      break;
    }
    case Bicat::rel: {
      FinSet x = gen_finset(rng, cfg), y = gen_finset(rng, cfg);
      c.rel = span_to_rel(gen_span(rng, cfg, x, y));
      break;
    }
    case Bicat::mat: {
      std::size_t s = gen_size(rng, cfg.max_dim), t = gen_size(rng, cfg.max_dim);
      c.mat = gen_matrix(rng, cfg, s, t);
      break;
    }
    case Bicat::prof: {
      if (cfg.max_set_size == 0) {
        c.prof = representable_sum(discrete_category(0), discrete_category(0), {}, false);
        break;
      }
      FinCat x = gen_fincat(rng), y = gen_fincat(rng);
      c.prof = gen_profunctor(rng, x, y);
      break;
    }
    case Bicat::net: {
      ResNet x = gen_network(rng, GenConfig{cfg.seed, cfg.max_set_size, cfg.max_dim, 0, cfg.cases});
      ResNet y = gen_network(rng, GenConfig{cfg.seed, cfg.max_set_size, cfg.max_dim, 0, cfg.cases});
      c.net = cfg.max_set_size == 0 ? id_span<ResNetOpCategory>(x) : gen_cospan(rng, x, y);
      break;
    }
  }
  return c;
}

/// Writes canonical JSON to `path`, or to standard output when empty.
void emit(const json& j, const std::string& path) {
  const std::string text = canonical(j) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Exiting{write_failed, "cannot open " + path + " for writing"};
  out << text;
  out.flush();
  if (!out) throw Exiting{write_failed, "write to " + path + " failed"};
}

/// Runs an operation, mapping library errors onto exit codes.
template <class Fn>
Cell guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const composition_error& e) {
    throw Exiting{mismatch, std::string("boundary mismatch: ") + e.what()};
  } catch (const invariant_error& e) {
    throw Exiting{mismatch, std::string("boundary mismatch: ") + e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compose, tensor, dualize and check cells of finite bicategories"};
  app.require_subcommand(1, 1);

  std::string bicat, out, law;
  std::vector<std::string> files;
  GenConfig cfg;

  auto* compose = app.add_subcommand("compose", "Compose A then B");
  compose->add_option("--bicat", bicat, "span|rel|mat|prof|net")->required();
  compose->add_option("files", files, "A.json B.json")->required()->expected(2);
  compose->add_option("--out", out, "Output file (default: standard output)");

  auto* tensor = app.add_subcommand("tensor", "Tensor A with B");
  tensor->add_option("--bicat", bicat, "span|rel|mat|prof|net")->required();
  tensor->add_option("files", files, "A.json B.json")->required()->expected(2);
  tensor->add_option("--out", out, "Output file (default: standard output)");

  auto* dual = app.add_subcommand("dual", "Dual of A");
  dual->add_option("--bicat", bicat, "span|rel|mat|prof|net")->required();
  dual->add_option("file", files, "A.json")->required()->expected(1);
  dual->add_option("--out", out, "Output file (default: standard output)");

  auto* check = app.add_subcommand("check", "Run a law suite and print its JSON report");
  check->add_option("--law", law, "pentagon|triangle|interchange|hexR|hexS|syllepsis|zigzag|swallowtail|coyoneda|cardinality")
      ->required();
  check->add_option("--bicat", bicat, "span|rel|mat|prof|net")->required();
  check->add_option("--seed", cfg.seed, "Seed");
  check->add_option("--cases", cfg.cases, "Cases");
  check->add_option("--max-size", cfg.max_set_size, "Largest generated set");

  auto* gen = app.add_subcommand("gen", "Generate a random 1-cell");
  gen->add_option("--bicat", bicat, "span|rel|mat|prof|net")->required();
  gen->add_option("--seed", cfg.seed, "Seed");
  gen->add_option("--max-size", cfg.max_set_size, "Largest generated set");
  gen->add_option("--out", out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_input;
  }

  try {
    const Bicat b = selector(bicat);
    if (*compose || *tensor) {
      Cell a = parse_cell(b, files[0]), c = parse_cell(b, files[1]);
      Cell r = guarded([&] { return *compose ? compose_cells(a, c) : tensor_cells(a, c); });
      emit(r.to_json(), out);
      if (!out.empty()) std::cout << r.summary() << "\n";
      return ok;
    }
    if (*dual) {
      Cell a = parse_cell(b, files[0]);
      Cell r = guarded([&] { return dual_cell(a); });
      emit(r.to_json(), out);
      if (!out.empty()) std::cout << r.summary() << "\n";
      return ok;
    }
    if (*check) {
      auto l = parse_law(law);
      if (!l) throw Exiting{bad_input, "unknown law '" + law + "'"};
      if (!law_supported(*l, b))
        throw Exiting{unsupported, "law " + law + " is not supported for " + bicat};
      cfg.max_dim = std::min<std::size_t>(cfg.max_dim, cfg.max_set_size);
      LawReport report = run_law_suite(*l, b, cfg);
      std::cout << canonical(to_json(report)) << "\n";
      return report.passed() ? ok : law_failed;
    }
    if (*gen) {
      cfg.max_dim = std::min<std::size_t>(cfg.max_dim, cfg.max_set_size);
      Cell r = generate_cell(b, cfg);
      emit(r.to_json(), out);
      if (!out.empty()) std::cout << r.summary() << "\n";
      return ok;
    }
  } catch (const Exiting& e) {
    std::cerr << "cobicat: " << e.message << "\n";
    return e.code;
  } catch (const unsupported_error& e) {
    std::cerr << "cobicat: " << e.what() << "\n";
    return unsupported;
  } catch (const std::exception& e) {
    std::cerr << "cobicat: " << e.what() << "\n";
    return bad_input;
  }
  return ok;
}
