#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cobicat/harness.hpp"
#include "cobicat/serialize.hpp"

using namespace cobicat;
namespace fs = std::filesystem;

namespace {

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("cobicat_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  std::string write(const std::string& name, const json& j) const {
    std::ofstream(path(name)) << canonical(j) << "\n";
    return path(name);
  }

  /// Exit status of the CLI; standard output lands in `stdout.txt`.
  int run(const std::string& args) const {
    const std::string cmd =
        std::string(COBICAT_CLI) + " " + args + " > " + path("stdout.txt") + " 2> " + path("stderr.txt");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& file) const {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string output() const { return read(path("stdout.txt")); }
};

}  // namespace

TEST_CASE("compose", "[cli]") {
  Sandbox sb;
  GenConfig cfg;
  Rng rng(case_seed(61, 0));
  for (int k = 0; k < 10; ++k) {
    FinSet a = gen_finset(rng, cfg), b = gen_finset(rng, cfg), c = gen_finset(rng, cfg);
    auto s = gen_span(rng, cfg, a, b);
    auto sf = sb.write("s.json", to_json(s));
    auto idf = sb.write("id.json", to_json(id_span<FinSetCategory>(b)));
    REQUIRE(sb.run("compose --bicat span " + sf + " " + idf) == 0);
    CHECK(sb.output() == canonical(to_json(compose_spans(id_span<FinSetCategory>(b), s))) + "\n");
    auto back = span_from_json(parse_json_text(sb.output()));
    CHECK(back.apex().size() == s.apex().size());

    auto r = span_to_rel(s), t = span_to_rel(gen_span(rng, cfg, b, c));
    auto rf = sb.write("r.json", to_json(r)), tf = sb.write("t.json", to_json(t));
    REQUIRE(sb.run("compose --bicat rel " + rf + " " + tf + " --out " + sb.path("rt.json")) == 0);
    auto rt = relation_from_json(parse_json_text(sb.read(sb.path("rt.json"))));
    std::vector<std::pair<Index, Index>> expected;
    for (Index x = 0; x < a.size(); ++x)
      for (Index z = 0; z < c.size(); ++z) {
        bool hit = false;
        for (Index y = 0; y < b.size(); ++y) hit = hit || (r.contains(x, y) && t.contains(y, z));
        if (hit) expected.emplace_back(x, z);
      }
    CHECK(rt.pairs() == expected);
    CHECK(sb.output().rfind("rel: ", 0) == 0);
  }

  auto m = sb.write("m.json", to_json(FinObMatrix(2, 3, std::vector<FinSet>(6, FinSet(1)))));
  auto out = sb.path("never.json");
  CHECK(sb.run("compose --bicat mat " + m + " " + m + " --out " + out) == 3);
  CHECK_FALSE(fs::exists(out));
  CHECK(sb.run("compose --bicat mat " + m) == 2);
  CHECK(sb.run("compose --bicat span " + m + " " + m) == 2);
  CHECK(sb.run("compose --bicat mat " + m + " " + sb.path("missing.json")) == 2);
}

TEST_CASE("tensor and dual", "[cli]") {
  Sandbox sb;
  auto m = sb.write("m.json", to_json(FinObMatrix(2, 3, std::vector<FinSet>(6, FinSet(2)))));
  auto n = sb.write("n.json", to_json(FinObMatrix(1, 2, std::vector<FinSet>(2, FinSet(3)))));
  REQUIRE(sb.run("tensor --bicat mat " + m + " " + n) == 0);
  auto t = obmatrix_from_json(parse_json_text(sb.output()));
  CHECK(t.src() == 2);
  CHECK(t.tgt() == 6);
  for (const auto& e : t.entries()) CHECK(e.size() == 6);

  auto a = sb.write("a.json", to_json(single_resistor(Resistance(2)).cospan()));
  REQUIRE(sb.run("tensor --bicat net " + a + " " + a) == 0);
  auto c = cospan_from_json(parse_json_text(sb.output()));
  CHECK(c.apex().vertices().size() == 4);
  CHECK(c.apex().edges().size() == 2);

  for (const char* b : {"span", "rel", "mat", "prof", "net"}) {
    const std::string x = sb.path(std::string(b) + ".json"), d1 = sb.path("d1.json"), d2 = sb.path("d2.json");
    REQUIRE(sb.run(std::string("gen --bicat ") + b + " --seed 5 --out " + x) == 0);
    REQUIRE(sb.run(std::string("dual --bicat ") + b + " " + x + " --out " + d1) == 0);
    REQUIRE(sb.run(std::string("dual --bicat ") + b + " " + d1 + " --out " + d2) == 0);
    INFO(b);
    CHECK(sb.read(d2) == sb.read(x));
  }
  CHECK(sb.run("dual --bicat cospan " + m) == 2);
  CHECK(sb.run("dual " + m) == 2);
}

TEST_CASE("check", "[cli]") {
  Sandbox sb;
  REQUIRE(sb.run("check --law swallowtail --bicat span --seed 7 --cases 20") == 0);
  const std::string first = sb.output();
  auto report = parse_json_text(first);
  CHECK(report["passed"] == true);
  CHECK(report["cases"] == 20);
  REQUIRE(sb.run("check --law swallowtail --bicat span --seed 7 --cases 20") == 0);
  CHECK(sb.output() == first);

  CHECK(sb.run("check --law coyoneda --bicat net") == 4);
  CHECK(sb.run("check --law interchange --bicat prof --cases 3") == 4);
  CHECK(sb.run("check --law hexagon --bicat span") == 2);
  CHECK(sb.run("check --law pentagon --bicat spam") == 2);
  CHECK(sb.run("check --law pentagon --bicat span --cases many") == 2);
  CHECK(sb.run("check --law cardinality --bicat mat --seed 3 --cases 50 --max-size 2") == 0);
}

TEST_CASE("gen", "[cli]") {
  Sandbox sb;
  const std::string a = sb.path("a.json"), b = sb.path("b.json");
  for (const char* bicat : {"span", "rel", "mat", "prof", "net"}) {
    INFO(bicat);
    REQUIRE(sb.run(std::string("gen --bicat ") + bicat + " --seed 11 --out " + a) == 0);
    REQUIRE(sb.run(std::string("gen --bicat ") + bicat + " --seed 11 --out " + b) == 0);
    CHECK(sb.read(a) == sb.read(b));
    CHECK(sb.output().rfind(bicat, 0) == 0);
  }

  REQUIRE(sb.run("gen --bicat span --seed 11") == 0);
  auto s = span_from_json(parse_json_text(sb.output()));
  CHECK(s.src_leg().dom() == s.apex());

  for (const char* bicat : {"span", "rel", "mat", "prof", "net"}) {
    INFO(bicat);
    for (int seed = 0; seed < 5; ++seed) {
      REQUIRE(sb.run(std::string("gen --bicat ") + bicat + " --max-size 0 --seed " + std::to_string(seed)) == 0);
      json j = parse_json_text(sb.output());
      if (std::string(bicat) == "mat") CHECK(j["entries"].empty());
      else if (std::string(bicat) == "prof") CHECK(j["values"].empty());
      else if (std::string(bicat) == "net") CHECK(j["apex"]["V"] == 0);
      else CHECK(j["apex"] == 0);
    }
  }

  CHECK(sb.run("gen --bicat span --out " + sb.path("no/such/dir/x.json")) == 5);
  CHECK(sb.run("gen --bicat nope --out " + a) == 2);
}
