#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "../support/oracles.hpp"
#include "hyperchrom/cli.hpp"
#include "hyperchrom/errors.hpp"
#include "hyperchrom/generators.hpp"
#include "hyperchrom/io.hpp"

using namespace hyperchrom;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperchrom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("hyperchrom-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("hypergraph files round-trip") {
    auto h = parse_hypergraph(R"( { "n" : 5, "edges" : [[3,2,1],[5,4,3]] } )");
    CHECK(h.edge(0) == std::vector<int>{1, 2, 3});
    CHECK(to_json(h) == R"({"n":5,"edges":[[1,2,3],[3,4,5]]})");
    CHECK(parse_hypergraph(to_json(h)) == h);
    CHECK_THROWS_AS(parse_hypergraph("{\"n\":2,\"edges\":[[1,3]]}"), InvalidInput);
    CHECK_THROWS_AS(parse_hypergraph("{\"n\":2}"), InvalidInput);
    CHECK_THROWS_AS(parse_hypergraph("not json"), InvalidInput);
    CHECK_THROWS_AS(parse_hypergraph("{\"n\":3,\"edges\":[[1,\"a\"]]}"), InvalidInput);
  }

  TEST_CASE("assignment files round-trip") {
    auto l = parse_list_assignment(R"({"k":2,"lists":{"1":[2,1],"2":[1,2],"3":[3,2]}})");
    CHECK(l.list(3) == std::vector<int>{2, 3});
    CHECK(to_json(l) == R"({"k":2,"lists":{"1":[1,2],"2":[1,2],"3":[2,3]}})");
    CHECK(parse_list_assignment(R"({"k":2,"lists":[[1,2],[1,2],[2,3]]})") == l);
    CHECK_THROWS_AS(parse_list_assignment(R"({"k":2,"lists":{"1":[1,2],"3":[1,2]}})"), InvalidInput);
    CHECK_THROWS_AS(parse_list_assignment(R"({"k":3,"lists":{"1":[1,2]}})"), InvalidInput);
  }

  TEST_CASE("subset and report formatting") {
    CHECK(format_subset(EdgeSubset::of({0, 2, 3})) == "[1,3,4]");
    CHECK(format_subset(EdgeSubset{}) == "[]");
    CHECK(report_csv_header() == "name,m,r,rho,k,lhs,rhs,verdict");
    BoundReport r;
    r.name = "x";
    r.m = 3;
    r.k = 4;
    r.lhs = 1;
    r.rhs = 0.5L;
    CHECK(to_csv_row(r).rfind("x,3,,,4,", 0) == 0);
    CHECK(contains(to_csv_row(r), ",holds"));
  }
}

TEST_SUITE("generators") {
  TEST_CASE("random families satisfy their postconditions") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      GeneratorParams p;
      p.seed = seed;
      p.family = Family::random_linear;
      p.n = 9;
      p.m = 4;
      p.r = 3;
      auto lin = generate(p);
      CHECK(validate(lin).empty());
      CHECK(lin.edge_count() == 4);
      CHECK(uniformity(lin) == 3);
      CHECK(is_linear(lin));

      p.family = Family::random_rho;
      p.n = 8;
      p.m = 3;
      p.r = 4;
      p.rho = 2;
      auto rh = generate(p);
      CHECK(validate(rh).empty());
      CHECK(uniformity(rh) == 4);
      CHECK(rho(rh) >= 2);

      p.family = Family::sunflower_free;
      p.n = 7;
      p.m = 4;
      p.r = 3;
      auto sf = generate(p);
      CHECK(validate(sf).empty());
      CHECK(sf.edge_count() == 4);
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          for (int c = b + 1; c < 4; ++c) {
            std::vector<int> ab, abc, ac, bc;
            std::set_intersection(sf.edge(a).begin(), sf.edge(a).end(), sf.edge(b).begin(), sf.edge(b).end(),
                                  std::back_inserter(ab));
            std::set_intersection(sf.edge(a).begin(), sf.edge(a).end(), sf.edge(c).begin(), sf.edge(c).end(),
                                  std::back_inserter(ac));
            std::set_intersection(sf.edge(b).begin(), sf.edge(b).end(), sf.edge(c).begin(), sf.edge(c).end(),
                                  std::back_inserter(bc));
            std::set_intersection(ab.begin(), ab.end(), sf.edge(c).begin(), sf.edge(c).end(), std::back_inserter(abc));
            CHECK_FALSE((ab == abc && ac == abc && bc == abc));
          }
    }
  }

  TEST_CASE("tight path and figure fixtures") {
    GeneratorParams p;
    p.family = Family::tight_path;
    p.m = 4;
    p.r = 3;
    auto path = generate(p);
    CHECK(path.vertex_count() == 6);
    CHECK(path.edge(3) == std::vector<int>{4, 5, 6});
    CHECK(gamma(path) == 2);
    CHECK(figure1(1) == make_hypergraph(6, {{1, 2, 3}, {1, 4, 5}, {3, 5, 6}, {2, 4, 6}}));
    for (int i = 1; i <= 3; ++i) {
      CHECK(is_linear(figure1(i)));
      CHECK(uniformity(figure1(i)) == 3);
    }
    CHECK_THROWS_AS(figure1(4), InvalidInput);
  }

  TEST_CASE("generation is deterministic and fails cleanly") {
    GeneratorParams p;
    p.family = Family::random_linear;
    p.n = 10;
    p.m = 6;
    p.seed = 9;
    CHECK(generate(p) == generate(p));
    p.n = 6;
    p.m = 20;
    p.max_draws = 5000;
    CHECK_THROWS_AS(generate(p), GenerationFailed);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("chromatic") {
    Scratch s;
    const auto e1 = s.write("e1.json", R"({"n":3,"edges":[[1,2,3]]})");
    const auto tri = s.write("tri.json", R"({"n":3,"edges":[[1,2],[2,3],[1,3]]})");
    auto r = cli({"chromatic", e1});
    CHECK(r.code == 0);
    CHECK(r.out == "k^3 - k\n");
    r = cli({"chromatic", tri, "--k", "3", "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "6 (oracle agrees)"));
    r = cli({"chromatic", tri, "--oracle", "--eta", "3,1,2"});
    CHECK(r.code == 0);
    r = cli({"chromatic", tri, "--eta", "1,2"});
    CHECK(r.code == kExitInputError);
    r = cli({"chromatic", tri, "--format", "json", "--k", "2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == 0);
    CHECK(j["polynomial"] == "k^3 - 3k^2 + 2k");

    std::string big = R"({"n":31,"edges":[)";
    for (int i = 1; i <= 30; ++i) big += (i > 1 ? "," : "") + ("[" + std::to_string(i) + "," + std::to_string(i + 1) + "]");
    big += "]}";
    r = cli({"chromatic", s.write("big.json", big)});
    CHECK(r.code == kExitBudget);
    CHECK(contains(r.err, "budget"));
    CHECK(cli({"chromatic", s.path("missing.json")}).code == kExitInputError);
    CHECK(cli({"chromatic", s.write("bad.json", R"({"n":2,"edges":[[1,3]]})")}).code == kExitInputError);
  }

  TEST_CASE("delta-cycles and nb") {
    Scratch s;
    const auto f1 = s.write("f1.json", R"({"n":6,"edges":[[1,2,3],[1,4,5],[3,5,6],[2,4,6]]})");
    auto r = cli({"delta-cycles", f1});
    CHECK(r.code == 0);
    CHECK(r.out == "[1,2,3,4]\ndelta-cycles: 1\n");
    r = cli({"delta-cycles", f1, "--broken", "--eta", "2,1,3,4"});
    CHECK(contains(r.out, "[1,3,4]\n"));
    const auto tri = s.write("tri.json", R"({"n":3,"edges":[[1,2],[2,3],[1,3]]})");
    r = cli({"nb", tri});
    CHECK(contains(r.out, "nb-subsets: 6\n"));
    const auto e2 = s.write("e2.json", R"({"n":5,"edges":[[1,2,3],[3,4,5]]})");
    r = cli({"nb", e2, "--size", "2"});
    CHECK(r.out == "[1,2]\nnb-subsets: 1\n");
    r = cli({"nb", tri, "--contains", "1"});
    CHECK(contains(r.out, "nb-subsets: 3\n"));
    CHECK(cli({"nb", tri, "--contains", "4"}).code == kExitInputError);
  }

  TEST_CASE("list-count and plk") {
    Scratch s;
    const auto e1 = s.write("e1.json", R"({"n":3,"edges":[[1,2,3]]})");
    const auto l = s.write("l.json", R"({"k":2,"lists":{"1":[1,2],"2":[1,2],"3":[2,3]}})");
    auto r = cli({"list-count", e1, l});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("P(H,L)=7, alpha=1\n", 0) == 0);
    r = cli({"plk", e1, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("P_l=6 = P\n", 0) == 0);
    CHECK(contains(r.out, "(constant lists)"));
    const auto tri = s.write("tri.json", R"({"n":3,"edges":[[1,2],[2,3],[1,3]]})");
    r = cli({"plk", tri, "--k", "2"});
    CHECK(r.out.rfind("P_l=0 = P\n", 0) == 0);
    const auto f1 = s.write("f1.json", R"({"n":6,"edges":[[1,2,3],[1,4,5],[3,5,6],[2,4,6]]})");
    r = cli({"plk", f1, "--k", "3"});
    CHECK(r.code == kExitBudget);
    CHECK(contains(r.err, "--search"));
    r = cli({"plk", f1, "--k", "3", "--search", "--seed", "3", "--iterations", "500"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("P_l<=", 0) == 0);
    CHECK(cli({"plk", f1}).code == kExitInputError);
  }

  TEST_CASE("verify") {
    Scratch s;
    const auto e2 = s.write("e2.json", R"({"n":5,"edges":[[1,2,3],[3,4,5]]})");
    auto r = cli({"verify", "--theorem", "1", e2, "--k", "5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "not-applicable"));
    fs::create_directories(s.path("inst"));
    s.write("inst/a.json", R"({"n":6,"edges":[[1,2,3],[1,4,5],[2,4,6]]})");
    s.write("inst/b.json", R"({"n":5,"edges":[[1,2,3],[3,4,5]]})");
    s.write("inst/notes.txt", "ignored");
    r = cli({"verify", "--theorem", "2", s.path("inst"), "--exact", "--csv", s.path("out.csv")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "a.json"));
    CHECK(contains(r.out, "b.json"));
    std::ifstream csv(s.path("out.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "name,m,r,rho,k,lhs,rhs,verdict");
    CHECK(cli({"verify", "--theorem", "2", s.path("nowhere")}).code == kExitInputError);
  }

  TEST_CASE("gen") {
    auto r = cli({"gen", "--family", "fig1", "--index", "1"});
    CHECK(r.code == 0);
    auto h = parse_hypergraph(r.out);
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 4);
    r = cli({"gen", "--family", "random-linear", "--r", "3", "--n", "9", "--m", "4", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(is_linear(parse_hypergraph(r.out)));
    CHECK(r.out == cli({"gen", "--family", "random-linear", "--r", "3", "--n", "9", "--m", "4", "--seed", "7"}).out);
    r = cli({"gen", "--family", "random-rho", "--r", "4", "--rho", "2", "--n", "8", "--m", "3", "--seed", "1"});
    CHECK(rho(parse_hypergraph(r.out)) >= 2);
    r = cli({"gen", "--family", "random-linear", "--r", "3", "--n", "6", "--m", "30", "--max-draws", "2000"});
    CHECK(r.code == kExitGeneratorFailure);
    CHECK(cli({"gen", "--family", "nonsense"}).code == kExitInputError);
  }

  TEST_CASE("argument errors and help") {
    CHECK(cli({}).code == kExitInputError);
    CHECK(cli({"frobnicate"}).code == kExitInputError);
    CHECK(cli({"--help"}).code == kExitOk);
  }

  TEST_CASE("budget from the environment") {
    Scratch s;
    const auto f1 = s.write("f1.json", R"({"n":6,"edges":[[1,2,3],[1,4,5],[3,5,6],[2,4,6]]})");
    ::setenv("HYPERCHROM_BUDGET", "edges=3", 1);
    auto r = cli({"chromatic", f1});
    ::setenv("HYPERCHROM_BUDGET", "edges=zz", 1);
    auto bad = cli({"chromatic", f1});
    ::unsetenv("HYPERCHROM_BUDGET");
    CHECK(r.code == kExitBudget);
    CHECK(bad.code == kExitInputError);
  }
}
