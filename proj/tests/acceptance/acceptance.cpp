// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "../support/oracles.hpp"
#include "hyperchrom/bounds.hpp"
#include "hyperchrom/budget.hpp"
#include "hyperchrom/chromatic.hpp"
#include "hyperchrom/cycles.hpp"
#include "hyperchrom/generators.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/io.hpp"
#include "hyperchrom/listcolor.hpp"

using namespace hyperchrom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

EdgeLabelling random_labelling(int m, std::mt19937_64& rng) {
  std::vector<int> labels;
  for (int r : oracle::random_rank(m, rng)) labels.push_back(r + 1);
  return EdgeLabelling::from_labels(labels);
}

std::string show(const Hypergraph& h) {
  std::ostringstream os;
  os << "n=" << h.vertex_count() << " {";
  for (int i = 0; i < h.edge_count(); ++i) {
    os << (i ? " " : "") << "[";
    for (std::size_t j = 0; j < h.edge(i).size(); ++j) os << (j ? "," : "") << h.edge(i)[j];
    os << "]";
  }
  return os.str() + "}";
}

/// Smallest edge list over all vertex relabellings; n <= 8.
std::vector<unsigned> iso_key(const Hypergraph& h) {
  std::vector<int> perm(static_cast<std::size_t>(h.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<unsigned> best;
  do {
    std::vector<unsigned> key;
    for (const auto& e : h.edges()) {
      unsigned s = 0;
      for (int v : e) s |= 1u << perm[v - 1];
      key.push_back(s);
    }
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// 1. NB(H) expansion of P(H,k) against brute-force counts.
Outcome whitney_equivalence() {
  Outcome o;
  const Budget budget;
  std::mt19937_64 rng(1001);
  long exhaustive = 0, randomized = 0, checks = 0;
  auto check = [&](const Hypergraph& h) {
    std::array<std::uint64_t, 5> want{};
    for (int k = 1; k <= 4; ++k) want[k] = oracle::proper_colorings(h, k);
    for (int rep = 0; rep < 5; ++rep) {
      const auto eta = random_labelling(h.edge_count(), rng);
      const auto p = chromatic_polynomial(h, eta, budget);
      for (int k = 1; k <= 4; ++k) {
        ++checks;
        if (p.eval(k) != want[k]) o.fail(show(h) + " k=" + std::to_string(k));
      }
    }
  };
  for (int n = 2; n <= 6; ++n)
    oracle::for_each_small_hypergraph(n, 4, 2, n, false, [&](const Hypergraph& h) {
      ++exhaustive;
      check(h);
    });
  while (randomized < 250) {
    Hypergraph h;
    const int n = 2 + static_cast<int>(rng() % 7);
    if (!oracle::random_hypergraph(n, 1 + static_cast<int>(rng() % 5), 2, std::min(n, 5), rng, h)) continue;
    ++randomized;
    check(h);
  }
  o.detail = std::to_string(exhaustive) + " exhaustive (n<=6, m<=4, one per degree-sorted labelling) + " +
             std::to_string(randomized) + " random (n<=8, m<=5); k=1..4, 5 labellings each; " +
             std::to_string(checks) + " equalities";
  return o;
}

// 2. List-coloring expansion against brute force.
Outcome list_equivalence() {
  Outcome o;
  const Budget budget;
  std::mt19937_64 rng(2002);
  int pairs = 0;
  while (pairs < 600) {
    Hypergraph h;
    const int n = 2 + static_cast<int>(rng() % 5);
    if (!oracle::random_hypergraph(n, 1 + static_cast<int>(rng() % 4), 2, n, rng, h)) continue;
    const int k = 1 + static_cast<int>(rng() % 4);
    const int universe = k + static_cast<int>(rng() % (6 - k));
    const auto l = oracle::random_assignment(n, k, universe, rng);
    const auto eta = random_labelling(h.edge_count(), rng);
    const BigInt want = oracle::list_colorings(h, l);
    if (count_list_colorings_expansion(h, l, eta, budget) != want || count_list_colorings(h, l, budget) != want)
      o.fail(show(h));
    ++pairs;
  }
  o.detail = std::to_string(pairs) + " random (H,L) pairs, n<=6, m<=4, universe<=5, random labelling";
  return o;
}

// 3. beta(A,L) - k^c(A) >= -k^(c(A)-1) sum_{e in A} alpha(e,L).
Outcome lemma_beta() {
  Outcome o;
  std::mt19937_64 rng(3003);
  int triples = 0, tight = 0;
  while (triples < 12000) {
    Hypergraph h;
    const int n = 2 + static_cast<int>(rng() % 7);
    if (!oracle::random_hypergraph(n, 1 + static_cast<int>(rng() % 6), 2, std::min(n, 4), rng, h)) continue;
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto l = oracle::random_assignment(n, k, k + static_cast<int>(rng() % 4), rng);
    const EdgeSubset a(rng() & h.all_edges().mask());
    const int c = oracle::components(h, a);
    BigInt alpha_sum = 0;
    a.for_each([&](int e) { alpha_sum += oracle::alpha_edge(h, l, e); });
    const BigInt b = oracle::beta(h, l, a);
    if (b != beta(h, l, a)) o.fail("beta mismatch on " + show(h));
    const BigInt lhs = b - ipow(k, static_cast<unsigned>(c));
    const BigInt rhs = -ipow(k, static_cast<unsigned>(c - 1)) * alpha_sum;
    if (lhs < rhs) o.fail(show(h));
    if (lhs == rhs && alpha_sum > 0) ++tight;
    ++triples;
  }
  o.detail = std::to_string(triples) + " random (H,A,L) triples, " + std::to_string(tight) + " attain equality";
  return o;
}

// 4. Component bounds for members of NB(H).
Outcome lemma_components() {
  Outcome o;
  const Budget budget;
  std::mt19937_64 rng(4004);
  long instances = 0, members = 0, violations = 0, outside_matchings = 0;
  auto check = [&](const Hypergraph& h) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    const int r = *uniformity(h);
    const bool linear = is_linear(h);
    const int t = m >= 2 ? rho(h) : 0;
    // pairwise disjoint edges, the only case where rho reaches r
    const bool matching = m >= 2 && t == r;
    ++instances;
    for (const auto& eta : {EdgeLabelling::identity(m), EdgeLabelling::reversed(m), random_labelling(m, rng)}) {
      for (auto a : nb_subsets(h, eta, {}, budget)) {
        const int i = a.size();
        if (i == 0) continue;
        ++members;
        const int c = oracle::components(h, a);
        bool ok = i == 1 ? c == n - r + 1 : c <= n - r - t - i + 3;
        if (linear) {
          if (i <= 2) ok = ok && c == n - (r - 1) * i;
          else if (i == 3) ok = ok && c >= n - 3 * r + 3 && c <= n - 3 * r + 4;
          else ok = ok && c <= n - 3 * r - i + 7;
        }
        if (!ok) {
          ++violations;
          if (!matching || i != 2) ++outside_matchings;
          o.fail(show(h) + " A=" + format_subset(a) + " c(A)=" + std::to_string(c));
        }
      }
    }
  };
  for (int r = 3; r <= 4; ++r)
    for (int n = r; n <= 7; ++n) oracle::for_each_small_hypergraph(n, 4, r, r, false, check);
  for (int n = 3; n <= 9; ++n) oracle::for_each_small_hypergraph(n, n <= 8 ? 6 : 5, 3, 3, true, check);
  for (int n = 4; n <= 9; ++n) oracle::for_each_small_hypergraph(n, 4, 4, 4, true, check);
  o.detail = std::to_string(instances) + " uniform instances (r=3,4 with n<=7, m<=4; linear r=3 n<=9 m<=6; linear r=4 " +
             "n<=9 m<=4), " + std::to_string(members) + " NB members over 3 labellings each; " +
             std::to_string(violations) + " violations, " + std::to_string(outside_matchings) +
             " of them outside the family of pairwise disjoint edges (rho = r) with |A| = 2";
  return o;
}

// 5. Proposition and corollary lower bounds on P(H,L) - P(H,k).
Outcome proposition_soundness() {
  Outcome o;
  const Budget budget;
  std::mt19937_64 rng(5005);
  long pairs = 0, linear_pairs = 0, uniform_violations = 0, outside_matchings = 0, other_violations = 0;
  auto check = [&](const Hypergraph& h) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    const int r = *uniformity(h);
    const bool matching = m >= 2 && rho(h) == r;
    for (int k = 2; k <= 3; ++k) {
      const BigInt pk = oracle::proper_colorings(h, k);
      for (int rep = 0; rep < 8; ++rep) {
        const auto l = oracle::random_assignment(n, k, k + 1 + static_cast<int>(rng() % 2), rng);
        const int a = alpha(h, l).total;
        if (a == 0) continue;
        ++pairs;
        const BigInt diff = BigInt(oracle::list_colorings(h, l)) - pk;
        const auto eta = random_labelling(m, rng);
        const BigInt bound = prop1_rhs(h, l, eta, budget);
        if (diff < bound) {
          ++other_violations;
          o.fail("prop1 " + show(h));
        }
        if (m < 2) continue;
        const Real scale = std::pow(static_cast<Real>(k), static_cast<Real>(n - r)) * a;
        const Real normalized = diff.convert_to<Real>() / scale;
        const Real uniform = cor_uniform_rhs(m, rho(h), k, UniformMode::binomial);
        if (!compare_with_slack(normalized, ">=", uniform) ||
            !compare_with_slack(bound.convert_to<Real>() / scale, ">=", uniform)) {
          ++uniform_violations;
          if (!matching) ++outside_matchings;
          o.fail("uniform corollary " + show(h) + " k=" + std::to_string(k));
        }
        if (!compare_with_slack(uniform, ">=", cor_uniform_rhs(m, rho(h), k, UniformMode::sinh))) {
          ++other_violations;
          o.fail("relaxation order " + show(h));
        }
        if (is_linear(h)) {
          ++linear_pairs;
          if (!compare_with_slack(normalized, ">=", cor_linear_rhs(m, r, k, LinearMode::binomial))) {
            ++other_violations;
            o.fail("linear corollary " + show(h));
          }
        }
      }
    }
  };
  for (int r = 3; r <= 4; ++r)
    for (int n = r; n <= 7; ++n) oracle::for_each_small_hypergraph(n, 3, r, r, false, check);
  o.detail = std::to_string(pairs) + " (H,L) pairs with alpha>0 (r=3,4, n<=7, m<=3, k=2,3, universe<=k+2), " +
             std::to_string(linear_pairs) + " linear; proposition, linear corollary and relaxation-order violations: " +
             std::to_string(other_violations) + "; uniform corollary violations: " +
             std::to_string(uniform_violations) + ", " + std::to_string(outside_matchings) +
             " of them outside the family of pairwise disjoint edges (rho = r)";
  return o;
}

// 6. Theorem conclusions on the smallest instances where they apply.
Outcome theorem_gaps() {
  Outcome o;
  const Budget budget;
  std::set<std::vector<unsigned>> seen;
  std::vector<Hypergraph> classes;
  for (int n = 3; n <= 6; ++n)
    oracle::for_each_small_hypergraph(n, 3, 3, 3, true, [&](const Hypergraph& h) {
      if (h.edge_count() == 3 && seen.insert(iso_key(h)).second) classes.push_back(h);
    });
  const Real gap = thm2_gap_factor(3);
  const int k_min = static_cast<int>(std::ceil(threshold_thm2(3)));
  long assignments = 0;
  for (const auto& h : classes) {
    const int n = h.vertex_count();
    const ListColoringCounter counter(h, EdgeLabelling::identity(3), budget);
    for (int k = k_min; k <= 5; ++k) {
      const std::int64_t pk = chromatic_polynomial(h, budget).eval(k).convert_to<std::int64_t>();
      const int u = k + 2;
      std::vector<std::uint64_t> subsets;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << u); ++s)
        if (std::popcount(s) == k) subsets.push_back(s);
      std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
      pos[0] = std::find(subsets.begin(), subsets.end(), (std::uint64_t{1} << k) - 1) - subsets.begin();
      std::vector<std::uint64_t> masks(static_cast<std::size_t>(n));
      std::mt19937_64 spot(6006);
      while (true) {
        for (int v = 0; v < n; ++v) masks[v] = subsets[pos[v]];
        int a = 0;
        for (const auto& e : h.edges()) {
          std::uint64_t common = ~std::uint64_t{0};
          for (int v : e) common &= masks[v - 1];
          a += k - std::popcount(common);
        }
        if (a > 0) {
          ++assignments;
          const std::int64_t pl = counter.count_masks(masks, k);
          const Real lhs = static_cast<Real>(pl - pk);
          const Real rhs = gap * std::pow(static_cast<Real>(k), static_cast<Real>(n - 3)) * a;
          if (!(lhs > rhs)) o.fail("gap " + show(h) + " k=" + std::to_string(k));
          if (spot() % 20000 == 0) {
            std::vector<std::vector<int>> lists;
            for (auto mk : masks) {
              std::vector<int> list;
              for (int c = 0; c < u; ++c)
                if ((mk >> c) & 1u) list.push_back(c + 1);
              lists.push_back(list);
            }
            if (static_cast<std::int64_t>(oracle::list_colorings(h, ListAssignment(k, lists))) != pl)
              o.fail("counter mismatch " + show(h));
          }
        }
        int i = 1;
        while (i < n && pos[i] + 1 == subsets.size()) pos[i++] = 0;
        if (i >= n) break;
        ++pos[i];
      }
    }
  }

  // Theorem 1 needs rho >= 2 and m >= 5: check P_l = P over assignments using at most k+2 colors.
  std::vector<Hypergraph> thm1_cases{make_hypergraph(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}})};
  GeneratorParams p;
  p.family = Family::random_rho;
  p.n = 8;
  p.m = 5;
  p.r = 4;
  p.rho = 2;
  p.seed = 3;
  thm1_cases.push_back(generate(p));
  std::string thm1;
  for (const auto& h : thm1_cases) {
    if (!theorem_preconditions(h, 1).empty()) {
      o.fail("theorem 1 hypotheses fail on " + show(h));
      continue;
    }
    const int k = static_cast<int>(std::ceil(theorem_threshold(h, 1)));
    const int colors = h.vertex_count() <= 7 ? k + 2 : k + 1;
    const auto res = list_color_function_exact(h, k, budget, colors);
    const auto pk = chromatic_polynomial(h, budget).eval(k);
    if (res.value != pk) o.fail("P_l < P on " + show(h));
    thm1 += " " + show(h) + " k=" + std::to_string(k) + " colors<=" + std::to_string(colors) + " P_l=P=" + pk.str() +
            " (" + std::to_string(res.assignments_examined) + " classes);";
  }

  o.detail = std::to_string(classes.size()) + " linear 3-uniform class(es) with m=3, n<=6; k=" + std::to_string(k_min) +
             "..5; " + std::to_string(assignments) +
             " assignments with alpha>0 using at most k+2 colors (within caps, first list fixed by renaming); "
             "theorem 1:" +
             thm1;
  return o;
}

// 7. Numeric grid checks.
Outcome grids(double& seconds) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify_grids();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::set<std::string> names;
  for (const auto& r : reports) {
    names.insert(r.name);
    if (r.verdict != Verdict::holds) o.fail(r.name + " " + r.detail);
  }
  for (const char* required : {"psi_Mt_positive", "psi_identity_relative_error", "phi1_positive", "phi2_positive",
                               "thm2_phi_gap", "Psi_r_increasing_in_r"})
    if (!names.count(required)) o.fail(std::string("missing grid ") + required);
  if (seconds > 60) o.fail("grid runtime above one minute");
  std::ostringstream os;
  os << reports.size() << " grids, " << std::fixed << std::setprecision(2) << seconds << " s";
  o.detail = os.str();
  return o;
}

// 8. Threshold constants.
Outcome thresholds() {
  Outcome o;
  struct Case {
    const char* name;
    Real got, want, tol;
  };
  const Case cases[] = {{"threshold_thm1(9,2)", threshold_thm1(9, 2), 4.6165L, 1e-3L},
                        {"threshold_thm2(9)", threshold_thm2(9), 4.5588L, 1e-3L},
                        {"threshold_thm3(9)", threshold_thm3(9), 3.1969L, 1e-3L},
                        {"thm2_gap_factor(9)", thm2_gap_factor(9), 0.003007L, 1e-5L}};
  std::ostringstream os;
  os << std::setprecision(7);
  for (const auto& c : cases) {
    if (!(std::fabs(c.got - c.want) <= c.tol)) o.fail(c.name);
    os << c.name << "=" << static_cast<double>(c.got) << " ";
  }
  os << "(thm3_gap_factor(9)=" << static_cast<double>(thm3_gap_factor(9)) << ", informational)";
  o.detail = os.str();
  return o;
}

// 9. Figure 1 fixtures.
Outcome fixtures() {
  Outcome o;
  const bool expect[] = {true, false, false};
  for (int i = 1; i <= 3; ++i) {
    const auto h = figure1(i);
    const auto all = h.all_edges();
    if (is_delta_cycle(h, all) != expect[i - 1] || oracle::is_delta_cycle(h, all) != expect[i - 1])
      o.fail("H" + std::to_string(i));
    if (!is_linear(h) || uniformity(h) != 3 || h.edge_count() != 4) o.fail("shape of H" + std::to_string(i));
  }
  o.detail = "H1 full edge set is a delta-cycle; H2, H3 are not (library and definition check agree)";
  return o;
}

// 10. Byte-identical CLI output across repeated runs.
std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const std::string cli = HYPERCHROM_CLI_PATH;
  const fs::path dir = fs::temp_directory_path() / ("hyperchrom-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string d = dir.string();
  const std::vector<std::string> commands{
      "gen --family random-linear --r 3 --n 9 --m 4 --seed 7",
      "gen --family random-rho --r 4 --rho 2 --n 8 --m 3 --seed 1",
      "gen --family sunflower-free --r 3 --n 8 --m 5 --seed 11",
      "gen --family fig1 --index 2",
      "gen --family random-linear --r 3 --n 10 --m 6 --seed 5 --out " + d + "/g.json",
      "chromatic " + d + "/g.json --format json",
      "delta-cycles " + d + "/g.json --broken --eta 6,5,4,3,2,1",
      "nb " + d + "/g.json --format json",
      "plk " + d + "/g.json --k 3 --search --iterations 3000 --seed 9",
      "verify --theorem 2 " + d + "/g.json --csv " + d + "/report.csv",
      "verify --grids --format csv"};
  std::vector<std::string> first;
  std::string first_report;
  for (int round = 0; round < 2; ++round) {
    std::vector<std::string> outputs;
    for (const auto& c : commands) {
      outputs.push_back(capture(cli + " " + c + " 2>&1"));
      if (c.find("--out") != std::string::npos) outputs.back() += slurp(dir / "g.json");
    }
    const std::string report = slurp(dir / "report.csv");
    if (round == 0) {
      first = outputs;
      first_report = report;
    } else {
      for (std::size_t i = 0; i < commands.size(); ++i)
        if (outputs[i] != first[i]) o.fail(commands[i]);
      if (report != first_report) o.fail("report.csv");
    }
  }
  for (std::size_t i = 0; i < commands.size(); ++i)
    if (first[i].find("<status 0>") == std::string::npos) o.fail("nonzero exit: " + commands[i]);
  fs::remove_all(dir);
  o.detail = std::to_string(commands.size()) + " commands run twice, outputs and written files compared byte for byte";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  double grid_seconds = 0;
  const std::vector<Criterion> criteria{
      {1, "NB expansion of the chromatic polynomial equals brute-force counts", whitney_equivalence},
      {2, "NB expansion of P(H,L) equals brute-force list-coloring counts", list_equivalence},
      {3, "beta(A,L) - k^c(A) lower bound", lemma_beta},
      {4, "component-count bounds for members of NB(H)", lemma_components},
      {5, "P(H,L) - P(H,k) lower bounds (proposition and corollaries)", proposition_soundness},
      {6, "theorem gap inequality and P_l = P on small instances", theorem_gaps},
      {7, "numeric grid checks", [&] { return grids(grid_seconds); }},
      {8, "threshold constants", thresholds},
      {9, "Figure-1 fixtures", fixtures},
      {10, "CLI determinism", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.detail << "; "
         << std::fixed << std::setprecision(1) << secs << " s]";
    if (!o.pass) line << " first failure: " << o.first_failure;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
