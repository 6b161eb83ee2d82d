#include "hyperchrom/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperchrom/bounds.hpp"
#include "hyperchrom/budget.hpp"
#include "hyperchrom/chromatic.hpp"
#include "hyperchrom/cycles.hpp"
#include "hyperchrom/errors.hpp"
#include "hyperchrom/generators.hpp"
#include "hyperchrom/io.hpp"
#include "hyperchrom/listcolor.hpp"

namespace hyperchrom {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

enum class Format { text, csv, json };

struct RunConfig {
  std::string input;
  std::string assignment;
  std::vector<int> eta;
  std::optional<int> k;
  Format format = Format::text;
  std::string out_path;

  bool oracle = false;
  int max_edges = -1;
  bool broken = false;
  std::optional<int> contains;
  std::optional<int> size;
  bool search = false;
  std::uint64_t iterations = 20000;
  std::uint64_t seed = 0;
  std::optional<int> max_colors;
  bool grids = false;
  std::optional<int> theorem;
  std::vector<std::string> paths;
  std::string csv_path;
  bool exact = false;

  std::string family;
  GeneratorParams gen;
};

/// Raised by a subcommand to finish with a specific exit code and message.
struct Exit {
  int code;
  std::string message;
};

EdgeLabelling labelling(const RunConfig& cfg, const Hypergraph& h) {
  if (cfg.eta.empty()) return EdgeLabelling::identity(h.edge_count());
  if (static_cast<int>(cfg.eta.size()) != h.edge_count())
    throw InvalidInput("--eta must list " + std::to_string(h.edge_count()) + " labels");
  return EdgeLabelling::from_labels(cfg.eta);
}

std::string join_labels(const std::vector<int>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
  return s;
}

int cmd_chromatic(const RunConfig& cfg, const Budget& budget, std::ostream& os) {
  const auto h = load_hypergraph(cfg.input);
  const auto eta = labelling(cfg, h);
  const auto p = chromatic_polynomial(h, eta, budget);
  ojson j;
  j["polynomial"] = p.to_string();
  j["coefficients"] = to_json_value(p);
  std::vector<std::string> lines{p.to_string()};
  bool agrees = true;
  if (cfg.k) {
    const BigInt value = p.eval(*cfg.k);
    j["k"] = *cfg.k;
    j["value"] = big_to_json(value);
    std::string line = value.str();
    if (cfg.oracle) {
      const BigInt brute = count_proper_colorings(h, *cfg.k, budget);
      agrees = brute == value;
      j["oracle"] = big_to_json(brute);
      j["oracle_agrees"] = agrees;
      line += agrees ? " (oracle agrees)" : " (oracle disagrees: " + brute.str() + ")";
    }
    lines.push_back(line);
  } else if (cfg.oracle) {
    ojson checks = ojson::array();
    for (int k = 1; k <= 4; ++k) {
      const BigInt brute = count_proper_colorings(h, k, budget);
      const bool ok = brute == p.eval(k);
      agrees = agrees && ok;
      checks.push_back({{"k", k}, {"value", big_to_json(p.eval(k))}, {"oracle", big_to_json(brute)}});
    }
    j["oracle"] = std::move(checks);
    j["oracle_agrees"] = agrees;
    lines.push_back(agrees ? "oracle agrees for k=1..4" : "oracle disagrees for some k in 1..4");
  }
  if (cfg.format == Format::json) {
    os << j.dump() << "\n";
  } else {
    for (const auto& l : lines) os << l << "\n";
  }
  return agrees ? kExitOk : kExitVerdictFailure;
}

int cmd_delta_cycles(const RunConfig& cfg, const Budget& budget, std::ostream& os) {
  const auto h = load_hypergraph(cfg.input);
  const auto catalog =
      enumerate_delta_cycles(h, cfg.max_edges < 0 ? h.edge_count() : cfg.max_edges, budget);
  const auto eta = labelling(cfg, h);
  const bool with_broken = cfg.broken || !cfg.eta.empty();
  const auto broken = with_broken ? broken_delta_cycles(catalog, eta) : std::vector<EdgeSubset>{};
  if (cfg.format == Format::json) {
    ojson j;
    ojson cycles = ojson::array();
    for (auto c : catalog.cycles) cycles.push_back(c.indices());
    for (auto& c : cycles)
      for (auto& e : c) e = e.get<int>() + 1;
    j["delta_cycles"] = std::move(cycles);
    if (with_broken) {
      j["eta"] = eta.labels();
      ojson b = ojson::array();
      for (auto s : broken) {
        auto idx = s.indices();
        for (auto& e : idx) ++e;
        b.push_back(idx);
      }
      j["broken_delta_cycles"] = std::move(b);
    }
    os << j.dump() << "\n";
    return kExitOk;
  }
  for (auto c : catalog.cycles) os << format_subset(c) << "\n";
  os << "delta-cycles: " << catalog.cycles.size() << "\n";
  if (with_broken) {
    for (auto b : broken) os << format_subset(b) << "\n";
    os << "broken-delta-cycles (eta=" << join_labels(eta.labels()) << "): " << broken.size() << "\n";
  }
  return kExitOk;
}

int cmd_nb(const RunConfig& cfg, const Budget& budget, std::ostream& os) {
  const auto h = load_hypergraph(cfg.input);
  NbFilter filter;
  if (cfg.contains) {
    if (*cfg.contains < 1 || *cfg.contains > h.edge_count()) throw InvalidInput("--contains edge out of range");
    filter.must_contain = *cfg.contains - 1;
  }
  filter.size = cfg.size;
  const auto subsets = nb_subsets(h, labelling(cfg, h), filter, budget);
  if (cfg.format == Format::json) {
    ojson arr = ojson::array();
    for (auto s : subsets) {
      auto idx = s.indices();
      for (auto& e : idx) ++e;
      arr.push_back({{"edges", idx}, {"components", components(h, s)}});
    }
    os << ojson{{"count", subsets.size()}, {"subsets", std::move(arr)}}.dump() << "\n";
    return kExitOk;
  }
  for (auto s : subsets) os << format_subset(s) << "\n";
  os << "nb-subsets: " << subsets.size() << "\n";
  return kExitOk;
}

int cmd_list_count(const RunConfig& cfg, const Budget& budget, std::ostream& os) {
  const auto h = load_hypergraph(cfg.input);
  const auto l = load_list_assignment(cfg.assignment);
  const auto profile = alpha(h, l);
  std::optional<BigInt> brute;
  std::optional<BigInt> expansion;
  std::string refusals;
  try {
    brute = count_list_colorings(h, l, budget);
  } catch (const BudgetExceeded& e) {
    refusals += std::string("brute force: ") + e.what() + "\n";
  }
  try {
    expansion = count_list_colorings_expansion(h, l, labelling(cfg, h), budget);
  } catch (const BudgetExceeded& e) {
    refusals += std::string("expansion: ") + e.what() + "\n";
  }
  if (!brute && !expansion) throw Exit{kExitBudget, refusals};
  const BigInt value = expansion ? *expansion : *brute;
  const bool agree = !brute || !expansion || *brute == *expansion;
  if (cfg.format == Format::json) {
    ojson j;
    j["value"] = big_to_json(value);
    j["alpha"] = profile.total;
    j["alpha_per_edge"] = profile.per_edge;
    j["expansion"] = expansion ? big_to_json(*expansion) : ojson(nullptr);
    j["brute_force"] = brute ? big_to_json(*brute) : ojson(nullptr);
    j["routes_agree"] = agree;
    os << j.dump() << "\n";
  } else {
    os << "P(H,L)=" << value << ", alpha=" << profile.total << "\n";
    os << "alpha per edge:";
    for (int a : profile.per_edge) os << " " << a;
    os << "\n";
    os << "expansion=" << (expansion ? expansion->str() : "refused") << " brute-force="
       << (brute ? brute->str() : "refused") << (agree ? " (agree)" : " (DISAGREE)") << "\n";
  }
  return agree ? kExitOk : kExitVerdictFailure;
}

int cmd_plk(const RunConfig& cfg, const Budget& budget, std::ostream& os) {
  const auto h = load_hypergraph(cfg.input);
  if (!cfg.k) throw InvalidInput("plk needs --k");
  const int k = *cfg.k;
  ListColorResult result;
  std::string method;
  if (cfg.search) {
    result = list_color_function_search(h, k, cfg.iterations, cfg.seed, budget);
    method = "search";
  } else {
    try {
      result = list_color_function_exact(h, k, budget, cfg.max_colors);
      method = result.exhaustive ? "exact" : "restricted";
    } catch (const BudgetExceeded& e) {
      throw Exit{kExitBudget, std::string(e.what()) + "\nhint: rerun with --search for a heuristic upper bound"};
    }
  }
  std::optional<BigInt> p;
  try {
    p = chromatic_polynomial(h, budget).eval(k);
  } catch (const BudgetExceeded&) {
    try {
      p = count_proper_colorings(h, k, budget);
    } catch (const BudgetExceeded&) {
    }
  }
  const bool is_exact = method == "exact";
  std::string relation = "?";
  if (p) relation = result.value == *p ? "=" : (result.value < *p ? "<" : ">");
  if (cfg.format == Format::json) {
    ojson j;
    j["k"] = k;
    j["method"] = method;
    j["value"] = big_to_json(result.value);
    j["chromatic_value"] = p ? big_to_json(*p) : ojson(nullptr);
    j["relation"] = relation;
    j["witness"] = to_json_value(result.witness);
    j["assignments_examined"] = result.assignments_examined;
    os << j.dump() << "\n";
  } else {
    os << (is_exact ? "P_l=" : "P_l<=") << result.value;
    if (p) os << " " << relation << " P";
    os << "\n";
    os << "P(H,k)=" << (p ? p->str() : "refused") << "\n";
    os << "method: " << method << " (" << result.assignments_examined << " assignments examined)\n";
    os << "witness: " << to_json(result.witness);
    if (result.witness == ListAssignment::constant(h.vertex_count(), k)) os << " (constant lists)";
    os << "\n";
  }
  return kExitOk;
}

std::vector<fs::path> expand_paths(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".json") found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::exists(p)) {
      out.push_back(p);
    } else {
      throw InvalidInput("no such file or directory: " + in);
    }
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, const Budget& budget, std::ostream& os) {
  std::vector<BoundReport> reports;
  std::vector<std::string> sources;
  const bool grids = cfg.grids || !cfg.theorem;
  if (grids) {
    for (auto& r : verify_grids()) {
      reports.push_back(std::move(r));
      sources.emplace_back("grid");
    }
  }
  if (cfg.theorem) {
    if (*cfg.theorem < 1 || *cfg.theorem > 3) throw InvalidInput("--theorem must be 1, 2 or 3");
    if (cfg.paths.empty()) throw InvalidInput("--theorem needs hypergraph files or directories");
    for (const auto& path : expand_paths(cfg.paths)) {
      const auto h = load_hypergraph(path);
      int k = cfg.k.value_or(0);
      if (!cfg.k && theorem_preconditions(h, *cfg.theorem).empty()) {
        const Real t = theorem_threshold(h, *cfg.theorem);
        if (std::isfinite(t)) k = static_cast<int>(std::ceil(t));
      }
      reports.push_back(
          theorem_certify(h, k, *cfg.theorem, cfg.exact ? Effort::exact : Effort::threshold_only, budget));
      sources.push_back(path.filename().string());
    }
  }
  bool failed = false;
  for (const auto& r : reports) failed = failed || r.verdict == Verdict::fails;

  if (!cfg.csv_path.empty()) {
    std::ofstream csv(cfg.csv_path, std::ios::binary);
    if (!csv) throw InvalidInput("cannot write " + cfg.csv_path);
    csv << report_csv_header() << "\n";
    for (const auto& r : reports) csv << to_csv_row(r) << "\n";
  }
  if (cfg.format == Format::csv) {
    os << report_csv_header() << "\n";
    for (const auto& r : reports) os << to_csv_row(r) << "\n";
  } else if (cfg.format == Format::json) {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      auto j = to_json_value(reports[i]);
      j["source"] = sources[i];
      arr.push_back(std::move(j));
    }
    os << ojson{{"reports", std::move(arr)}, {"failures", failed}}.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      os << sources[i] << ": " << r.name << " " << to_string(r.verdict) << " (" << format_real(r.lhs) << " "
         << r.relation << " " << format_real(r.rhs) << ")";
      if (!r.detail.empty()) os << " " << r.detail;
      os << "\n";
    }
    os << (failed ? "FAILED" : "all checks pass or are not applicable") << "\n";
  }
  return failed ? kExitVerdictFailure : kExitOk;
}

int cmd_gen(RunConfig cfg, std::ostream& os) {
  const auto family = parse_family(cfg.family);
  if (!family) throw InvalidInput("unknown family '" + cfg.family + "'");
  cfg.gen.family = *family;
  Hypergraph h;
  try {
    h = generate(cfg.gen);
  } catch (const GenerationFailed& e) {
    throw Exit{kExitGeneratorFailure, e.what()};
  } catch (const InvalidInput& e) {
    throw Exit{kExitGeneratorFailure, e.what()};
  }
  os << to_json(h) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chromatic polynomials and list-color functions of hypergraphs", "hyperchrom"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  };
  auto eta_option = [&](CLI::App* sub) {
    sub->add_option("--eta", cfg.eta, "Edge labels (1-based permutation), e.g. 3,1,2")->delimiter(',');
  };

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial via the NB(H) expansion");
  chromatic->add_option("file", cfg.input, "Hypergraph JSON")->required();
  chromatic->add_option("--k", cfg.k, "Evaluate at k")->check(CLI::NonNegativeNumber);
  chromatic->add_flag("--oracle", cfg.oracle, "Cross-check against brute-force coloring counts");
  eta_option(chromatic);
  common(chromatic);

  auto* delta = app.add_subcommand("delta-cycles", "Delta-cycle catalog (and broken delta-cycles)");
  delta->add_option("file", cfg.input, "Hypergraph JSON")->required();
  delta->add_option("--max-edges", cfg.max_edges, "Largest delta-cycle size to enumerate");
  delta->add_flag("--broken", cfg.broken, "Also list broken delta-cycles");
  eta_option(delta);
  common(delta);

  auto* nb = app.add_subcommand("nb", "Edge subsets containing no broken delta-cycle");
  nb->add_option("file", cfg.input, "Hypergraph JSON")->required();
  nb->add_option("--contains", cfg.contains, "Only subsets containing this (1-based) edge");
  nb->add_option("--size", cfg.size, "Only subsets of this size")->check(CLI::NonNegativeNumber);
  eta_option(nb);
  common(nb);

  auto* list_count = app.add_subcommand("list-count", "Number of L-colorings by both routes");
  list_count->add_option("file", cfg.input, "Hypergraph JSON")->required();
  list_count->add_option("assignment", cfg.assignment, "List assignment JSON")->required();
  eta_option(list_count);
  common(list_count);

  auto* plk = app.add_subcommand("plk", "List-color function P_l(H,k)");
  plk->add_option("file", cfg.input, "Hypergraph JSON")->required();
  plk->add_option("--k", cfg.k, "List size")->required()->check(CLI::NonNegativeNumber);
  plk->add_flag("--search", cfg.search, "Heuristic local search instead of exact enumeration");
  plk->add_option("--iterations", cfg.iterations, "Search moves");
  plk->add_option("--seed", cfg.seed, "Search seed");
  plk->add_option("--max-colors", cfg.max_colors, "Restrict exact enumeration to this many colors")
      ->check(CLI::PositiveNumber);
  common(plk);

  auto* verify = app.add_subcommand("verify", "Grid checks and theorem certification");
  verify->add_flag("--grids", cfg.grids, "Run the numeric grid checks");
  verify->add_option("--theorem", cfg.theorem, "Certify theorem 1, 2 or 3 on the given instances");
  verify->add_option("paths", cfg.paths, "Hypergraph files or directories");
  verify->add_option("--k", cfg.k, "Color count (default: smallest k meeting the threshold)");
  verify->add_flag("--exact", cfg.exact, "Also compute P_l exactly when within budget");
  verify->add_option("--csv", cfg.csv_path, "Write the reports as CSV to this file");
  common(verify);

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph instance");
  gen->add_option("--family", cfg.family,
                  "random-linear, random-rho, tight-path, sunflower-free or fig1")
      ->required();
  gen->add_option("--n", cfg.gen.n, "Vertex count");
  gen->add_option("--m", cfg.gen.m, "Edge count");
  gen->add_option("--r", cfg.gen.r, "Edge size");
  gen->add_option("--rho", cfg.gen.rho, "Minimum |e \\ e'| for random-rho");
  gen->add_option("--index", cfg.gen.index, "Figure-1 instance (1..3)");
  gen->add_option("--seed", cfg.gen.seed, "Random seed");
  gen->add_option("--max-draws", cfg.gen.max_draws, "Rejection-sampling budget");
  gen->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    const Budget budget = Budget::from_env();
    if (chromatic->parsed()) code = cmd_chromatic(cfg, budget, buffer);
    else if (delta->parsed()) code = cmd_delta_cycles(cfg, budget, buffer);
    else if (nb->parsed()) code = cmd_nb(cfg, budget, buffer);
    else if (list_count->parsed()) code = cmd_list_count(cfg, budget, buffer);
    else if (plk->parsed()) code = cmd_plk(cfg, budget, buffer);
    else if (verify->parsed()) code = cmd_verify(cfg, budget, buffer);
    else if (gen->parsed()) code = cmd_gen(cfg, buffer);
  } catch (const Exit& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << cfg.out_path << "\n";
      return kExitInputError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace hyperchrom
