#include "hyperchrom/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "hyperchrom/errors.hpp"

namespace hyperchrom {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "random-linear") return Family::random_linear;
  if (name == "random-rho") return Family::random_rho;
  if (name == "tight-path") return Family::tight_path;
  if (name == "sunflower-free") return Family::sunflower_free;
  if (name == "fig1") return Family::fig1;
  return std::nullopt;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::random_linear:
      return "random-linear";
    case Family::random_rho:
      return "random-rho";
    case Family::tight_path:
      return "tight-path";
    case Family::sunflower_free:
      return "sunflower-free";
    case Family::fig1:
      return "fig1";
  }
  return "?";
}

Hypergraph figure1(int index) {
  switch (index) {
    case 1:
      return make_hypergraph(6, {{1, 2, 3}, {1, 4, 5}, {3, 5, 6}, {2, 4, 6}});
    case 2:
      return make_hypergraph(7, {{5, 6, 7}, {1, 3, 6}, {1, 2, 5}, {1, 4, 7}});
    case 3:
      return make_hypergraph(7, {{2, 3, 4}, {5, 6, 7}, {1, 2, 5}, {1, 4, 7}});
  }
  throw InvalidInput("figure-1 index must be 1, 2 or 3");
}

namespace {

using Edge = std::vector<int>;

std::size_t common(const Edge& a, const Edge& b) {
  std::size_t c = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] == b[j]) {
      ++c;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return c;
}

Edge intersect(const Edge& a, const Edge& b) {
  Edge out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool forms_sunflower(const Edge& a, const Edge& b, const Edge& c) {
  const Edge ab = intersect(a, b);
  return ab == intersect(a, c) && ab == intersect(b, c);
}

bool compatible(const GeneratorParams& p, const std::vector<Edge>& edges, const Edge& e) {
  for (const auto& f : edges) {
    const auto shared = common(e, f);
    if (shared == e.size()) return false;
    switch (p.family) {
      case Family::random_linear:
        if (shared > 1) return false;
        break;
      case Family::random_rho:
        if (static_cast<int>(e.size() - shared) < p.rho) return false;
        break;
      default:
        break;
    }
  }
  if (p.family == Family::sunflower_free)
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (forms_sunflower(edges[i], edges[j], e)) return false;
  return true;
}

Hypergraph sample(const GeneratorParams& p) {
  if (p.r < 2 || p.n < p.r || p.m < 0) throw InvalidInput("random families need 2 <= r <= n and m >= 0");
  if (p.family == Family::random_rho && (p.rho < 1 || p.rho > p.r))
    throw InvalidInput("rho must lie in 1..r");
  std::mt19937_64 rng(p.seed);
  std::vector<int> pool(static_cast<std::size_t>(p.n));
  auto draw = [&] {
    for (int v = 0; v < p.n; ++v) pool[v] = v + 1;
    for (int i = 0; i < p.r; ++i) {
      std::uniform_int_distribution<int> pick(i, p.n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    Edge e(pool.begin(), pool.begin() + p.r);
    std::sort(e.begin(), e.end());
    return e;
  };
  const std::uint64_t stall_limit = 2000;
  std::vector<Edge> edges;
  std::uint64_t since_progress = 0;
  for (std::uint64_t draws = 0; draws < p.max_draws; ++draws) {
    if (static_cast<int>(edges.size()) == p.m) break;
    Edge e = draw();
    if (compatible(p, edges, e)) {
      edges.push_back(std::move(e));
      since_progress = 0;
    } else if (++since_progress >= stall_limit) {
      edges.clear();
      since_progress = 0;
    }
  }
  if (static_cast<int>(edges.size()) != p.m)
    throw GenerationFailed("could not build a " + std::string(to_string(p.family)) + " instance with n=" +
                           std::to_string(p.n) + ", m=" + std::to_string(p.m) + ", r=" + std::to_string(p.r) +
                           " within " + std::to_string(p.max_draws) + " draws");
  return make_hypergraph(p.n, std::move(edges));
}

}  // namespace

Hypergraph generate(const GeneratorParams& p) {
  switch (p.family) {
    case Family::fig1:
      return figure1(p.index);
    case Family::tight_path: {
      if (p.r < 2 || p.m < 0) throw InvalidInput("tight-path needs r >= 2, m >= 0");
      const int needed = p.m == 0 ? 0 : p.m + p.r - 1;
      const int n = p.n == 0 ? needed : p.n;
      if (n < needed) throw InvalidInput("tight-path needs n >= m + r - 1");
      std::vector<Edge> edges;
      for (int i = 1; i <= p.m; ++i) {
        Edge e;
        for (int j = 0; j < p.r; ++j) e.push_back(i + j);
        edges.push_back(std::move(e));
      }
      return make_hypergraph(n, std::move(edges));
    }
    default:
      return sample(p);
  }
}

}  // namespace hyperchrom
