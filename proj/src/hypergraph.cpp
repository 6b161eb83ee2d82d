#include "hyperchrom/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hyperchrom/errors.hpp"
#include "hyperchrom/union_find.hpp"

namespace hyperchrom {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  edge_sets_.reserve(edges_.size());
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    Bitset bits(static_cast<std::size_t>(n_));
    for (int v : e)
      if (v >= 1 && v <= n_) bits.set(static_cast<std::size_t>(v - 1));
    edge_sets_.push_back(std::move(bits));
  }
}

int Hypergraph::isolated_vertex_count() const {
  Bitset covered(static_cast<std::size_t>(n_));
  for (const auto& e : edge_sets_) covered |= e;
  return n_ - static_cast<int>(covered.count());
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::edge_too_small:
      os << "edge " << edge + 1 << " has fewer than 2 vertices";
      break;
    case Kind::vertex_out_of_range:
      os << "edge " << edge + 1 << ": vertex " << vertex << " out of range";
      break;
    case Kind::containment:
      os << "edge " << edge + 1 << " is a subset of edge " << other + 1;
      break;
    case Kind::duplicate_edge:
      os << "edge " << edge + 1 << " duplicates edge " << other + 1;
      break;
  }
  return os.str();
}

std::vector<Violation> validate(const Hypergraph& h) {
  std::vector<Violation> out;
  const int m = h.edge_count();
  for (int i = 0; i < m; ++i) {
    const auto& e = h.edge(i);
    if (e.size() < 2) out.push_back({Violation::Kind::edge_too_small, i});
    for (int v : e)
      if (v < 1 || v > h.vertex_count()) out.push_back({Violation::Kind::vertex_out_of_range, i, -1, v});
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto& a = h.edge(i);
      const auto& b = h.edge(j);
      if (a == b) {
        if (i < j) out.push_back({Violation::Kind::duplicate_edge, j, i});
      } else if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        out.push_back({Violation::Kind::containment, i, j});
      }
    }
  }
  return out;
}

Hypergraph make_hypergraph(int n, std::vector<std::vector<int>> edges) {
  Hypergraph h(n, std::move(edges));
  auto violations = validate(h);
  if (!violations.empty()) {
    std::string msg = "invalid hypergraph:";
    for (const auto& v : violations) msg += " " + v.describe() + ";";
    throw InvalidInput(msg);
  }
  return h;
}

int components(const Hypergraph& h, EdgeSubset a) {
  UnionFind uf(h.vertex_count());
  a.for_each([&](int i) {
    const auto& e = h.edge(i);
    for (std::size_t j = 1; j < e.size(); ++j) uf.unite(e[0] - 1, e[j] - 1);
  });
  return uf.set_count();
}

int rho(const Hypergraph& h) {
  const int m = h.edge_count();
  if (m < 2) throw DomainError("rho(H) is undefined for fewer than 2 edges");
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) best = std::min(best, static_cast<int>(h.edge_set(i).difference_count(h.edge_set(j))));
  return best;
}

std::optional<int> uniformity(const Hypergraph& h) {
  if (h.edge_count() == 0) return std::nullopt;
  const auto r = h.edge(0).size();
  for (const auto& e : h.edges())
    if (e.size() != r) return std::nullopt;
  return static_cast<int>(r);
}

int gamma(const Hypergraph& h) {
  auto r = uniformity(h);
  if (!r) {
    if (h.edge_count() == 0) return 0;
    throw DomainError("gamma(H) requires a uniform hypergraph");
  }
  int best = 0;
  for (int i = 0; i < h.edge_count(); ++i) {
    int count = 0;
    for (int j = 0; j < h.edge_count(); ++j)
      if (i != j && static_cast<int>(h.edge_set(i).intersection_count(h.edge_set(j))) == *r - 1) ++count;
    best = std::max(best, count);
  }
  return best;
}

bool is_linear(const Hypergraph& h) {
  for (int i = 0; i < h.edge_count(); ++i)
    for (int j = i + 1; j < h.edge_count(); ++j)
      if (h.edge_set(i).intersection_count(h.edge_set(j)) > 1) return false;
  return true;
}

EdgeLabelling EdgeLabelling::identity(int m) {
  EdgeLabelling l;
  l.rank_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) l.rank_[i] = i;
  return l;
}

EdgeLabelling EdgeLabelling::reversed(int m) {
  EdgeLabelling l;
  l.rank_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) l.rank_[i] = m - 1 - i;
  return l;
}

EdgeLabelling EdgeLabelling::from_labels(const std::vector<int>& labels) {
  const int m = static_cast<int>(labels.size());
  std::vector<bool> seen(labels.size(), false);
  EdgeLabelling l;
  l.rank_.reserve(labels.size());
  for (int label : labels) {
    if (label < 1 || label > m || seen[label - 1])
      throw InvalidInput("edge labelling must be a permutation of 1.." + std::to_string(m));
    seen[label - 1] = true;
    l.rank_.push_back(label - 1);
  }
  return l;
}

int EdgeLabelling::minimal_edge(EdgeSubset s) const {
  int best = -1;
  s.for_each([&](int e) {
    if (best < 0 || rank_[e] < rank_[best]) best = e;
  });
  return best;
}

std::vector<int> EdgeLabelling::labels() const {
  std::vector<int> out;
  out.reserve(rank_.size());
  for (int r : rank_) out.push_back(r + 1);
  return out;
}

}  // namespace hyperchrom
