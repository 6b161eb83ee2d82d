#include "hyperchrom/cycles.hpp"

#include <algorithm>
#include <string>

#include "hyperchrom/errors.hpp"

namespace hyperchrom {

namespace {

/// Reusable scratch for the covering test: tracks vertices seen once and twice.
class CoverChecker {
 public:
  explicit CoverChecker(const Hypergraph& h)
      : h_(h), words_((static_cast<std::size_t>(h.vertex_count()) + 63) / 64), once_(words_), twice_(words_) {}

  bool covers(EdgeSubset f) {
    std::fill(once_.begin(), once_.end(), 0);
    std::fill(twice_.begin(), twice_.end(), 0);
    f.for_each([&](int e) {
      auto w = h_.edge_set(e).words();
      for (std::size_t i = 0; i < words_; ++i) {
        twice_[i] |= once_[i] & w[i];
        once_[i] |= w[i];
      }
    });
    return once_ == twice_;
  }

 private:
  const Hypergraph& h_;
  std::size_t words_;
  std::vector<std::uint64_t> once_;
  std::vector<std::uint64_t> twice_;
};

void require_enumerable(const Hypergraph& h, const Budget& budget, const char* what) {
  const int m = h.edge_count();
  if (m > EdgeSubset::kMaxEdges || m > budget.max_edges)
    throw BudgetExceeded(std::string(what) + " (edge count)", m, std::min(budget.max_edges, EdgeSubset::kMaxEdges));
}

}  // namespace

bool satisfies_covering(const Hypergraph& h, EdgeSubset f) { return CoverChecker(h).covers(f); }

bool is_delta_cycle(const Hypergraph& h, EdgeSubset f) {
  if (f.size() < 3) return false;
  CoverChecker checker(h);
  if (!checker.covers(f)) return false;
  const auto full = f.mask();
  for (auto sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full)
    if (checker.covers(EdgeSubset(sub))) return false;
  return true;
}

DeltaCycleCatalog enumerate_delta_cycles(const Hypergraph& h, int max_edges, const Budget& budget) {
  require_enumerable(h, budget, "delta-cycle enumeration");
  const int m = h.edge_count();
  DeltaCycleCatalog catalog{m, std::clamp(max_edges, 0, m), {}};
  if (m < 3 || catalog.max_edges < 3) return catalog;

  CoverChecker checker(h);
  const std::uint64_t total = std::uint64_t{1} << m;
  // contains_cycle[mask]: mask has a delta-cycle as a subset
  std::vector<std::uint8_t> contains_cycle(total, 0);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int size = std::popcount(mask);
    if (size > catalog.max_edges) continue;
    bool below = false;
    for (auto w = mask; w != 0; w &= w - 1) {
      if (contains_cycle[mask & ~(w & -w)]) {
        below = true;
        break;
      }
    }
    if (below) {
      contains_cycle[mask] = 1;
    } else if (size >= 3 && checker.covers(EdgeSubset(mask))) {
      contains_cycle[mask] = 1;
      catalog.cycles.emplace_back(mask);
    }
  }
  std::sort(catalog.cycles.begin(), catalog.cycles.end(), [](EdgeSubset a, EdgeSubset b) {
    return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
  });
  return catalog;
}

DeltaCycleCatalog enumerate_delta_cycles(const Hypergraph& h, const Budget& budget) {
  return enumerate_delta_cycles(h, h.edge_count(), budget);
}

std::vector<EdgeSubset> broken_delta_cycles(const DeltaCycleCatalog& catalog, const EdgeLabelling& eta) {
  if (eta.size() != catalog.edge_count)
    throw InvalidInput("edge labelling size " + std::to_string(eta.size()) + " does not match edge count " +
                       std::to_string(catalog.edge_count));
  std::vector<EdgeSubset> out;
  out.reserve(catalog.cycles.size());
  for (auto c : catalog.cycles) out.push_back(c.without(eta.minimal_edge(c)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NbEnumerator::NbEnumerator(const Hypergraph& h, const EdgeLabelling& eta, const Budget& budget)
    : n_(h.vertex_count()), edges_(h.edges()) {
  broken_ = broken_delta_cycles(enumerate_delta_cycles(h, budget), eta);
  index_broken();
}

NbEnumerator::NbEnumerator(const Hypergraph& h, std::vector<EdgeSubset> broken)
    : n_(h.vertex_count()), edges_(h.edges()), broken_(std::move(broken)) {
  if (h.edge_count() > EdgeSubset::kMaxEdges)
    throw BudgetExceeded("NB enumeration (edge count)", h.edge_count(), EdgeSubset::kMaxEdges);
  index_broken();
}

void NbEnumerator::index_broken() {
  broken_by_top_.assign(edges_.size(), {});
  for (auto b : broken_)
    if (!b.empty()) broken_by_top_[b.highest()].push_back(b.mask());
}

std::vector<EdgeSubset> NbEnumerator::collect(const NbFilter& filter) const {
  std::vector<EdgeSubset> out;
  for_each([&](EdgeSubset a) { out.push_back(a); }, filter);
  return out;
}

std::uint64_t NbEnumerator::count(const NbFilter& filter) const {
  std::uint64_t c = 0;
  for_each([&](EdgeSubset) { ++c; }, filter);
  return c;
}

std::vector<EdgeSubset> nb_subsets(const Hypergraph& h, const EdgeLabelling& eta, const NbFilter& filter,
                                   const Budget& budget) {
  if (filter.must_contain && (*filter.must_contain < 0 || *filter.must_contain >= h.edge_count()))
    throw InvalidInput("must_contain edge out of range");
  return NbEnumerator(h, eta, budget).collect(filter);
}

}  // namespace hyperchrom
