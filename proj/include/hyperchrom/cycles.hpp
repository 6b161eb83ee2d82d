#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperchrom/budget.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/union_find.hpp"

namespace hyperchrom {

/// All delta-cycles of a hypergraph with at most `max_edges` edges, ordered by
/// (size, mask).
struct DeltaCycleCatalog {
  int edge_count = 0;
  int max_edges = 0;
  std::vector<EdgeSubset> cycles;
};

/// Covering condition: every e in F lies inside the vertices of F \ {e}.
/// Equivalently every vertex of V(F) lies in at least two edges of F.
bool satisfies_covering(const Hypergraph& h, EdgeSubset f);

/// F is a delta-cycle: it satisfies the covering condition and no proper nonempty
/// subset does. Checked directly against every proper subset.
bool is_delta_cycle(const Hypergraph& h, EdgeSubset f);

/// Delta-cycles with at most max_edges edges. Subsets are classified in increasing
/// mask order, so every proper subset is classified first; a covering subset is a
/// delta-cycle exactly when none of its maximal proper subsets contains one.
/// Throws BudgetExceeded when m exceeds budget.max_edges.
DeltaCycleCatalog enumerate_delta_cycles(const Hypergraph& h, int max_edges, const Budget& budget);
DeltaCycleCatalog enumerate_delta_cycles(const Hypergraph& h, const Budget& budget);

/// Each delta-cycle minus its minimal-label edge, deduplicated and sorted by mask.
std::vector<EdgeSubset> broken_delta_cycles(const DeltaCycleCatalog& catalog, const EdgeLabelling& eta);

struct NbFilter {
  std::optional<int> must_contain;  ///< 0-based edge
  std::optional<int> size;
};

/// Depth-first enumeration of NB(H), the edge subsets containing no broken
/// delta-cycle. Subsets are grown by appending edges of increasing index, so
/// a newly added edge j is the highest edge of the subset, and only broken sets
/// whose highest edge is j can become contained in it. Membership is hereditary,
/// so a rejected subset is never extended.
///
/// The visitor receives each member A together with the union-find of H<A>;
/// `uf.set_count()` is c(A). Not safe to share one visit() across threads.
class NbEnumerator {
 public:
  /// Computes the delta-cycle catalog and the broken family under eta.
  NbEnumerator(const Hypergraph& h, const EdgeLabelling& eta, const Budget& budget);
  /// Uses an explicitly given broken family.
  NbEnumerator(const Hypergraph& h, std::vector<EdgeSubset> broken);

  const std::vector<EdgeSubset>& broken() const noexcept { return broken_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int vertex_count() const noexcept { return n_; }

  template <class Visitor>
  void visit(Visitor&& visitor, const NbFilter& filter = {}) const;

  template <class F>
  void for_each(F&& f, const NbFilter& filter = {}) const {
    visit([&](EdgeSubset a, const RollbackUnionFind&) { f(a); }, filter);
  }

  std::vector<EdgeSubset> collect(const NbFilter& filter = {}) const;
  std::uint64_t count(const NbFilter& filter = {}) const;

 private:
  void index_broken();
  bool creates_broken(EdgeSubset with_top, int top) const {
    for (auto b : broken_by_top_[top])
      if ((b & ~with_top.mask()) == 0) return true;
    return false;
  }

  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<EdgeSubset> broken_;
  std::vector<std::vector<std::uint64_t>> broken_by_top_;
};

/// Members of NB(H) under eta, optionally restricted to NB(H,e) and/or a size.
std::vector<EdgeSubset> nb_subsets(const Hypergraph& h, const EdgeLabelling& eta, const NbFilter& filter,
                                   const Budget& budget);

template <class Visitor>
void NbEnumerator::visit(Visitor&& visitor, const NbFilter& filter) const {
  const int m = edge_count();
  const int max_size = filter.size ? *filter.size : m;
  if (max_size < 0) return;
  RollbackUnionFind uf(n_);

  auto rec = [&](auto& self, int start, EdgeSubset a) -> void {
    const bool has_required = !filter.must_contain || a.contains(*filter.must_contain);
    if (has_required && (!filter.size || a.size() == *filter.size)) visitor(a, std::as_const(uf));
    if (a.size() >= max_size) return;
    for (int j = start; j < m; ++j) {
      if (filter.must_contain && !has_required && j > *filter.must_contain) break;
      const EdgeSubset next = a.with(j);
      if (creates_broken(next, j)) continue;
      const auto mark = uf.checkpoint();
      const auto& e = edges_[j];
      for (std::size_t t = 1; t < e.size(); ++t) uf.unite(e[0] - 1, e[t] - 1);
      self(self, j + 1, next);
      uf.rollback(mark);
    }
  };
  rec(rec, 0, EdgeSubset{});
}

}  // namespace hyperchrom
