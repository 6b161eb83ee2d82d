#include "hyperchrom/listcolor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "brute_force.hpp"
#include "hyperchrom/cycles.hpp"
#include "hyperchrom/errors.hpp"
#include "hyperchrom/union_find.hpp"

namespace hyperchrom {

ListAssignment::ListAssignment(int k, std::vector<std::vector<int>> lists) : k_(k), lists_(std::move(lists)) {
  if (k < 0) throw InvalidInput("list size k must be non-negative");
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& l = lists_[v];
    std::sort(l.begin(), l.end());
    const bool distinct = std::adjacent_find(l.begin(), l.end()) == l.end();
    if (static_cast<int>(l.size()) != k || !distinct)
      throw InvalidInput("list of vertex " + std::to_string(v + 1) + " must contain exactly " + std::to_string(k) +
                         " distinct colors");
    if (!l.empty() && l.front() < 1) throw InvalidInput("colors must be positive integers");
  }
}

ListAssignment ListAssignment::constant(int n, int k) {
  std::vector<int> palette(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) palette[c] = c + 1;
  return ListAssignment(k, std::vector<std::vector<int>>(static_cast<std::size_t>(n), palette));
}

std::vector<int> ListAssignment::universe() const {
  std::vector<int> u;
  for (const auto& l : lists_) u.insert(u.end(), l.begin(), l.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

ListAssignment canonical_form(const ListAssignment& l) {
  const auto universe = l.universe();
  const auto n = static_cast<std::size_t>(l.vertex_count());
  // membership word per color, vertex 1 first
  std::vector<std::pair<std::vector<bool>, int>> members;
  members.reserve(universe.size());
  for (int c : universe) {
    std::vector<bool> word(n, false);
    for (std::size_t v = 0; v < n; ++v) word[v] = std::binary_search(l.lists()[v].begin(), l.lists()[v].end(), c);
    members.emplace_back(std::move(word), c);
  }
  std::stable_sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < members.size(); ++i) relabel[members[i].second] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> lists = l.lists();
  for (auto& list : lists)
    for (auto& c : list) c = relabel[c];
  return ListAssignment(l.k(), std::move(lists));
}

namespace {

void require_fits(const Hypergraph& h, const ListAssignment& l) {
  if (l.vertex_count() != h.vertex_count())
    throw InvalidInput("assignment has " + std::to_string(l.vertex_count()) + " lists but hypergraph has " +
                       std::to_string(h.vertex_count()) + " vertices");
}

/// Lists re-encoded over compact color indices 0..U-1.
struct CompactLists {
  explicit CompactLists(const ListAssignment& l) : universe(l.universe()) {
    sets.reserve(l.lists().size());
    for (const auto& list : l.lists()) {
      Bitset s(universe.size());
      for (int c : list)
        s.set(static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), c) - universe.begin()));
      sets.push_back(std::move(s));
    }
  }
  std::vector<int> universe;
  std::vector<Bitset> sets;
};

/// beta(A,L) from a vertex -> component-root map.
template <class FindRoot>
BigInt beta_from_roots(const CompactLists& cl, int n, FindRoot&& root_of) {
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  std::vector<Bitset> common;
  for (int v = 0; v < n; ++v) {
    const int r = root_of(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(common.size());
      common.push_back(cl.sets[v]);
    } else {
      common[slot[r]] &= cl.sets[v];
    }
  }
  BigInt product = 1;
  for (const auto& c : common) {
    product *= c.count();
    if (product == 0) break;
  }
  return product;
}

}  // namespace

AlphaProfile alpha(const Hypergraph& h, const ListAssignment& l) {
  require_fits(h, l);
  CompactLists cl(l);
  AlphaProfile profile;
  profile.per_edge.reserve(static_cast<std::size_t>(h.edge_count()));
  for (const auto& e : h.edges()) {
    Bitset common = cl.sets[e.front() - 1];
    for (int v : e) common &= cl.sets[v - 1];
    const int a = l.k() - static_cast<int>(common.count());
    profile.per_edge.push_back(a);
    profile.total += a;
  }
  return profile;
}

BigInt beta(const Hypergraph& h, const ListAssignment& l, EdgeSubset a) {
  require_fits(h, l);
  UnionFind uf(h.vertex_count());
  a.for_each([&](int i) {
    const auto& e = h.edge(i);
    for (std::size_t j = 1; j < e.size(); ++j) uf.unite(e[0] - 1, e[j] - 1);
  });
  return beta_from_roots(CompactLists(l), h.vertex_count(), [&](int v) { return uf.find(v); });
}

BigInt count_list_colorings(const Hypergraph& h, const ListAssignment& l, const Budget& budget) {
  require_fits(h, l);
  return BigInt(detail::count_list_colorings_brute_force(h, l.lists(), budget, "L-coloring count"));
}

BigInt count_list_colorings_expansion(const Hypergraph& h, const ListAssignment& l, const EdgeLabelling& eta,
                                      const Budget& budget) {
  require_fits(h, l);
  CompactLists cl(l);
  BigInt total = 0;
  NbEnumerator(h, eta, budget).visit([&](EdgeSubset a, const RollbackUnionFind& uf) {
    BigInt b = beta_from_roots(cl, h.vertex_count(), [&](int v) { return uf.find(v); });
    if (a.size() % 2 == 0)
      total += b;
    else
      total -= b;
  });
  return total;
}

namespace {
constexpr std::uint64_t kMaxStoredTerms = std::uint64_t{1} << 21;
}

ListColoringCounter::ListColoringCounter(const Hypergraph& h, const EdgeLabelling& eta, const Budget& budget)
    : h_(h), budget_(budget) {
  if (h.edge_count() > budget.max_edges) return;
  NbEnumerator nb(h, eta, budget);
  if (nb.count() > kMaxStoredTerms) return;
  expansion_ = true;
  const int n = h.vertex_count();
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n));
  group_offsets_.push_back(0);
  nb.visit([&](EdgeSubset a, const RollbackUnionFind& uf) {
    for (auto& b : buckets) b.clear();
    for (int v = 0; v < n; ++v) buckets[uf.find(v)].push_back(v);
    Term t{a.size() % 2 == 0 ? 1 : -1, 0, static_cast<std::uint32_t>(group_offsets_.size() - 1), 0};
    for (const auto& b : buckets) {
      if (b.empty()) continue;
      if (b.size() == 1) {
        ++t.singletons;
        continue;
      }
      group_vertices_.insert(group_vertices_.end(), b.begin(), b.end());
      group_offsets_.push_back(static_cast<std::uint32_t>(group_vertices_.size()));
      ++t.group_count;
    }
    terms_.push_back(t);
  });
}

bool ListColoringCounter::masks_fit(int k) const {
  if (k <= 1) return true;
  const double bits = std::log2(static_cast<double>(terms_.size()) + 1) +
                      h_.vertex_count() * std::log2(static_cast<double>(k));
  return bits < 62;
}

std::int64_t ListColoringCounter::count_masks(const std::vector<std::uint64_t>& masks, int k) const {
  std::vector<std::int64_t> kpow(static_cast<std::size_t>(h_.vertex_count()) + 1, 1);
  for (std::size_t i = 1; i < kpow.size(); ++i) kpow[i] = kpow[i - 1] * k;
  std::int64_t total = 0;
  for (const auto& t : terms_) {
    std::int64_t value = kpow[t.singletons];
    for (std::uint32_t g = t.first_group; g < t.first_group + t.group_count && value != 0; ++g) {
      std::uint64_t common = ~std::uint64_t{0};
      for (auto i = group_offsets_[g]; i < group_offsets_[g + 1]; ++i) common &= masks[group_vertices_[i]];
      value *= std::popcount(common);
    }
    total += t.sign * value;
  }
  return total;
}

BigInt ListColoringCounter::count(const ListAssignment& l) const {
  require_fits(h_, l);
  if (!expansion_) return count_list_colorings(h_, l, budget_);
  CompactLists cl(l);
  if (cl.universe.size() <= 64 && masks_fit(l.k())) {
    std::vector<std::uint64_t> masks;
    masks.reserve(cl.sets.size());
    for (const auto& s : cl.sets) masks.push_back(s.words().empty() ? 0 : s.words()[0]);
    return BigInt(count_masks(masks, l.k()));
  }
  BigInt total = 0;
  for (const auto& t : terms_) {
    BigInt value = ipow(BigInt(l.k()), static_cast<unsigned>(t.singletons));
    for (std::uint32_t g = t.first_group; g < t.first_group + t.group_count && value != 0; ++g) {
      Bitset common = cl.sets[group_vertices_[group_offsets_[g]]];
      for (auto i = group_offsets_[g]; i < group_offsets_[g + 1]; ++i) common &= cl.sets[group_vertices_[i]];
      value *= common.count();
    }
    total += t.sign * value;
  }
  return total;
}

}  // namespace hyperchrom
