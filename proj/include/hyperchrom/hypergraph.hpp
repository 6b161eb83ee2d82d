#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hyperchrom/bitset.hpp"

namespace hyperchrom {

/// A set of edge indices (0-based) of a hypergraph with at most 64 edges.
class EdgeSubset {
 public:
  static constexpr int kMaxEdges = 64;

  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t mask) : mask_(mask) {}

  static EdgeSubset of(std::initializer_list<int> edges) {
    EdgeSubset s;
    for (int e : edges) s = s.with(e);
    return s;
  }
  static constexpr EdgeSubset all(int m) {
    return EdgeSubset(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr bool contains(int e) const noexcept { return (mask_ >> e) & 1u; }
  constexpr EdgeSubset with(int e) const noexcept { return EdgeSubset(mask_ | (std::uint64_t{1} << e)); }
  constexpr EdgeSubset without(int e) const noexcept { return EdgeSubset(mask_ & ~(std::uint64_t{1} << e)); }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool is_subset_of(EdgeSubset o) const noexcept { return (mask_ & ~o.mask_) == 0; }
  /// Index of the highest edge in the set; -1 when empty.
  constexpr int highest() const noexcept { return mask_ == 0 ? -1 : 63 - std::countl_zero(mask_); }

  template <class F>
  void for_each(F&& f) const {
    for (auto w = mask_; w != 0; w &= w - 1) f(std::countr_zero(w));
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  friend constexpr EdgeSubset operator|(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.mask_ | b.mask_); }
  friend constexpr EdgeSubset operator&(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.mask_ & b.mask_); }
  friend constexpr auto operator<=>(EdgeSubset, EdgeSubset) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Vertices are 1..n; edges are vertex sets kept in sorted order. Edge i (0-based)
/// carries the default label i under the edge labelling.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Canonicalizes each edge to a sorted set. Does not enforce the hypergraph
  /// invariants; see validate() and make_hypergraph().
  Hypergraph(int n, std::vector<std::vector<int>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<int>& edge(int i) const { return edges_[i]; }
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  /// Edge i as a bitset over vertex positions (vertex v is bit v-1).
  const Bitset& edge_set(int i) const { return edge_sets_[i]; }
  /// Vertices not contained in any edge.
  int isolated_vertex_count() const;

  EdgeSubset all_edges() const { return EdgeSubset::all(edge_count()); }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<Bitset> edge_sets_;
};

struct Violation {
  enum class Kind { edge_too_small, vertex_out_of_range, containment, duplicate_edge };
  Kind kind;
  int edge;        ///< 0-based offending edge
  int other = -1;  ///< 0-based superset/duplicate partner, when applicable
  int vertex = 0;  ///< offending vertex for vertex_out_of_range

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every invariant violation of H; empty means H is a valid hypergraph.
std::vector<Violation> validate(const Hypergraph& h);

/// Builds a hypergraph and throws InvalidInput listing the violations if it is not valid.
Hypergraph make_hypergraph(int n, std::vector<std::vector<int>> edges);

/// Number of connected components of the spanning subhypergraph H<A> (isolated vertices count).
int components(const Hypergraph& h, EdgeSubset a);

/// min |e \ e'| over ordered pairs of distinct edges. Throws DomainError when m < 2.
int rho(const Hypergraph& h);

/// Maximum number of edges meeting a fixed edge in exactly r-1 vertices.
/// Throws DomainError for non-uniform hypergraphs.
int gamma(const Hypergraph& h);

/// Common edge size, or nullopt if edges have different sizes (or there are none).
std::optional<int> uniformity(const Hypergraph& h);

bool is_linear(const Hypergraph& h);

/// Edge labelling (the bijection eta from edges to [m]), stored as 0-based ranks.
class EdgeLabelling {
 public:
  static EdgeLabelling identity(int m);
  static EdgeLabelling reversed(int m);
  /// labels[i] is the 1-based label of edge i; must be a permutation of 1..m.
  static EdgeLabelling from_labels(const std::vector<int>& labels);

  int size() const noexcept { return static_cast<int>(rank_.size()); }
  int rank(int edge) const { return rank_[edge]; }
  /// Edge with the smallest label in a nonempty set.
  int minimal_edge(EdgeSubset s) const;
  /// 1-based labels, the inverse of from_labels.
  std::vector<int> labels() const;

 private:
  std::vector<int> rank_;
};

}  // namespace hyperchrom
