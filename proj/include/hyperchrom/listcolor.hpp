#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperchrom/budget.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/polynomial.hpp"

namespace hyperchrom {

/// A k-assignment: every vertex gets a set of exactly k positive colors.
class ListAssignment {
 public:
  ListAssignment() = default;
  /// lists[v-1] is L(v). Each list is sorted; throws InvalidInput unless every
  /// list holds exactly k distinct positive colors.
  ListAssignment(int k, std::vector<std::vector<int>> lists);

  /// Every vertex gets {1..k}.
  static ListAssignment constant(int n, int k);

  int k() const noexcept { return k_; }
  int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
  /// L(v) for a 1-based vertex.
  const std::vector<int>& list(int v) const { return lists_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<std::vector<int>>& lists() const noexcept { return lists_; }
  /// Sorted union of all lists.
  std::vector<int> universe() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
  friend auto operator<=>(const ListAssignment& a, const ListAssignment& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.lists_ <=> b.lists_;
  }

 private:
  int k_ = 0;
  std::vector<std::vector<int>> lists_;
};

/// Representative of the assignment's class under color renaming: each color is
/// identified by the set of vertices whose list contains it; colors are then
/// renumbered 1, 2, ... in decreasing order of that vertex set read as a binary
/// word with vertex 1 most significant. Two assignments differ by a renaming iff
/// their canonical forms are equal.
ListAssignment canonical_form(const ListAssignment& l);

struct AlphaProfile {
  std::vector<int> per_edge;  ///< alpha(e,L) = k - |intersection of L(v), v in e|
  int total = 0;
  bool is_zero() const noexcept { return total == 0; }
};

/// Throws InvalidInput if L does not fit H (vertex count mismatch).
AlphaProfile alpha(const Hypergraph& h, const ListAssignment& l);

/// Product over components of H<A> of the number of colors common to all lists
/// in that component; isolated vertices contribute k.
BigInt beta(const Hypergraph& h, const ListAssignment& l, EdgeSubset a);

/// P(H,L) by exhaustive backtracking over L-colorings.
BigInt count_list_colorings(const Hypergraph& h, const ListAssignment& l, const Budget& budget);

/// P(H,L) as the sum over A in NB(H) of (-1)^|A| beta(A,L).
BigInt count_list_colorings_expansion(const Hypergraph& h, const ListAssignment& l, const EdgeLabelling& eta,
                                      const Budget& budget);

/// Evaluates P(H,L) for many assignments on one hypergraph. Expands NB(H) once
/// and stores, per member, its sign, singleton count and nontrivial components;
/// falls back to backtracking when NB(H) is not enumerable within budget.
class ListColoringCounter {
 public:
  ListColoringCounter(const Hypergraph& h, const EdgeLabelling& eta, const Budget& budget);

  BigInt count(const ListAssignment& l) const;
  bool uses_expansion() const noexcept { return expansion_; }

  /// Fast path for assignments already encoded as color bitmasks (one per vertex).
  std::int64_t count_masks(const std::vector<std::uint64_t>& masks, int k) const;
  /// True when count_masks cannot overflow for lists of size k.
  bool masks_fit(int k) const;

 private:
  struct Term {
    int sign;
    int singletons;
    std::uint32_t first_group;
    std::uint32_t group_count;
  };

  Hypergraph h_;
  Budget budget_;
  bool expansion_ = false;
  std::vector<Term> terms_;
  std::vector<std::uint32_t> group_offsets_;  // group g spans [offsets[g], offsets[g+1]) in group_vertices_
  std::vector<int> group_vertices_;
};

struct ListColorResult {
  BigInt value;
  ListAssignment witness;  ///< canonical form of a minimizing assignment
  /// True when the whole space of assignment classes was covered, so value is P_l(H,k).
  bool exhaustive = false;
  std::uint64_t assignments_examined = 0;
};

/// P_l(H,k) by enumerating assignments up to color renaming. A class is a
/// multiset of vertex sets (one per color) covering every vertex exactly k
/// times; vertices are processed in order and colors that have so far appeared
/// in exactly the same lists are interchangeable, so only the number taken from
/// each such group is branched on. At most (non-isolated vertices) * k colors are
/// ever needed. With max_colors below that, only classes using at most
/// max_colors colors are searched and the result is an upper bound
/// (exhaustive == false). Ties go to the lexicographically smallest canonical form.
/// Throws BudgetExceeded when (non-isolated vertices) * k exceeds budget.max_slots
/// and no smaller max_colors is given.
ListColorResult list_color_function_exact(const Hypergraph& h, int k, const Budget& budget,
                                          std::optional<int> max_colors = std::nullopt);

/// Randomized local search for a small P(H,L) over lists drawn from 2k colors.
/// Moves replace one color of one list; sideways moves are accepted and the walk
/// restarts from a random assignment after a stall. The constant assignment is
/// the initial incumbent. Deterministic for a fixed seed.
ListColorResult list_color_function_search(const Hypergraph& h, int k, std::uint64_t iterations,
                                           std::uint64_t seed, const Budget& budget);

}  // namespace hyperchrom
