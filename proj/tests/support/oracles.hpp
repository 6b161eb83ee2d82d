#pragma once

// Reference implementations written straight from the definitions. They share
// no code with the library beyond the Hypergraph and ListAssignment containers.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/listcolor.hpp"
#include "hyperchrom/polynomial.hpp"

namespace oracle {

using hyperchrom::BigInt;
using hyperchrom::EdgeSubset;
using hyperchrom::Hypergraph;
using hyperchrom::ListAssignment;

/// Components of H<A> by breadth-first search over the vertex-edge incidence.
int components(const Hypergraph& h, EdgeSubset a);

/// Vertex sets of the components of H<A>, each sorted, isolated vertices included.
std::vector<std::vector<int>> component_sets(const Hypergraph& h, EdgeSubset a);

/// e is contained in V(F \ {e}) for every e in F (checked edge by edge).
bool covering(const Hypergraph& h, EdgeSubset f);

/// Minimal nonempty F with the covering property, checked against all proper subsets.
bool is_delta_cycle(const Hypergraph& h, EdgeSubset f);

/// All delta-cycles found by testing every subset of E.
std::vector<EdgeSubset> delta_cycles(const Hypergraph& h);

/// labels[i] is the 0-based rank of edge i.
std::vector<EdgeSubset> broken_delta_cycles(const Hypergraph& h, const std::vector<int>& rank);

/// Every subset of E containing no broken delta-cycle, in increasing mask order.
std::vector<EdgeSubset> nb(const Hypergraph& h, const std::vector<int>& rank);

/// Maps V -> [k] with no monochromatic edge, counted over all k^n maps.
std::uint64_t proper_colorings(const Hypergraph& h, int k);

/// Maps choosing theta(v) in L(v) with no monochromatic edge, over all of them.
std::uint64_t list_colorings(const Hypergraph& h, const ListAssignment& l);

/// Product over components of H<A> of |intersection of the lists in the component|.
BigInt beta(const Hypergraph& h, const ListAssignment& l, EdgeSubset a);

/// k - |intersection of L(v), v in e|.
int alpha_edge(const Hypergraph& h, const ListAssignment& l, int e);

/// C(n, j) by Pascal's rule.
BigInt binomial(int n, int j);

/// Uniformly random permutation of 0..m-1 used as edge ranks.
std::vector<int> random_rank(int m, std::mt19937_64& rng);

/// Random hypergraph on n vertices with m edges of sizes in [lo, hi], no edge
/// inside another. Returns false if no such hypergraph was found quickly.
bool random_hypergraph(int n, int m, int lo, int hi, std::mt19937_64& rng, Hypergraph& out);

/// Random k-assignment over colors 1..universe.
ListAssignment random_assignment(int n, int k, int universe, std::mt19937_64& rng);

/// Calls f on every hypergraph with vertex set [n], 1..max_m edges chosen among
/// the subsets with sizes in [lo, hi], no edge inside another, and vertex
/// degrees non-increasing in the vertex index (every isomorphism class of
/// hypergraphs on n vertices occurs). With `linear`, pairwise intersections have
/// size at most 1.
void for_each_small_hypergraph(int n, int max_m, int lo, int hi, bool linear,
                               const std::function<void(const Hypergraph&)>& f);

}  // namespace oracle
