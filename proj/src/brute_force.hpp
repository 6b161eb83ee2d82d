#pragma once

#include <cstdint>
#include <vector>

#include "hyperchrom/budget.hpp"
#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom::detail {

/// Counts maps theta with theta(v) in lists[v-1] and no monochromatic edge.
/// Vertices are assigned in order; an edge is checked as soon as its last
/// vertex gets a color, which cuts off every extension of a violating prefix.
std::uint64_t count_list_colorings_brute_force(const Hypergraph& h, const std::vector<std::vector<int>>& lists,
                                               const Budget& budget, const char* what);

}  // namespace hyperchrom::detail
