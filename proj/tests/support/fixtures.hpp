#pragma once

#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/listcolor.hpp"

namespace fixtures {

inline hyperchrom::Hypergraph e1() { return hyperchrom::make_hypergraph(3, {{1, 2, 3}}); }
inline hyperchrom::Hypergraph e2() { return hyperchrom::make_hypergraph(5, {{1, 2, 3}, {3, 4, 5}}); }
inline hyperchrom::Hypergraph tri() { return hyperchrom::make_hypergraph(3, {{1, 2}, {2, 3}, {1, 3}}); }

/// Lists {1,2},{1,2},{2,3} on E1.
inline hyperchrom::ListAssignment e1_lists() { return hyperchrom::ListAssignment(2, {{1, 2}, {1, 2}, {2, 3}}); }

/// {1,2,3} everywhere except {4,5,6} on vertex 5 of E2.
inline hyperchrom::ListAssignment e2_lists() {
  return hyperchrom::ListAssignment(3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {4, 5, 6}});
}

}  // namespace fixtures
