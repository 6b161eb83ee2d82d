#include "hyperchrom/chromatic.hpp"

#include <cstdint>
#include <vector>

#include "brute_force.hpp"
#include "hyperchrom/cycles.hpp"
#include "hyperchrom/errors.hpp"

namespace hyperchrom {

IntPolynomial chromatic_polynomial(const Hypergraph& h, const EdgeLabelling& eta, const Budget& budget) {
  NbEnumerator nb(h, eta, budget);
  // signed number of NB members per component count; |NB| <= 2^64 fits
  std::vector<std::int64_t> by_components(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
  nb.visit([&](EdgeSubset a, const RollbackUnionFind& uf) {
    by_components[uf.set_count()] += (a.size() % 2 == 0) ? 1 : -1;
  });
  IntPolynomial p;
  for (std::size_t c = 0; c < by_components.size(); ++c) p.add_term(static_cast<int>(c), BigInt(by_components[c]));
  return p;
}

IntPolynomial chromatic_polynomial(const Hypergraph& h, const Budget& budget) {
  return chromatic_polynomial(h, EdgeLabelling::identity(h.edge_count()), budget);
}

BigInt count_proper_colorings(const Hypergraph& h, int k, const Budget& budget) {
  if (k < 0) throw DomainError("color count must be non-negative");
  std::vector<int> palette(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) palette[c] = c + 1;
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(h.vertex_count()), palette);
  return BigInt(detail::count_list_colorings_brute_force(h, lists, budget, "proper coloring count"));
}

}  // namespace hyperchrom
