#pragma once

#include "hyperchrom/budget.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/polynomial.hpp"

namespace hyperchrom {

/// P(H,k) as the sum over A in NB(H) of (-1)^|A| k^c(A).
IntPolynomial chromatic_polynomial(const Hypergraph& h, const EdgeLabelling& eta, const Budget& budget);
IntPolynomial chromatic_polynomial(const Hypergraph& h, const Budget& budget);

/// Number of maps V -> [k] leaving no edge monochromatic, by exhaustive
/// backtracking. Throws BudgetExceeded when k^n exceeds budget.max_colorings.
BigInt count_proper_colorings(const Hypergraph& h, int k, const Budget& budget);

}  // namespace hyperchrom
