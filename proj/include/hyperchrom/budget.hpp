#pragma once

#include <cstdint>
#include <string_view>

namespace hyperchrom {

/// Caps on the exponential enumerations. Every enumerating operation checks its
/// cap up front and throws BudgetExceeded rather than starting.
struct Budget {
  /// Largest edge count for which delta-cycle catalogs and NB(H) are enumerated.
  int max_edges = 24;
  /// Largest number of raw colorings (k^n or prod |L(v)|) the brute-force counters visit.
  std::uint64_t max_colorings = 100'000'000;
  /// Largest number of list slots (vertices times k) for exact list-color-function enumeration.
  int max_slots = 12;

  /// Defaults, overridden by HYPERCHROM_BUDGET when set ("edges=26,colorings=1e9,slots=14").
  static Budget from_env();
  /// Parses the HYPERCHROM_BUDGET syntax on top of the defaults; throws InvalidInput.
  static Budget parse(std::string_view spec);
};

}  // namespace hyperchrom
