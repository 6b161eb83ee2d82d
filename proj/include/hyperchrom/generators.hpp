#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

enum class Family { random_linear, random_rho, tight_path, sunflower_free, fig1 };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f);

struct GeneratorParams {
  Family family = Family::random_linear;
  int n = 0;
  int m = 0;
  int r = 3;
  int rho = 2;  ///< minimum |e \ e'| for random_rho
  int index = 1;  ///< which Figure-1 hypergraph for fig1
  std::uint64_t seed = 0;
  /// Total edge draws allowed for the rejection samplers.
  std::uint64_t max_draws = 200'000;
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds an instance of the requested family. Random families draw uniform
/// r-subsets of [n] with a seeded mt19937_64 and reject edges that break the
/// family condition; after a stall the partial instance is discarded and
/// sampling restarts. Throws GenerationFailed once max_draws is exhausted and
/// InvalidInput for impossible parameters.
///
///   random_linear   r-uniform, pairwise intersections of size <= 1
///   random_rho      r-uniform, rho(H) >= rho
///   tight_path      edges {i, ..., i+r-1} for i = 1..m (n defaults to m+r-1)
///   sunflower_free  r-uniform, no three edges whose pairwise intersections all
///                   equal their common intersection (empty core included)
///   fig1            the three 4-edge linear 3-uniform hypergraphs H1..H3
Hypergraph generate(const GeneratorParams& params);

/// H1 (a delta-cycle on 6 vertices), H2 and H3 (7 vertices, not delta-cycles).
Hypergraph figure1(int index);

}  // namespace hyperchrom
