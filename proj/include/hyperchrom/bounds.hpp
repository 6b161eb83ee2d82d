#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperchrom/budget.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/listcolor.hpp"
#include "hyperchrom/polynomial.hpp"

namespace hyperchrom {

using Real = long double;

enum class Verdict { holds, fails, not_applicable, inconclusive };
std::string_view to_string(Verdict v);

/// One evaluated inequality or threshold: the claim is `lhs relation rhs`.
struct BoundReport {
  std::string name;
  std::optional<long long> m, r, rho, k, n;
  Real lhs = 0;
  Real rhs = 0;
  std::string relation = ">";
  Verdict verdict = Verdict::holds;
  /// Violated preconditions; non-empty exactly when verdict is not_applicable.
  std::vector<std::string> applicability;
  std::string detail;
};

/// Relative slack under which a strict or non-strict comparison is still
/// counted as holding, so rounding near zero cannot flip a grid verdict.
inline constexpr Real kComparisonSlack = 1e-12L;

/// Whether `lhs relation rhs` holds up to kComparisonSlack; relation is one of > >= < <=.
bool compare_with_slack(Real lhs, std::string_view relation, Real rhs);

/// Lower bound on P(H,L) - P(H,k) obtained from Lemma-1 style term bounds:
///   sum_e alpha(e,L) * (k^(n-r) - sum_{A in NB(H,e), |A| even} k^(c(A)-1)).
/// Exact. Throws DomainError for non-uniform H.
BigInt prop1_rhs(const Hypergraph& h, const ListAssignment& l, const EdgeLabelling& eta, const Budget& budget);

enum class UniformMode { binomial, sinh, phi };
/// Normalized lower bound for r-uniform H (M = m-1):
///   binomial: 1 - sum_{i>=1} C(M,2i-1) k^(-2i-rho+2)
///   sinh:     1 - k^(1-rho) sinh(M/k)
///   phi:      1 - k^(1-rho) exp(M/k) / 2
Real cor_uniform_rhs(int m, int rho, Real k, UniformMode mode);

enum class LinearMode { binomial, closed };
/// Normalized lower bound for linear r-uniform H:
///   binomial: 1 - M k^(1-r) - sum_{i>=2} C(M,2i-1) k^(-2i-2r+6)
///   closed:   1 - M (k^(1-r) - k^(4-2r)) - k^(5-2r) sinh(M/k)
Real cor_linear_rhs(int m, int r, Real k, LinearMode mode);

/// 2.4 (m-1) / (rho log(m-1)); +inf when m = 2.
Real threshold_thm1(int m, int rho);
/// 1.185 (m-1) / log(m-1)
Real threshold_thm2(int m);
/// 0.831 (m-1) / log(m-1)
Real threshold_thm3(int m);
/// 0.002 log(m-1) / (m-1)^0.156
Real thm2_gap_factor(int m);
/// (m-1)^-1.796 (1 + 1.796 log(m-1))
Real thm3_gap_factor(int m);

/// Auxiliary functions from the threshold proofs. All logs are natural.
namespace proof {

/// 2 (2.4M)^(t-1) - (t log M)^(t-1) M^(t/2.4); needs M >= 2, t >= 1.
Real psi_Mt(Real M, Real t);
/// 1 - k^(1-t) exp(M/k) / 2
Real phi_Mkt(Real M, Real k, Real t);
/// 2.4M - (2M)^(1/3) log(M) M^(1/2.4); M > 0.
Real phi1(Real M);
/// 2^(1/6) 2.4M - (2M)^(1/3) log(M) M^(1/2.4 + 1/14.4); M > 0.
Real phi2(Real M);

/// Constant of the r = 3 argument.
inline constexpr Real kThm2C = 0.844L;
/// 1 - x exp(x) / (2y); y > 0.
Real phi_xy_thm2(Real x, Real y);

/// (1 + (9/e)^(1/3)) / 3, between 0.830 and 0.831.
Real c_thm3();
/// 2y^3 - 2y x^3 - x^3 exp(x)
Real phi_xy_thm3(Real x, Real y);
/// 2 exp((3c-1)x) - 3x^3; x >= 0.
Real psi_x_thm3(Real x, Real c);
/// Second derivative of psi_x_thm3: 2(3c-1)^2 exp((3c-1)x) - 18x.
Real psi_x_thm3_second_derivative(Real x, Real c);
/// 1 - x^(r-1)/M^(r-2) - x^(2r-5) exp(x) / (2 M^(2r-5)); x > 0, M > 0, r >= 4.
Real Psi_r(Real x, Real M, int r);
/// Psi_r(x,M,r+1) - Psi_r(x,M,r), evaluated in factored form to avoid cancellation.
Real Psi_r_increment(Real x, Real M, int r);
/// log(M) / c
Real x0(Real M, Real c);
/// log(9 / (3c-1)^3) / (3c-1)
Real x1(Real c);

}  // namespace proof

/// Grid checks of every numeric claim in the threshold proofs, one report per grid.
std::vector<BoundReport> verify_grids();

enum class Effort { threshold_only, exact };

/// Checks the hypotheses of theorem `which` (1, 2 or 3) on H, compares k with the
/// threshold, and with Effort::exact also computes P_l(H,k) when within budget.
/// A k below the threshold is inconclusive, never a failure.
BoundReport theorem_certify(const Hypergraph& h, int k, int which, Effort effort, const Budget& budget);

/// Violated hypotheses of theorem `which` on H; empty when it applies.
std::vector<std::string> theorem_preconditions(const Hypergraph& h, int which);

/// Threshold of theorem `which` for H (requires the hypotheses that define it).
Real theorem_threshold(const Hypergraph& h, int which);

}  // namespace hyperchrom
