#include "hyperchrom/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hyperchrom/chromatic.hpp"
#include "hyperchrom/cycles.hpp"
#include "hyperchrom/errors.hpp"

namespace hyperchrom {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::not_applicable:
      return "not-applicable";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool compare_with_slack(Real lhs, std::string_view relation, Real rhs) {
  const Real slack = kComparisonSlack * std::max<Real>(1, std::max(std::fabs(lhs), std::fabs(rhs)));
  if (relation == ">" || relation == ">=") return lhs - rhs > -slack;
  if (relation == "<" || relation == "<=") return rhs - lhs > -slack;
  throw InvalidInput("unknown relation " + std::string(relation));
}

BigInt prop1_rhs(const Hypergraph& h, const ListAssignment& l, const EdgeLabelling& eta, const Budget& budget) {
  const auto r = uniformity(h);
  if (!r) throw DomainError("prop1_rhs requires a uniform hypergraph with at least one edge");
  const auto profile = alpha(h, l);
  const int m = h.edge_count();
  const int n = h.vertex_count();
  // even_terms[e * (n+1) + c]: number of even-size A in NB(H,e) with c(A) = c
  std::vector<std::int64_t> even_terms(static_cast<std::size_t>(m) * static_cast<std::size_t>(n + 1), 0);
  NbEnumerator(h, eta, budget).visit([&](EdgeSubset a, const RollbackUnionFind& uf) {
    if (a.empty() || a.size() % 2 != 0) return;
    const int c = uf.set_count();
    a.for_each([&](int e) { ++even_terms[static_cast<std::size_t>(e) * static_cast<std::size_t>(n + 1) + c]; });
  });
  const BigInt k = l.k();
  BigInt total = 0;
  for (int e = 0; e < m; ++e) {
    if (profile.per_edge[e] == 0) continue;
    BigInt bracket = ipow(k, static_cast<unsigned>(n - *r));
    for (int c = 1; c <= n; ++c) {
      const auto count = even_terms[static_cast<std::size_t>(e) * static_cast<std::size_t>(n + 1) + c];
      if (count != 0) bracket -= count * ipow(k, static_cast<unsigned>(c - 1));
    }
    total += profile.per_edge[e] * bracket;
  }
  return total;
}

namespace {

/// sum_{i>=i0} C(M, 2i-1) k^(-2i + shift)
Real odd_binomial_tail(int M, Real k, int i0, int shift) {
  Real sum = 0;
  Real binom = 1;  // C(M, j) for the current j
  for (int j = 1; j <= M; ++j) {
    binom = binom * static_cast<Real>(M - j + 1) / static_cast<Real>(j);
    if (j % 2 == 0) continue;
    const int i = (j + 1) / 2;
    if (i < i0) continue;
    sum += binom * std::pow(k, static_cast<Real>(-2 * i + shift));
  }
  return sum;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

Real log_m1(int m) { return std::log(static_cast<Real>(m - 1)); }

}  // namespace

Real cor_uniform_rhs(int m, int rho, Real k, UniformMode mode) {
  require(m >= 2 && rho >= 1 && k >= 1, "cor_uniform_rhs needs m >= 2, rho >= 1, k >= 1");
  const Real M = m - 1;
  switch (mode) {
    case UniformMode::binomial:
      return 1 - odd_binomial_tail(m - 1, k, 1, 2 - rho);
    case UniformMode::sinh:
      return 1 - std::pow(k, static_cast<Real>(1 - rho)) * std::sinh(M / k);
    case UniformMode::phi:
      return proof::phi_Mkt(M, k, rho);
  }
  return 0;
}

Real cor_linear_rhs(int m, int r, Real k, LinearMode mode) {
  require(m >= 2 && r >= 3 && k >= 1, "cor_linear_rhs needs m >= 2, r >= 3, k >= 1");
  const Real M = m - 1;
  const Real first = M * std::pow(k, static_cast<Real>(1 - r));
  switch (mode) {
    case LinearMode::binomial:
      return 1 - first - odd_binomial_tail(m - 1, k, 2, 6 - 2 * r);
    case LinearMode::closed:
      return 1 - first + M * std::pow(k, static_cast<Real>(4 - 2 * r)) -
             std::pow(k, static_cast<Real>(5 - 2 * r)) * std::sinh(M / k);
  }
  return 0;
}

Real threshold_thm1(int m, int rho) {
  require(m >= 2 && rho >= 1, "threshold_thm1 needs m >= 2, rho >= 1");
  if (m == 2) return std::numeric_limits<Real>::infinity();
  return 2.4L * (m - 1) / (rho * log_m1(m));
}

Real threshold_thm2(int m) {
  require(m >= 2, "threshold_thm2 needs m >= 2");
  if (m == 2) return std::numeric_limits<Real>::infinity();
  return 1.185L * (m - 1) / log_m1(m);
}

Real threshold_thm3(int m) {
  require(m >= 2, "threshold_thm3 needs m >= 2");
  if (m == 2) return std::numeric_limits<Real>::infinity();
  return 0.831L * (m - 1) / log_m1(m);
}

Real thm2_gap_factor(int m) {
  require(m >= 3, "thm2_gap_factor needs m >= 3");
  return 0.002L * log_m1(m) / std::pow(static_cast<Real>(m - 1), 0.156L);
}

Real thm3_gap_factor(int m) {
  require(m >= 3, "thm3_gap_factor needs m >= 3");
  return std::pow(static_cast<Real>(m - 1), -1.796L) * (1 + 1.796L * log_m1(m));
}

namespace proof {

Real psi_Mt(Real M, Real t) {
  require(M >= 2 && t >= 1, "psi_Mt needs M >= 2, t >= 1");
  return 2 * std::pow(2.4L * M, t - 1) - std::pow(t * std::log(M), t - 1) * std::pow(M, t / 2.4L);
}

Real phi_Mkt(Real M, Real k, Real t) {
  require(k > 0, "phi_Mkt needs k > 0");
  return 1 - std::pow(k, 1 - t) * std::exp(M / k) / 2;
}

Real phi1(Real M) {
  require(M > 0, "phi1 needs M > 0");
  return 2.4L * M - std::cbrt(2 * M) * std::log(M) * std::pow(M, 1 / 2.4L);
}

Real phi2(Real M) {
  require(M > 0, "phi2 needs M > 0");
  return std::pow(2.0L, 1 / 6.0L) * 2.4L * M -
         std::cbrt(2 * M) * std::log(M) * std::pow(M, 1 / 2.4L + 1 / (2.4L * 6));
}

Real phi_xy_thm2(Real x, Real y) {
  require(y > 0, "phi_xy_thm2 needs y > 0");
  return 1 - x * std::exp(x) / (2 * y);
}

Real c_thm3() { return (1 + std::cbrt(9 / std::exp(1.0L))) / 3; }

Real phi_xy_thm3(Real x, Real y) { return 2 * y * y * y - 2 * y * x * x * x - x * x * x * std::exp(x); }

Real psi_x_thm3(Real x, Real c) {
  require(x >= 0, "psi_x_thm3 needs x >= 0");
  return 2 * std::exp((3 * c - 1) * x) - 3 * x * x * x;
}

Real psi_x_thm3_second_derivative(Real x, Real c) {
  const Real a = 3 * c - 1;
  return 2 * a * a * std::exp(a * x) - 18 * x;
}

Real Psi_r(Real x, Real M, int r) {
  require(x > 0 && M > 0 && r >= 4, "Psi_r needs x > 0, M > 0, r >= 4");
  return 1 - std::pow(x, static_cast<Real>(r - 1)) / std::pow(M, static_cast<Real>(r - 2)) -
         std::pow(x, static_cast<Real>(2 * r - 5)) * std::exp(x) / (2 * std::pow(M, static_cast<Real>(2 * r - 5)));
}

Real Psi_r_increment(Real x, Real M, int r) {
  require(x > 0 && M > 0 && r >= 4, "Psi_r_increment needs x > 0, M > 0, r >= 4");
  const Real q = x / M;
  // M q^(r-1) (1 - q) + exp(x)/2 q^(2r-5) (1 - q^2)
  return M * std::pow(q, static_cast<Real>(r - 1)) * (1 - q) +
         std::exp(x) / 2 * std::pow(q, static_cast<Real>(2 * r - 5)) * (1 - q * q);
}

Real x0(Real M, Real c) {
  require(M > 0 && c > 0, "x0 needs M > 0, c > 0");
  return std::log(M) / c;
}

Real x1(Real c) {
  const Real a = 3 * c - 1;
  require(a > 0, "x1 needs 3c - 1 > 0");
  return std::log(9 / (a * a * a)) / a;
}

}  // namespace proof

std::vector<std::string> theorem_preconditions(const Hypergraph& h, int which) {
  if (which < 1 || which > 3) throw InvalidInput("theorem must be 1, 2 or 3");
  std::vector<std::string> out;
  const int m = h.edge_count();
  const auto r = uniformity(h);
  if (!r) out.emplace_back("not uniform");
  switch (which) {
    case 1: {
      if (r && *r < 3) out.emplace_back("r < 3");
      if (m < 2) {
        out.emplace_back("m < 2");
        break;
      }
      const int t = rho(h);
      if (t < 2) out.emplace_back("rho < 2");
      if (2 * (m - 1) < t * t * t) out.emplace_back("m < rho^3/2 + 1");
      break;
    }
    case 2:
      if (r && *r != 3) out.emplace_back("r != 3");
      if (!is_linear(h)) out.emplace_back("not linear");
      if (m < 3) out.emplace_back("m < 3");
      break;
    case 3:
      if (r && *r < 4) out.emplace_back("r < 4");
      if (!is_linear(h)) out.emplace_back("not linear");
      if (m < 3) out.emplace_back("m < 3");
      break;
  }
  return out;
}

Real theorem_threshold(const Hypergraph& h, int which) {
  switch (which) {
    case 1:
      return threshold_thm1(h.edge_count(), rho(h));
    case 2:
      return threshold_thm2(h.edge_count());
    case 3:
      return threshold_thm3(h.edge_count());
  }
  throw InvalidInput("theorem must be 1, 2 or 3");
}

BoundReport theorem_certify(const Hypergraph& h, int k, int which, Effort effort, const Budget& budget) {
  BoundReport report;
  report.name = "theorem" + std::to_string(which);
  report.relation = ">=";
  report.m = h.edge_count();
  report.n = h.vertex_count();
  report.k = k;
  if (auto r = uniformity(h)) report.r = *r;
  if (h.edge_count() >= 2) report.rho = rho(h);
  report.lhs = k;
  report.applicability = theorem_preconditions(h, which);
  if (!report.applicability.empty()) {
    report.verdict = Verdict::not_applicable;
    report.rhs = std::numeric_limits<Real>::quiet_NaN();
    std::string reasons;
    for (const auto& a : report.applicability) reasons += (reasons.empty() ? "" : "; ") + a;
    report.detail = reasons;
    return report;
  }
  report.rhs = theorem_threshold(h, which);
  if (!(static_cast<Real>(k) >= report.rhs)) {
    report.verdict = Verdict::inconclusive;
    report.detail = "k below threshold";
    return report;
  }
  report.verdict = Verdict::holds;
  report.detail = "k meets threshold";
  if (effort == Effort::exact) {
    try {
      const auto plk = list_color_function_exact(h, k, budget);
      const auto p = chromatic_polynomial(h, budget).eval(k);
      report.detail = "P_l=" + plk.value.str() + " P=" + p.str();
      if (plk.value == p) {
        report.detail += " (equal)";
      } else {
        report.verdict = Verdict::fails;
        report.detail += " (P_l < P)";
      }
    } catch (const BudgetExceeded& e) {
      report.detail = "k meets threshold; exact check skipped: " + std::string(e.what());
    }
  }
  return report;
}

}  // namespace hyperchrom
