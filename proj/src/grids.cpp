#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "hyperchrom/bounds.hpp"

namespace hyperchrom {

namespace {

/// Tracks the worst sample of a family of claims `lhs relation rhs`.
class GridCheck {
 public:
  GridCheck(std::string name, std::string relation) {
    report_.name = std::move(name);
    report_.relation = std::move(relation);
  }

  void sample(Real lhs, Real rhs, const std::string& where) {
    ++samples_;
    const bool ok = compare_with_slack(lhs, report_.relation, rhs);
    const Real margin = (report_.relation[0] == '>') ? lhs - rhs : rhs - lhs;
    if (!ok) ++failures_;
    if (samples_ == 1 || margin < worst_ || (!ok && failures_ == 1)) {
      worst_ = margin;
      report_.lhs = lhs;
      report_.rhs = rhs;
      worst_at_ = where;
    }
  }

  BoundReport finish(const std::string& grid) {
    report_.verdict = failures_ == 0 ? Verdict::holds : Verdict::fails;
    std::ostringstream os;
    os << grid << "; samples=" << samples_ << "; failures=" << failures_ << "; worst at " << worst_at_;
    report_.detail = os.str();
    return std::move(report_);
  }

 private:
  BoundReport report_;
  std::uint64_t samples_ = 0;
  std::uint64_t failures_ = 0;
  Real worst_ = 0;
  std::string worst_at_;
};

std::string at(const char* var, Real v) {
  std::ostringstream os;
  os.precision(10);
  os << var << "=" << static_cast<double>(v);
  return os.str();
}

/// M on (0, 10^4]: integers plus fractional samples.
void for_each_M_sample(const std::function<void(Real)>& f) {
  for (int j = 1; j < 100; ++j) f(j / 100.0L);
  for (int j = 1; j <= 10000; ++j) f(j);
  for (int j = 0; j < 400; ++j) f(1.5L + j * 24.9L);
}

}  // namespace

std::vector<BoundReport> verify_grids() {
  using namespace proof;
  std::vector<BoundReport> out;

  for (int t = 2; t <= 6; ++t) {
    GridCheck check("psi_Mt_positive", ">");
    const int first = (t * t * t + 1) / 2;  // ceil(t^3/2)
    for (int M = first; M <= 10000; ++M) check.sample(psi_Mt(M, t), 0, at("M", M));
    auto r = check.finish("t=" + std::to_string(t) + ", M=" + std::to_string(first) + "..10000");
    r.rho = t;
    out.push_back(std::move(r));
  }

  {
    GridCheck check("psi_identity_relative_error", "<=");
    for (int t = 2; t <= 6; ++t) {
      for (int M = std::max(2, (t * t * t + 1) / 2); M <= 10000; ++M) {
        const Real logM = std::log(static_cast<Real>(M));
        const Real k0 = 2.4L * M / (t * logM);
        const Real via_phi = 2 * std::pow(k0, static_cast<Real>(t - 1)) * phi_Mkt(M, k0, t) *
                             std::pow(t * logM, static_cast<Real>(t - 1));
        const Real direct = psi_Mt(M, t);
        const Real scale = std::max(std::fabs(direct), 2 * std::pow(2.4L * M, static_cast<Real>(t - 1)));
        check.sample(std::fabs(via_phi - direct) / scale, 1e-10L, "t=" + std::to_string(t) + ", " + at("M", M));
      }
    }
    out.push_back(check.finish("t=2..6, M=ceil(t^3/2)..10000"));
  }

  {
    GridCheck c1("phi1_positive", ">");
    GridCheck c2("phi2_positive", ">");
    for_each_M_sample([&](Real M) {
      c1.sample(phi1(M), 0, at("M", M));
      c2.sample(phi2(M), 0, at("M", M));
    });
    out.push_back(c1.finish("M in (0,10000] sampled"));
    out.push_back(c2.finish("M in (0,10000] sampled"));
  }

  {
    GridCheck check("thm2_phi_gap", ">");
    const Real c = kThm2C;
    for (int y = 2; y <= 1'000'000; ++y) {
      const Real logy = std::log(static_cast<Real>(y));
      check.sample(phi_xy_thm2(c * logy, y), 0.002L * logy / std::pow(static_cast<Real>(y), 1 - c), at("y", y));
    }
    out.push_back(check.finish("c=0.844, y=2..1000000"));
  }

  {
    GridCheck check("thm2_phi_decreasing_in_x", ">");
    for (int y = 2; y <= 1000; y *= 3)
      for (int j = 1; j < 500; ++j) {
        const Real x = j / 100.0L;
        check.sample(phi_xy_thm2(x, y), phi_xy_thm2(x + 0.01L, y), at("y", y) + ", " + at("x", x));
      }
    out.push_back(check.finish("y=2,6,..; x=0.01..5"));
  }

  const Real c3 = c_thm3();
  {
    GridCheck check("thm3_c_range", ">");
    check.sample(c3, 0.830L, "lower");
    check.sample(0.831L, c3, "upper");
    out.push_back(check.finish("0.830 < c < 0.831"));
  }

  {
    GridCheck tangent("thm3_psi_tangent_bound", ">=");
    GridCheck convex("thm3_psi_second_derivative_nonnegative", ">=");
    GridCheck reduction("thm3_phi_reduction", ">=");
    for (int j = 0; j <= 5000; ++j) {
      const Real x = j / 100.0L;
      tangent.sample(psi_x_thm3(x, c3), 2 + 2 * (3 * c3 - 1) * x, at("x", x));
      convex.sample(psi_x_thm3_second_derivative(x, c3), 0, at("x", x));
      if (x <= 20) {
        const Real lhs = std::exp(-x) * phi_xy_thm3(x, std::exp(c3 * x));
        reduction.sample(lhs, psi_x_thm3(x, c3), at("x", x));
      }
    }
    const Real xs = x1(c3);
    convex.sample(psi_x_thm3_second_derivative(xs, c3), 0, at("x1", xs));
    out.push_back(tangent.finish("x=0..50 step 0.01"));
    out.push_back(convex.finish("x=0..50 step 0.01 plus x1"));
    out.push_back(reduction.finish("x=0..20 step 0.01"));
  }

  {
    GridCheck check("thm3_final_constant", ">");
    for (int M = 2; M <= 10000; ++M) {
      const Real logM = std::log(static_cast<Real>(M));
      const Real lhs = std::pow(static_cast<Real>(M), 1 / c3 - 3) * (1 + (3 * c3 - 1) * logM / c3);
      const Real rhs = std::pow(static_cast<Real>(M), -1.796L) * (1 + 1.796L * logM);
      check.sample(lhs, rhs, at("M", M));
    }
    out.push_back(check.finish("M=2..10000"));
  }

  {
    GridCheck increment("Psi_r_increasing_in_r", ">");
    GridCheck direct("Psi_r_increasing_in_r_direct", ">=");
    for (Real M : {2.0L, 3.0L, 5.0L, 10.0L, 50.0L, 100.0L, 1000.0L}) {
      for (int j = 1; j < 100; ++j) {
        const Real x = M * j / 100;
        for (int r = 4; r <= 12; ++r) {
          const std::string where = at("M", M) + ", " + at("x", x) + ", r=" + std::to_string(r);
          increment.sample(Psi_r_increment(x, M, r), 0, where);
          direct.sample(Psi_r(x, M, r + 1), Psi_r(x, M, r), where);
        }
      }
    }
    out.push_back(increment.finish("M in {2..1000}, x=M*0.01..M*0.99, r=4..12"));
    out.push_back(direct.finish("M in {2..1000}, x=M*0.01..M*0.99, r=4..12"));
  }

  {
    GridCheck check("phi_Mkt_increasing_in_k", ">");
    for (int M = 1; M <= 64; M *= 2)
      for (int t = 2; t <= 6; ++t)
        for (int k = 1; k < 60; ++k)
          check.sample(phi_Mkt(M, k + 1, t), phi_Mkt(M, k, t),
                       "M=" + std::to_string(M) + ", t=" + std::to_string(t) + ", k=" + std::to_string(k));
    out.push_back(check.finish("M=1..64 (powers of 2), t=2..6, k=1..60"));
  }

  {
    GridCheck bin_sinh("uniform_binomial_ge_sinh", ">=");
    GridCheck sinh_phi("uniform_sinh_ge_phi", ">=");
    for (int m = 2; m <= 60; ++m)
      for (int rho = 1; rho <= 6; ++rho)
        for (int k = 1; k <= 40; ++k) {
          const std::string where = "m=" + std::to_string(m) + ", rho=" + std::to_string(rho) + ", k=" + std::to_string(k);
          const Real b = cor_uniform_rhs(m, rho, k, UniformMode::binomial);
          const Real s = cor_uniform_rhs(m, rho, k, UniformMode::sinh);
          const Real p = cor_uniform_rhs(m, rho, k, UniformMode::phi);
          bin_sinh.sample(b, s, where);
          sinh_phi.sample(s, p, where);
        }
    out.push_back(bin_sinh.finish("m=2..60, rho=1..6, k=1..40"));
    out.push_back(sinh_phi.finish("m=2..60, rho=1..6, k=1..40"));
  }

  {
    GridCheck check("linear_binomial_ge_closed", ">=");
    for (int m = 2; m <= 60; ++m)
      for (int r = 3; r <= 6; ++r)
        for (int k = 1; k <= 40; ++k)
          check.sample(cor_linear_rhs(m, r, k, LinearMode::binomial), cor_linear_rhs(m, r, k, LinearMode::closed),
                       "m=" + std::to_string(m) + ", r=" + std::to_string(r) + ", k=" + std::to_string(k));
    out.push_back(check.finish("m=2..60, r=3..6, k=1..40"));
  }

  return out;
}

}  // namespace hyperchrom
