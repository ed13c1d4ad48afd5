#include "shg/mean_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shg {

namespace {
void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0) || !(v <= 1.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string("CavitySpec: ") + name + " must lie in [0, 1]");
}
}  // namespace

void CavitySpec::validate() const {
  check_unit_interval(t11, "t11");
  check_unit_interval(t12, "t12");
  check_unit_interval(t21, "t21");
  check_unit_interval(t22, "t22");
  check_unit_interval(l13, "l13");
  check_unit_interval(l14, "l14");
  check_unit_interval(l23, "l23");
  check_unit_interval(l24, "l24");
  if (!(la >= 0.0) || !std::isfinite(la))
    throw std::invalid_argument("CavitySpec: la must be >= 0");
  if (!(enl1 >= 0.0) || !(enl2 >= 0.0) || !std::isfinite(enl1) || !std::isfinite(enl2))
    throw std::invalid_argument("CavitySpec: enl1, enl2 must be >= 0");
  if (!(n1 >= 1.0) || !(n2 >= 1.0))
    throw std::invalid_argument("CavitySpec: refractive indices must be >= 1");
  if (!(lc > 0.0) || !std::isfinite(lc))
    throw std::invalid_argument("CavitySpec: lc must be positive");
}

bool CavitySpec::restricted() const {
  return t21 == 1.0 && t22 == 1.0 && l23 == 0.0 && l24 == 0.0 && t12 == 0.0;
}

OperatingPoint solve_conversion(const CavitySpec& cavity, double p_in) {
  cavity.validate();
  if (!(p_in >= 0.0) || !std::isfinite(p_in))
    throw std::invalid_argument("solve_conversion: p_in must be finite and >= 0");

  OperatingPoint op;
  op.p_in = p_in;
  if (p_in == 0.0 || cavity.enl1 == 0.0 || cavity.t11 == 0.0) return op;

  const double num = 4.0 * cavity.t11 * std::sqrt(cavity.enl1 * p_in);
  const double refl = std::sqrt(1.0 - cavity.t11) * std::sqrt(1.0 - cavity.t12);
  const double sqrt_e1p = std::sqrt(cavity.enl1 * p_in);  // d1 = s * sqrt_e1p

  auto eps2_of = [&](double e1, double d1) {
    const double f = (cavity.enl2 / cavity.enl1) * (1.0 - cavity.t12) * (1.0 - cavity.t12) *
                     (1.0 - cavity.l13) * (1.0 - cavity.l13);
    const double u = 1.0 - d1;
    return f * e1 * u * u;
  };
  auto rhs = [&](double s) {
    const double e1 = s * s;
    const double d1 = s * sqrt_e1p;
    const double e2 = eps2_of(e1, d1);
    const double d2 = std::sqrt(std::max(e2 * cavity.enl2 * p_in, 0.0));
    const double den = 2.0 - refl * (2.0 - cavity.l13 - cavity.l14 - d1 - d2);
    return num / (den * den);
  };

  // Seed from the undepleted estimate; exact in the p_in -> 0 limit.
  const double den0 = 2.0 - refl * (2.0 - cavity.l13 - cavity.l14);
  double s = std::clamp(num / (den0 * den0), 0.0, 1.0);

  bool converged = false;
  for (int i = 0; i < 200; ++i) {
    const double next = std::clamp(0.5 * s + 0.5 * rhs(s), 0.0, 1.0);
    const double step = std::abs(next - s);
    s = next;
    if (step < 1e-14) {
      converged = true;
      break;
    }
  }

  double residual = s - rhs(s);
  if (!converged || std::abs(residual) > 1e-13) {
    // Bisection on s - rhs(s); rhs is decreasing on [0, 1] so the root is unique.
    double lo = 0.0, hi = 1.0;
    if (!(1.0 - rhs(1.0) > 0.0))
      throw std::runtime_error(
          "solve_conversion: no physical root with eps1 <= 1 (residual at eps1=1: " +
          std::to_string(1.0 - rhs(1.0)) + ")");
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      ((mid - rhs(mid)) < 0.0 ? lo : hi) = mid;
    }
    s = 0.5 * (lo + hi);
    residual = s - rhs(s);
  }
  if (std::abs(residual) > 1e-12)
    throw std::runtime_error("solve_conversion: fixed point did not converge, residual " +
                             std::to_string(residual));

  op.eps1 = s * s;
  const double d1 = s * sqrt_e1p;
  op.eps2 = eps2_of(op.eps1, d1);
  const double d2 = std::sqrt(std::max(op.eps2 * cavity.enl2 * p_in, 0.0));
  const double nr = cavity.n1 / cavity.n2;
  op.zeta1 = std::sqrt(nr * d1);
  op.zeta2 = std::sqrt(nr * d2);
  op.depletion = d1;

  if (op.eps1 + op.eps2 > 1.0 + 1e-9)
    throw std::runtime_error("solve_conversion: eps1 + eps2 > 1, outside model validity");
  return op;
}

double intensity_ratio(const OperatingPoint& op) {
  if (!(op.eps2 > 0.0))
    throw std::domain_error("intensity_ratio: undefined, eps2 = 0");
  return op.eps1 / op.eps2;
}

}  // namespace shg
