#include "shg/transfer_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace shg {

QuadTransfer transfer_matrix(double zeta) {
  if (!std::isfinite(zeta) || zeta < 0.0)
    throw std::invalid_argument(
        "transfer_matrix: zeta must be finite and >= 0 (real coupling, unseeded harmonic)");

  const double t = std::tanh(zeta);
  const double ch = std::cosh(zeta);
  const double sh = std::sinh(zeta);
  const double sech = 1.0 / ch;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  QuadTransfer n;
  n.m.setZero();
  n.m(0, 0) = (1.0 - zeta * t) * sech;
  n.m(0, 1) = -std::sqrt(2.0) * t * sech;
  n.m(1, 0) = inv_sqrt2 * (t + zeta * sech * sech);
  n.m(1, 1) = sech * sech;
  n.m(2, 2) = sech;
  n.m(2, 3) = -inv_sqrt2 * (sh + zeta * sech);
  n.m(3, 2) = std::sqrt(2.0) * t;
  n.m(3, 3) = 1.0 - zeta * t;
  return n;
}

}  // namespace shg
