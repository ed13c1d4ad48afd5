#pragma once

#include <Eigen/Dense>

// Linearized quadrature transfer through one phase-matched crystal pass.
namespace shg {

// Real 4x4 map acting on (x1, x2, y1, y2)^T quadrature fluctuation vectors.
// Block-diagonal: amplitude and phase quadratures do not mix at zero phase
// mismatch. The blocks satisfy nx() * ny()^T = I (commutator preservation).
struct QuadTransfer {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();

  Eigen::Matrix2d nx() const { return m.topLeftCorner<2, 2>(); }
  Eigen::Matrix2d ny() const { return m.bottomRightCorner<2, 2>(); }
};

// Transfer matrix for normalized interaction length zeta >= 0, with no
// harmonic seed at the crystal entrance. Closed hyperbolic forms.
// Throws std::invalid_argument for negative or non-finite zeta.
QuadTransfer transfer_matrix(double zeta);

}  // namespace shg
