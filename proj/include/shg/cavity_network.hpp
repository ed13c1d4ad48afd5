#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "shg/mean_field.hpp"
#include "shg/transfer_matrix.hpp"

// Full dual-ported resonator in the frequency domain: mirror, loss and
// round-trip phase matrices, the self-consistent intracavity fluctuation
// solve, the output quadrature maps, and the squeezing spectra.
//
// Two routes to the spectra are kept side by side on purpose:
//   * the general network solve (any mirror/loss configuration), and
//   * closed-form output coefficients for the restricted configuration
//     (T21 = T22 = 1, L23 = L24 = 0, T12 = 0).
// They must agree wherever both apply; the tests enforce that.
namespace shg {

using Cplx = std::complex<double>;
using Matrix4cd = Eigen::Matrix4cd;

// Diagonal splitter/phase matrices for one sideband frequency. Diagonals are
// ordered like the quadrature vector (x1, x2, y1, y2), so entries pair up as
// (fundamental, harmonic, fundamental, harmonic).
struct NetworkMatrices {
  Eigen::Vector4d t1, r1;      // input coupler (mirror 1)
  Eigen::Vector4d t2, r2;      // mirror 2
  Eigen::Vector4d tl3, rl3;    // loss beamsplitter at position 3
  Eigen::Vector4d tl4, rl4;    // loss beamsplitter at position 4
  Eigen::Vector4cd d;          // round-trip phase exp(i*omega/nu_ci)
  double nu_c1 = 0.0;          // free spectral range, fundamental [Hz]
  double nu_c2 = 0.0;          // free spectral range, harmonic [Hz]
  double omega = 0.0;          // sideband angular frequency [rad/s]

  static NetworkMatrices build(const CavitySpec& cavity, double omega);
};

// Linear map from the four vacuum input ports (mirror 1, mirror 2, loss 3,
// loss 4; a 4-vector of quadratures each) to a quadrature 4-vector.
struct PortMaps {
  std::array<Matrix4cd, 4> port;
};

// Intracavity fluctuation solution just after the input coupler, as a linear
// map from the noise ports, plus the conditioning of the resolvent.
struct IntracavitySolution {
  PortMaps x1;
  double condition = 1.0;  // 1-norm condition estimate of I - M_loop
};

// Output quadrature maps at the two harmonic output ports.
struct OutputMaps {
  PortMaps out1;  // exits through mirror 2 (first crystal pass)
  PortMaps out2;  // exits through mirror 1 (second crystal pass)
};

// Closed-form coefficients multiplying the five contributing vacuum inputs
// (u11, u13, u14, u21, u22) and their phase-quadrature counterparts, valid in
// the restricted configuration. Index order matches the list above.
struct OutputCoefficients {
  std::array<Cplx, 5> f;  // X at output 1
  std::array<Cplx, 5> g;  // Y at output 1
  std::array<Cplx, 5> h;  // X at output 2
  std::array<Cplx, 5> j;  // Y at output 2
  Cplx denom_f;           // shared amplitude-quadrature denominator
  Cplx denom_g;           // shared phase-quadrature denominator
};

// Shot-noise-normalized spectra and cross-correlations at one operating point.
struct NoiseReport {
  double s_x1 = 1.0;
  double s_y1 = 1.0;
  double s_x2 = 1.0;
  double s_y2 = 1.0;
  double c_x = 0.0;
  double c_y = 0.0;
  double omega = 0.0;
  OperatingPoint op;
};

// Resolvent solve of the round-trip self-consistency. Throws
// std::runtime_error with the condition estimate when the cavity is at a
// degeneracy (singular resolvent).
IntracavitySolution solve_intracavity(const NetworkMatrices& m, const QuadTransfer& n1,
                                      const QuadTransfer& n2);

OutputMaps output_quadratures(const IntracavitySolution& x1, const NetworkMatrices& m,
                              const QuadTransfer& n1, const QuadTransfer& n2);

// Spectra from the general output maps; all sixteen vacuum components carry
// unit white noise.
NoiseReport noise_report(const OutputMaps& maps, double omega);

// Closed-form coefficients; requires cavity.restricted(). Throws
// std::invalid_argument directing callers to the general path otherwise.
OutputCoefficients output_coefficients(double zeta1, double zeta2, double omega,
                                       const CavitySpec& cavity);

NoiseReport noise_report(const OutputCoefficients& coeffs, double omega = 0.0);

// Convenience: operating point -> NoiseReport. Uses the closed-form
// coefficients when the restriction set holds, the general solve otherwise.
NoiseReport compute_noise_report(const CavitySpec& cavity, const OperatingPoint& op,
                                 double omega);

}  // namespace shg
