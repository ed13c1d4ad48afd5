#pragma once

#include "shg/cavity_network.hpp"

// Twin-beam intensity correlations, EPR inference variances and the DGCZ
// inseparability test, plus the beamsplitter-mixing comparison.
namespace shg {

// Optimal electronic gains and the resulting normalized variances of the
// detected intensity combination. The negative-gain branch measures the
// intensity sum, the positive-gain branch the difference.
struct TwinBeamResult {
  double g_opt_plus = 1.0;
  double g_opt_minus = -1.0;
  double var_diff = 1.0;  // at g_opt_plus
  double var_sum = 1.0;   // at g_opt_minus
};

struct EntanglementResult {
  double g_x = 0.0;
  double g_y = 0.0;
  double v_epr = 1.0;   // product of minimized inference variances; < 1 -> EPR
  double v_dgcz = 1.0;  // normalized inseparability sum; < 1 -> inseparable
};

// Normalized variance of I1 - g*I2 as a function of the electronic gain,
// for intensity ratio I1/I2. With an infinite ratio the second detector sees
// nothing and the variance reduces to s_x1 for every g.
double twin_beam_variance_at(const NoiseReport& r, double intensity_ratio, double g);

// Both stationary gains (one positive, one negative) and their variances.
// Falls back to g = +/- sqrt(I1/I2) when c_x = 0.
TwinBeamResult twin_beam(const NoiseReport& r, double intensity_ratio);

// Inference-variance product with per-quadrature optimal gains, and the
// DGCZ sum with the mixing parameter fixed at 1.
EntanglementResult epr_dgcz(const NoiseReport& r);

// DGCZ sum variance at an arbitrary mixing parameter a > 0; equals
// epr_dgcz().v_dgcz at a = 1. Used to verify that a = 1 is the minimizer.
double dgcz_sum_variance(const NoiseReport& r, double a);

// Single-port squeezing spectra of one source beam.
struct PortSpectra {
  double s_x = 1.0;
  double s_y = 1.0;
};

// Mixed-output spectra and entanglement metrics for two squeezed sources
// combined on a balanced beamsplitter. Outputs a and b have identical
// spectra; c_xab and c_yab are their cross-correlations.
struct BeamsplitterResult {
  double s_xa = 1.0;
  double s_ya = 1.0;
  double c_xab = 0.0;
  double c_yab = 0.0;
  EntanglementResult ent;
};

BeamsplitterResult beamsplitter_mix(const PortSpectra& source1, const PortSpectra& source2);

// Closed form for two equal sources with amplitude spectrum s_x and
// uncertainty product p = s_x * s_y: V_EPR = 4 s_x^2 p^2 / (s_x^2 + p)^2.
double beamsplitter_epr_equal_sources(double s_x, double p);

}  // namespace shg
