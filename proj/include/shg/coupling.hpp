#pragma once

#include <complex>

// Gaussian-beam focusing factor, single-pass conversion coefficient E_NL and
// the scaled-field coupling constant for second harmonic generation.
namespace shg {

// Material and geometry of the nonlinear crystal. SI units throughout.
struct CrystalSpec {
  double d;        // effective second-order susceptibility [m/V]
  double n1;       // refractive index at the fundamental
  double n2;       // refractive index at the harmonic
  double lc;       // crystal length [m]
  double lambda1;  // fundamental vacuum wavelength [m]
  double dk;       // phase mismatch 2 k1 - k2 [1/m]
  double w;        // fundamental waist (1/e^2 intensity radius) [m]

  // Rayleigh length of the fundamental beam inside the crystal [m].
  double rayleigh_length() const;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct CouplingResult {
  std::complex<double> h;  // focusing integral, dimensionless
  double enl;              // single-pass conversion coefficient [1/W]
  double kappa_mag;        // |kappa| for the scaled field equations [s^-1/2]
  double phi_h;            // arg(h) [rad]
};

// Focusing integral over the crystal, h(dk*Lc, Lc/zR1). Evaluated by adaptive
// quadrature to 1e-10 relative tolerance. Real and positive at zero mismatch.
std::complex<double> boyd_kleinman_h(double dk_lc, double focus);

CouplingResult compute_enl(const CrystalSpec& spec);

// Waist maximizing E_NL, golden-section search on log(w) over [1 um, 1 mm].
// With fix_dk_zero the scan is done at zero phase mismatch regardless of
// spec.dk. Throws std::runtime_error if the search fails to converge.
double optimal_waist(const CrystalSpec& spec, bool fix_dk_zero = true);

}  // namespace shg
