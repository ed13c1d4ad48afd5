#pragma once

// Classical steady state of the dual-ported resonator: intracavity power
// self-consistency, conversion efficiencies and normalized interaction
// lengths as functions of the external pump power.
namespace shg {

// Resonator description. Transmittances T_ij and loss coefficients L_ij are
// power quantities for frequency i (1 = fundamental, 2 = harmonic) at mirror
// or loss position j. enl1/enl2 are the single-pass conversion coefficients
// of the forward and backward crystal passes [1/W]. n1, n2 and lc are carried
// here because the interaction lengths and the free spectral ranges need them.
struct CavitySpec {
  double t11 = 0.01;
  double t12 = 0.0;
  double t21 = 1.0;
  double t22 = 1.0;
  double l13 = 0.005;
  double l14 = 0.005;
  double l23 = 0.0;
  double l24 = 0.0;
  double la = 0.1;      // one-way air path [m]
  double enl1 = 0.015;  // [1/W]
  double enl2 = 0.015;  // [1/W]
  double n1 = 2.2;
  double n2 = 2.2;
  double lc = 0.01;  // crystal length [m]

  void validate() const;

  // True when the closed-form output coefficients apply:
  // T21 = T22 = 1, L23 = L24 = 0, T12 = 0.
  bool restricted() const;
};

// Steady-state operating point at one pump power.
struct OperatingPoint {
  double p_in = 0.0;       // external pump power [W]
  double eps1 = 0.0;       // P21 / P_in
  double eps2 = 0.0;       // P22 / P_in
  double zeta1 = 0.0;      // forward-pass interaction length
  double zeta2 = 0.0;      // backward-pass interaction length
  double depletion = 0.0;  // single-pass fractional pump depletion
};

// Solves the power self-consistency for sqrt(eps1) (damped fixed-point
// iteration with a bisection fallback) and derives eps2, zeta1, zeta2.
// The returned branch is continuous in p_in with eps1(0) = 0.
// Throws std::runtime_error when no converged physical root exists.
OperatingPoint solve_conversion(const CavitySpec& cavity, double p_in);

// eps1/eps2. Throws std::domain_error when eps2 = 0 (ratio undefined).
double intensity_ratio(const OperatingPoint& op);

}  // namespace shg
