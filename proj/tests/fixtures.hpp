#pragma once

// Shared reference parameter sets used across the test suites.
#include "shg/coupling.hpp"
#include "shg/mean_field.hpp"

namespace shg_test {

// KNbO3 doubler: 860 nm fundamental, 1 cm crystal, near-optimal focusing.
inline shg::CrystalSpec knbo3_crystal() {
  return {11e-12, 2.2, 2.2, 0.01, 860e-9, 0.0, 21.1e-6};
}

// Dual-ported resonator with a 1% input coupler and 0.5% loss per position.
inline shg::CavitySpec reference_cavity() {
  shg::CavitySpec c;
  c.t11 = 0.01;
  c.t12 = 0.0;
  c.t21 = 1.0;
  c.t22 = 1.0;
  c.l13 = 0.005;
  c.l14 = 0.005;
  c.l23 = 0.0;
  c.l24 = 0.0;
  c.la = 0.1;
  c.enl1 = 0.015;
  c.enl2 = 0.015;
  c.n1 = 2.2;
  c.n2 = 2.2;
  c.lc = 0.01;
  return c;
}

}  // namespace shg_test
