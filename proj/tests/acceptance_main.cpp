// End-to-end acceptance checks. Prints one PASS/FAIL line per check with the
// measured value and the required window; exits nonzero if any check fails.
// An optional argument (1..8) selects a single criterion group.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "shg/cavity_network.hpp"
#include "shg/constants.hpp"
#include "shg/coupling.hpp"
#include "shg/entanglement.hpp"
#include "shg/sweep.hpp"

using namespace shg;
using shg_test::knbo3_crystal;
using shg_test::reference_cavity;

namespace {

int g_failures = 0;

void check(const char* label, double got, double lo, double hi, const char* unit = "") {
  const bool ok = got >= lo && got <= hi && std::isfinite(got);
  if (!ok) ++g_failures;
  std::printf("%s  %s = %.6g%s, required [%.6g, %.6g]\n", ok ? "PASS" : "FAIL", label, got,
              unit, lo, hi);
}

void check_below(const char* label, double got, double bound) {
  const bool ok = got < bound && std::isfinite(got);
  if (!ok) ++g_failures;
  std::printf("%s  %s = %.6g, required < %.6g\n", ok ? "PASS" : "FAIL", label, got, bound);
}

void check_true(const char* label, bool ok, const std::string& detail = "") {
  if (!ok) ++g_failures;
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", label, detail.empty() ? "" : ": ",
              detail.c_str());
}

double to_db(double s) { return 10.0 * std::log10(s); }

SweepConfig reference_sweep_config() {
  SweepConfig c;
  c.crystal = knbo3_crystal();
  c.cavity = reference_cavity();
  c.p_min = 0.0;
  c.p_max = 1.0;
  c.n_points = 201;
  c.omega = 0.0;
  c.mode = SweepMode::dual_port;
  return c;
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
  const auto r = compute_enl(knbo3_crystal());
  check("criterion 1: E_NL for the KNbO3 doubler at w = 21.1 um", r.enl, 0.015 * 0.95,
        0.015 * 1.05, " 1/W");
}

// ---------------------------------------------------------------- criterion 2
double bk_objective(double dk_lc, double focus) {
  // proportional to E_NL at fixed crystal length
  return focus * std::norm(boyd_kleinman_h(dk_lc, focus));
}

void criterion2() {
  const CrystalSpec crystal = knbo3_crystal();
  const double w_opt = optimal_waist(crystal, true);
  CrystalSpec at_opt = crystal;
  at_opt.w = w_opt;
  const double zr_over_lc = at_opt.rayleigh_length() / at_opt.lc;
  check("criterion 2a: zero-mismatch optimal focusing z_R1/L_c", zr_over_lc, 0.315, 0.335);
  if (zr_over_lc < 0.315 || zr_over_lc > 0.335)
    std::printf(
        "      note: the zero-mismatch optimum solves sin(2t) = t, giving z_R1/L_c = "
        "1/(2 tan t) = 0.35932 for any proportional Rayleigh-length convention; this is "
        "consistent with the w = 21.1 um and E_NL = 0.015 1/W anchors (criteria 1 and 2c), "
        "which exclude 0.325.\n");

  // Brute-force grid search for the global optimum, then two local zooms.
  double best_f = -1.0, best_a = 0.0, best_b = 1.0;
  for (double a = 0.0; a <= 8.0; a += 0.05)
    for (double b = 0.5; b <= 20.0; b += 0.1) {
      const double f = bk_objective(a, b);
      if (f > best_f) {
        best_f = f;
        best_a = a;
        best_b = b;
      }
    }
  double da = 0.05, db = 0.1;
  for (int zoom = 0; zoom < 2; ++zoom) {
    const double a0 = best_a, b0 = best_b;
    for (double a = a0 - da; a <= a0 + da; a += da / 20.0)
      for (double b = std::max(b0 - db, 0.01); b <= b0 + db; b += db / 20.0) {
        const double f = bk_objective(a, b);
        if (f > best_f) {
          best_f = f;
          best_a = a;
          best_b = b;
        }
      }
    da /= 20.0;
    db /= 20.0;
  }
  check("criterion 2b: global optimum mismatch dk*L_c", best_a, 3.26 - 0.05, 3.26 + 0.05);
  check("criterion 2b: global optimum focusing z_R1/L_c", 1.0 / best_b, 0.176 - 0.005,
        0.176 + 0.005);

  const double f_dk0 = bk_objective(0.0, crystal.lc / at_opt.rayleigh_length());
  const double factor = best_f / f_dk0;
  check("criterion 2c: global-to-zero-mismatch E_NL factor", factor, (1.0 / 0.6) * 0.9,
        (1.0 / 0.6) * 1.1);
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
  const auto cav = reference_cavity();
  const auto op = solve_conversion(cav, 0.5);
  const auto r = compute_noise_report(cav, op, 0.0);
  check("criterion 3: S_X1 at P_in = 0.5 W", to_db(r.s_x1), -2.3, -1.7, " dB");
  check("criterion 3: uncertainty product p = S_X1*S_Y1 at 0.5 W", r.s_x1 * r.s_y1, 2.0, 2.4);
}

// ------------------------------------------------------- criteria 4, 5 and 7
struct SweepSummary {
  std::vector<SweepRow> rows;
  double min_var_sum = 1e9;
  double min_v_epr = 1e9;
  double max_zeta = 0.0;
  double max_depletion = 0.0;
  bool dgcz_below_one = true;
  bool dgcz_below_epr = true;
  bool all_ok = true;
};

SweepSummary summarize_reference_sweep() {
  SweepSummary s;
  s.rows = run_sweep(reference_sweep_config());
  for (const auto& r : s.rows) {
    if (r.status != "ok") {
      s.all_ok = false;
      continue;
    }
    if (r.p_in <= 0.0) continue;
    s.min_var_sum = std::min(s.min_var_sum, r.var_sum);
    s.min_v_epr = std::min(s.min_v_epr, r.v_epr);
    s.max_zeta = std::max({s.max_zeta, r.zeta1, r.zeta2});
    s.max_depletion = std::max(s.max_depletion, r.zeta1 * r.zeta1);  // n1 = n2
    s.dgcz_below_one = s.dgcz_below_one && r.v_dgcz < 1.0;
    s.dgcz_below_epr = s.dgcz_below_epr && r.v_dgcz < r.v_epr;
  }
  return s;
}

void criterion4() {
  const auto s = summarize_reference_sweep();
  check_true("criterion 4: every sweep point solved", s.all_ok);
  check("criterion 4: minimum intensity-sum variance over the sweep", to_db(s.min_var_sum),
        -7.0, -5.0, " dB");
  const auto cav = reference_cavity();
  const auto op = solve_conversion(cav, 0.5);
  const auto tb = twin_beam(compute_noise_report(cav, op, 0.0), intensity_ratio(op));
  check("criterion 4: sum-branch gain at 0.5 W", tb.g_opt_minus, -1.1, -0.9);
}

double v_epr_at(double p_in) {
  const auto cav = reference_cavity();
  const auto op = solve_conversion(cav, p_in);
  return epr_dgcz(compute_noise_report(cav, op, 0.0)).v_epr;
}

void criterion5() {
  const auto cav = reference_cavity();
  const auto op = solve_conversion(cav, 0.5);
  const auto e = epr_dgcz(compute_noise_report(cav, op, 0.0));
  check("criterion 5: V_EPR at P_in = 0.5 W", e.v_epr, 0.65, 0.75);

  const auto s = summarize_reference_sweep();
  check("criterion 5: minimum V_EPR over the sweep", s.min_v_epr, 0.55, 0.65);

  // Locate the V_EPR = 1 crossing by scan plus bisection.
  double lo = 1e-3, hi = 0.06;
  for (double p = lo; p <= hi; p += 5e-4) {
    if (v_epr_at(p) < 1.0) {
      hi = p;
      lo = p - 5e-4;
      break;
    }
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (v_epr_at(mid) >= 1.0 ? lo : hi) = mid;
  }
  check("criterion 5: V_EPR = 1 crossing power", 0.5 * (lo + hi), 0.020, 0.040, " W");
  check_true("criterion 5: V_DGCZ < 1 for every P_in > 0", s.dgcz_below_one);
  check_true("criterion 5: V_DGCZ < V_EPR throughout the sweep", s.dgcz_below_epr);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
  const double v_bs = beamsplitter_epr_equal_sources(std::pow(10.0, -0.2), 2.2);
  check("criterion 6: beamsplitter V_EPR for equal sources, S_X = -2 dB, p = 2.2", v_bs,
        1.05, 1.15);

  CavitySpec ring = reference_cavity();
  ring.enl2 = 0.0;
  const auto op_ring = solve_conversion(ring, 0.5);
  const auto r_ring = compute_noise_report(ring, op_ring, 0.0);
  check("criterion 6: ring-mode amplitude squeezing at P_in/2 = 0.5 W", to_db(r_ring.s_x1),
        -7.0, -5.0, " dB");

  // Ordering of the three entanglement strategies at 1 W total pump.
  const auto cav = reference_cavity();
  const double v_dual = v_epr_at(1.0);
  const auto op_half = solve_conversion(cav, 0.5);
  const auto r_half = compute_noise_report(cav, op_half, 0.0);
  const double v_linear_mix =
      beamsplitter_mix({r_half.s_x1, r_half.s_y1}, {r_half.s_x1, r_half.s_y1}).ent.v_epr;
  const double v_ring_mix =
      beamsplitter_mix({r_ring.s_x1, r_ring.s_y1}, {r_ring.s_x1, r_ring.s_y1}).ent.v_epr;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "linear-mix %.4g > dual-port %.4g > ring-mix %.4g",
                v_linear_mix, v_dual, v_ring_mix);
  check_true("criterion 6: strategy ordering at 1 W total",
             v_linear_mix > v_dual && v_dual > v_ring_mix, detail);
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
  const auto s = summarize_reference_sweep();
  check_below("criterion 7: max interaction length over the sweep", s.max_zeta, 0.25);
  check_below("criterion 7: max single-pass depletion over the sweep", s.max_depletion, 0.05);
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
  // Identity and block pairing of the crystal transfer matrix.
  double worst_pair = 0.0;
  for (int i = 0; i <= 80; ++i) {
    const auto n = transfer_matrix(2.0 * i / 80.0);
    worst_pair = std::max(worst_pair, (n.nx() * n.ny().transpose() -
                                       Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
  }
  check_true("criterion 8: N(0) is the identity",
             transfer_matrix(0.0).m == Eigen::Matrix4d::Identity());
  check_below("criterion 8: block pairing defect on zeta in [0, 2]", worst_pair, 1e-12);

  // Linear cavity spectra.
  const auto cav = reference_cavity();
  const auto lin = noise_report(output_coefficients(0.0, 0.0, 0.0, cav), 0.0);
  const double lin_defect =
      std::max({std::abs(lin.s_x1 - 1.0), std::abs(lin.s_y1 - 1.0), std::abs(lin.s_x2 - 1.0),
                std::abs(lin.s_y2 - 1.0), std::abs(lin.c_x), std::abs(lin.c_y)});
  check_below("criterion 8: linear-cavity spectra deviation from shot noise", lin_defect,
              1e-12);

  // General network solve against the closed-form coefficients.
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> zeta_d(0.0, 0.6);
  std::uniform_real_distribution<double> t_d(0.001, 0.3);
  std::uniform_real_distribution<double> l_d(0.0, 0.08);
  std::uniform_real_distribution<double> ph_d(-3.14159265358979, 3.14159265358979);
  double worst_path = 0.0;
  for (int k = 0; k < 120; ++k) {
    CavitySpec c = cav;
    c.t11 = t_d(rng);
    c.l13 = l_d(rng);
    c.l14 = l_d(rng);
    const double z1 = zeta_d(rng), z2 = zeta_d(rng);
    const auto m = NetworkMatrices::build(c, 0.0);
    const double omega = ph_d(rng) * m.nu_c1;
    const auto mm = NetworkMatrices::build(c, omega);
    const auto n1 = transfer_matrix(z1);
    const auto n2 = transfer_matrix(z2);
    const auto gen =
        noise_report(output_quadratures(solve_intracavity(mm, n1, n2), mm, n1, n2), omega);
    const auto cf = noise_report(output_coefficients(z1, z2, omega, c), omega);
    worst_path = std::max(
        worst_path,
        std::max({std::abs(gen.s_x1 - cf.s_x1), std::abs(gen.s_y1 - cf.s_y1),
                  std::abs(gen.s_x2 - cf.s_x2), std::abs(gen.s_y2 - cf.s_y2),
                  std::abs(gen.c_x - cf.c_x), std::abs(gen.c_y - cf.c_y)}));
  }
  check_below("criterion 8: general-path vs coefficient-path spectra (120 draws)",
              worst_path, 1e-10);

  // Closed forms against direct integration of the linearized equations.
  double worst_ode = 0.0;
  for (double z : {0.25, 0.5, 1.0, 2.0}) {
    const auto ode = shg_test::integrate_linearized(z, 1 << 14);
    const auto n = transfer_matrix(z);
    worst_ode = std::max(worst_ode, std::max((n.nx() - ode.phi_x).cwiseAbs().maxCoeff(),
                                             (n.ny() - ode.phi_y).cwiseAbs().maxCoeff()));
  }
  check_below("criterion 8: transfer matrix vs linearized-propagation integration",
              worst_ode, 1e-8);

  // Single-crystal limit of the power balance against bisection.
  CavitySpec ring = cav;
  ring.enl2 = 0.0;
  ring.l14 = 0.0;
  double worst_ring = 0.0;
  for (double p : {1e-3, 0.1, 0.5, 2.0}) {
    const auto op = solve_conversion(ring, p);
    worst_ring = std::max(worst_ring, std::abs(op.eps1 - shg_test::single_crystal_eps1(
                                                             ring.t11, ring.l13, ring.enl1, p)));
  }
  check_below("criterion 8: single-crystal power balance vs bisection", worst_ring, 1e-10);

  // Photon-flux conservation of the propagation equations.
  const auto op = solve_conversion(cav, 2.0);
  const double p_c = std::sqrt(op.eps1 * op.p_in / cav.enl1);
  const double om1 = 2.0 * constants::pi * constants::c0 / 860e-9;
  const auto pass = shg_test::propagate_mean_field(p_c, cav.enl1, om1, 4000);
  const double drift =
      std::abs(std::norm(pass.a1) + 2.0 * std::norm(pass.a2) - pass.flux_in) / pass.flux_in;
  check_below("criterion 8: propagation conserves |A1|^2 + 2|A2|^2 (relative)", drift, 1e-10);
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  auto want = [only](int k) { return only == 0 || only == k; };

  if (want(1)) criterion1();
  if (want(2)) criterion2();
  if (want(3)) criterion3();
  if (want(4)) criterion4();
  if (want(5)) criterion5();
  if (want(6)) criterion6();
  if (want(7)) criterion7();
  if (want(8)) criterion8();

  if (g_failures == 0) {
    std::printf("all acceptance checks passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) failed\n", g_failures);
  return 1;
}
