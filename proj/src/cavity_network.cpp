#include "shg/cavity_network.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "shg/constants.hpp"

namespace shg {

namespace {

Eigen::Vector4d splitter_diag(double amp_fund, double amp_harm) {
  return Eigen::Vector4d(amp_fund, amp_harm, amp_fund, amp_harm);
}

Matrix4cd dense_diag(const Eigen::Vector4d& v) {
  Matrix4cd m = Matrix4cd::Zero();
  m.diagonal() = v.cast<Cplx>();
  return m;
}

Matrix4cd dense_diag(const Eigen::Vector4cd& v) {
  Matrix4cd m = Matrix4cd::Zero();
  m.diagonal() = v;
  return m;
}

// Row 1 of a port map is the harmonic amplitude quadrature, row 3 the
// harmonic phase quadrature.
double spectrum(const PortMaps& maps, int row) {
  double s = 0.0;
  for (const auto& m : maps.port) s += m.row(row).squaredNorm();
  return s;
}

double correlation(const PortMaps& a, const PortMaps& b, int row) {
  double c = 0.0;
  for (int p = 0; p < 4; ++p)
    c += 2.0 * a.port[p].row(row).cwiseProduct(b.port[p].row(row).conjugate()).sum().real();
  return c;
}

}  // namespace

NetworkMatrices NetworkMatrices::build(const CavitySpec& cavity, double omega) {
  cavity.validate();
  if (!std::isfinite(omega))
    throw std::invalid_argument("NetworkMatrices: omega must be finite");

  NetworkMatrices m;
  m.t1 = splitter_diag(std::sqrt(cavity.t11), std::sqrt(cavity.t21));
  m.r1 = splitter_diag(std::sqrt(1.0 - cavity.t11), std::sqrt(1.0 - cavity.t21));
  m.t2 = splitter_diag(std::sqrt(cavity.t12), std::sqrt(cavity.t22));
  m.r2 = splitter_diag(std::sqrt(1.0 - cavity.t12), std::sqrt(1.0 - cavity.t22));
  m.tl3 = splitter_diag(std::sqrt(1.0 - cavity.l13), std::sqrt(1.0 - cavity.l23));
  m.rl3 = splitter_diag(std::sqrt(cavity.l13), std::sqrt(cavity.l23));
  m.tl4 = splitter_diag(std::sqrt(1.0 - cavity.l14), std::sqrt(1.0 - cavity.l24));
  m.rl4 = splitter_diag(std::sqrt(cavity.l14), std::sqrt(cavity.l24));

  m.nu_c1 = constants::c0 / (2.0 * cavity.n1 * cavity.lc + 2.0 * cavity.la);
  m.nu_c2 = constants::c0 / (2.0 * cavity.n2 * cavity.lc + 2.0 * cavity.la);
  m.omega = omega;
  const Cplx d1 = std::exp(Cplx(0.0, omega / m.nu_c1));
  const Cplx d2 = std::exp(Cplx(0.0, omega / m.nu_c2));
  m.d << d1, d2, d1, d2;
  return m;
}

IntracavitySolution solve_intracavity(const NetworkMatrices& m, const QuadTransfer& n1,
                                      const QuadTransfer& n2) {
  const Matrix4cd N1 = n1.m.cast<Cplx>();
  const Matrix4cd N2 = n2.m.cast<Cplx>();
  const Matrix4cd D = dense_diag(m.d);
  const Matrix4cd T1 = dense_diag(m.t1), R1 = dense_diag(m.r1);
  const Matrix4cd T2 = dense_diag(m.t2), R2 = dense_diag(m.r2);
  const Matrix4cd TL3 = dense_diag(m.tl3), RL3 = dense_diag(m.rl3);
  const Matrix4cd TL4 = dense_diag(m.tl4), RL4 = dense_diag(m.rl4);

  // Round trip seen from just after the input coupler: crystal 1, loss 3,
  // mirror 2, crystal 2, loss 4, mirror 1, then the lumped phase.
  const Matrix4cd loop = D * R1 * TL4 * N2 * R2 * TL3 * N1;
  const Matrix4cd A = Matrix4cd::Identity() - loop;

  Eigen::PartialPivLU<Matrix4cd> lu(A);
  const double rcond = lu.rcond();
  IntracavitySolution sol;
  sol.condition = (rcond > 0.0) ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(rcond > 1e-13))
    throw std::runtime_error("solve_intracavity: resolvent singular, condition estimate " +
                             std::to_string(sol.condition));

  sol.x1.port[0] = lu.solve(D * T1);
  sol.x1.port[1] = lu.solve(D * (R1 * TL4 * N2 * T2));
  sol.x1.port[2] = lu.solve(D * (-(R1 * TL4 * N2 * R2 * RL3)));
  sol.x1.port[3] = lu.solve(D * (-(R1 * RL4)));
  return sol;
}

OutputMaps output_quadratures(const IntracavitySolution& sol, const NetworkMatrices& m,
                              const QuadTransfer& n1, const QuadTransfer& n2) {
  const Matrix4cd N1 = n1.m.cast<Cplx>();
  const Matrix4cd N2 = n2.m.cast<Cplx>();
  const Matrix4cd T1 = dense_diag(m.t1), R1 = dense_diag(m.r1);
  const Matrix4cd T2 = dense_diag(m.t2), R2 = dense_diag(m.r2);
  const Matrix4cd TL3 = dense_diag(m.tl3), RL3 = dense_diag(m.rl3);
  const Matrix4cd TL4 = dense_diag(m.tl4), RL4 = dense_diag(m.rl4);

  OutputMaps out;
  const Matrix4cd to_out1 = T2 * TL3 * N1;
  for (int p = 0; p < 4; ++p) out.out1.port[p] = to_out1 * sol.x1.port[p];
  out.out1.port[1] -= R2;
  out.out1.port[2] -= T2 * RL3;

  const Matrix4cd pre2 = T1 * TL4 * N2;
  const Matrix4cd to_out2 = pre2 * R2 * TL3 * N1;
  for (int p = 0; p < 4; ++p) out.out2.port[p] = to_out2 * sol.x1.port[p];
  out.out2.port[0] -= R1;
  out.out2.port[1] += pre2 * T2;
  out.out2.port[2] -= pre2 * R2 * RL3;
  out.out2.port[3] -= T1 * RL4;
  return out;
}

NoiseReport noise_report(const OutputMaps& maps, double omega) {
  NoiseReport r;
  r.omega = omega;
  r.s_x1 = spectrum(maps.out1, 1);
  r.s_y1 = spectrum(maps.out1, 3);
  r.s_x2 = spectrum(maps.out2, 1);
  r.s_y2 = spectrum(maps.out2, 3);
  r.c_x = correlation(maps.out1, maps.out2, 1);
  r.c_y = correlation(maps.out1, maps.out2, 3);
  return r;
}

OutputCoefficients output_coefficients(double zeta1, double zeta2, double omega,
                                       const CavitySpec& cavity) {
  cavity.validate();
  if (!cavity.restricted())
    throw std::invalid_argument(
        "output_coefficients: requires T21 = T22 = 1, L23 = L24 = 0, T12 = 0; "
        "use the general network solve for other configurations");

  const Eigen::Matrix4d A = transfer_matrix(zeta1).m;
  const Eigen::Matrix4d B = transfer_matrix(zeta2).m;
  const double nu_c1 = constants::c0 / (2.0 * cavity.n1 * cavity.lc + 2.0 * cavity.la);
  const Cplx d1 = std::exp(Cplx(0.0, omega / nu_c1));

  const double st = std::sqrt(cavity.t11);
  const double r1 = std::sqrt(1.0 - cavity.t11);
  const double s3 = std::sqrt(1.0 - cavity.l13);
  const double s4 = std::sqrt(1.0 - cavity.l14);
  const double q3 = std::sqrt(cavity.l13);
  const double q4 = std::sqrt(cavity.l14);

  OutputCoefficients c;
  c.denom_f = 1.0 - d1 * r1 * s3 * s4 * A(0, 0) * B(0, 0);
  c.denom_g = 1.0 - d1 * r1 * s3 * s4 * A(2, 2) * B(2, 2);
  if (std::abs(c.denom_f) < 1e-13 || std::abs(c.denom_g) < 1e-13)
    throw std::runtime_error("output_coefficients: resonant denominator vanishes (|F| = " +
                             std::to_string(std::abs(c.denom_f)) + ", |G| = " +
                             std::to_string(std::abs(c.denom_g)) + ")");

  const double det_x1 = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
  const double det_x2 = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0);
  const double det_y1 = A(2, 2) * A(3, 3) - A(2, 3) * A(3, 2);
  const double det_y2 = B(2, 2) * B(3, 3) - B(2, 3) * B(3, 2);

  c.f = {d1 * st * A(1, 0),
         -d1 * r1 * q3 * s4 * A(1, 0) * B(0, 0),
         -d1 * r1 * q4 * A(1, 0),
         A(1, 1) - d1 * r1 * s3 * s4 * B(0, 0) * det_x1,
         d1 * r1 * s4 * A(1, 0) * B(0, 1)};
  c.g = {d1 * st * A(3, 2),
         -d1 * r1 * q3 * s4 * A(3, 2) * B(2, 2),
         -d1 * r1 * q4 * A(3, 2),
         A(3, 3) - d1 * r1 * s3 * s4 * B(2, 2) * det_y1,
         d1 * r1 * s4 * A(3, 2) * B(2, 3)};
  c.h = {d1 * st * s3 * A(0, 0) * B(1, 0),
         -q3 * B(1, 0),
         -d1 * r1 * s3 * q4 * A(0, 0) * B(1, 0),
         s3 * A(0, 1) * B(1, 0),
         B(1, 1) - d1 * r1 * s3 * s4 * A(0, 0) * det_x2};
  // The loss entering between the crystal passes couples into both outputs
  // with the same position-3 amplitude sqrt(L13); j mirrors h here.
  c.j = {d1 * st * s3 * A(2, 2) * B(3, 2),
         -q3 * B(3, 2),
         -d1 * r1 * s3 * q4 * A(2, 2) * B(3, 2),
         s3 * A(2, 3) * B(3, 2),
         B(3, 3) - d1 * r1 * s3 * s4 * A(2, 2) * det_y2};

  for (auto& v : c.f) v /= c.denom_f;
  for (auto& v : c.g) v /= c.denom_g;
  for (auto& v : c.h) v /= c.denom_f;
  for (auto& v : c.j) v /= c.denom_g;
  return c;
}

NoiseReport noise_report(const OutputCoefficients& coeffs, double omega) {
  auto sum_sq = [](const std::array<Cplx, 5>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s;
  };
  auto corr = [](const std::array<Cplx, 5>& a, const std::array<Cplx, 5>& b) {
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += 2.0 * (a[i] * std::conj(b[i])).real();
    return s;
  };

  NoiseReport r;
  r.omega = omega;
  r.s_x1 = sum_sq(coeffs.f);
  r.s_y1 = sum_sq(coeffs.g);
  r.s_x2 = sum_sq(coeffs.h);
  r.s_y2 = sum_sq(coeffs.j);
  r.c_x = corr(coeffs.f, coeffs.h);
  r.c_y = corr(coeffs.g, coeffs.j);
  return r;
}

NoiseReport compute_noise_report(const CavitySpec& cavity, const OperatingPoint& op,
                                 double omega) {
  NoiseReport r;
  if (cavity.restricted()) {
    r = noise_report(output_coefficients(op.zeta1, op.zeta2, omega, cavity), omega);
  } else {
    const auto m = NetworkMatrices::build(cavity, omega);
    const auto n1 = transfer_matrix(op.zeta1);
    const auto n2 = transfer_matrix(op.zeta2);
    r = noise_report(output_quadratures(solve_intracavity(m, n1, n2), m, n1, n2), omega);
  }
  r.op = op;
  return r;
}

}  // namespace shg
