#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

// Adaptive Gauss-Kronrod (G7,K15) quadrature for smooth complex integrands
// on a finite interval. Bisects intervals until the local error estimate
// satisfies the requested tolerance.
namespace shg::quad {

struct Result {
  std::complex<double> value;
  double error = 0.0;  // accumulated local error estimates
  int evaluations = 0;
};

namespace detail {
// Kronrod-15 abscissae (positive half) with Kronrod and embedded Gauss-7 weights.
inline constexpr double kNodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kWeightK[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kWeightG[8] = {
    0.417959183673469, 0.0, 0.381830050505119, 0.0,
    0.279705391489277, 0.0, 0.129484966168870, 0.0};

template <class F>
std::complex<double> gk15(F&& f, double a, double b, double& err, int& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::complex<double> f0 = f(mid);
  std::complex<double> k = kWeightK[0] * f0;
  std::complex<double> g = kWeightG[0] * f0;
  ++evals;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i];
    const std::complex<double> fi = f(mid + dx) + f(mid - dx);
    evals += 2;
    k += kWeightK[i] * fi;
    g += kWeightG[i] * fi;
  }
  k *= half;
  g *= half;
  // QUADPACK-style sharpened estimate; conservative for analytic integrands.
  const double diff = std::abs(k - g);
  err = 200.0 * diff;
  err *= std::sqrt(err);
  if (!std::isfinite(err)) err = diff;
  return k;
}
}  // namespace detail

// Integrates f over [a, b] until every subinterval estimate passes
// err < max(abs_tol, rel_tol*|I_sub|) scaled by interval fraction.
// Throws std::runtime_error if the interval budget is exhausted.
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 1e-14, int max_intervals = 512) {
  Result out;
  if (a == b) return out;

  struct Interval {
    double a, b;
  };
  std::vector<Interval> stack;
  stack.push_back({a, b});
  const double total_len = std::abs(b - a);

  int used = 1;
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();

    double err = 0.0;
    const std::complex<double> s = detail::gk15(f, iv.a, iv.b, err, out.evaluations);
    const double frac = std::abs(iv.b - iv.a) / total_len;
    const double tol = std::max(abs_tol, rel_tol * std::abs(s)) * std::max(frac, 1e-3);
    if (err <= tol || std::abs(iv.b - iv.a) < 1e-14 * total_len) {
      out.value += s;
      out.error += err;
      continue;
    }
    if (used + 2 > max_intervals)
      throw std::runtime_error("quad::integrate: interval budget exhausted");
    const double mid = 0.5 * (iv.a + iv.b);
    stack.push_back({iv.a, mid});
    stack.push_back({mid, iv.b});
    used += 2;
  }
  return out;
}

}  // namespace shg::quad
