#include "shg/entanglement.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shg {

double twin_beam_variance_at(const NoiseReport& r, double intensity_ratio, double g) {
  if (!(intensity_ratio > 0.0))
    throw std::invalid_argument("twin_beam_variance_at: intensity ratio must be positive");
  if (std::isinf(intensity_ratio)) return r.s_x1;
  // Variance normalized by the shot noise of the same detected intensities,
  // written with the intensity ratio q = I1/I2.
  const double q = intensity_ratio;
  const double den = q + g * g;
  return (q * r.s_x1 + g * g * r.s_x2 - g * std::sqrt(q) * r.c_x) / den;
}

TwinBeamResult twin_beam(const NoiseReport& r, double intensity_ratio) {
  if (!(intensity_ratio > 0.0))
    throw std::invalid_argument("twin_beam: intensity ratio must be positive");

  const double ds = r.s_x1 - r.s_x2;
  const double root = std::sqrt(ds * ds + r.c_x * r.c_x);

  TwinBeamResult out;
  if (std::isinf(intensity_ratio)) {
    // Single-beam limit: the gain is irrelevant and the detected variance is
    // the first output's spectrum for the sum branch, shot noise for the rest
    // of the closed form.
    out.g_opt_plus = std::numeric_limits<double>::quiet_NaN();
    out.g_opt_minus = std::numeric_limits<double>::quiet_NaN();
    out.var_sum = 0.5 * (r.s_x1 + r.s_x2 - root);
    out.var_diff = 0.5 * (r.s_x1 + r.s_x2 + root);
    return out;
  }

  const double sq = std::sqrt(intensity_ratio);
  if (r.c_x == 0.0) {
    out.g_opt_plus = sq;
    out.g_opt_minus = -sq;
  } else {
    // The two stationary gains; their product is -I1/I2, so exactly one is
    // negative. Label by sign rather than by the quadratic branch.
    const double ga = sq * (ds + root) / r.c_x;
    const double gb = sq * (ds - root) / r.c_x;
    out.g_opt_plus = std::max(ga, gb);
    out.g_opt_minus = std::min(ga, gb);
  }
  out.var_sum = twin_beam_variance_at(r, intensity_ratio, out.g_opt_minus);
  out.var_diff = twin_beam_variance_at(r, intensity_ratio, out.g_opt_plus);
  return out;
}

EntanglementResult epr_dgcz(const NoiseReport& r) {
  if (!(r.s_x2 > 0.0) || !(r.s_y2 > 0.0))
    throw std::invalid_argument("epr_dgcz: inferring port must have positive spectra");

  EntanglementResult e;
  e.g_x = r.c_x / (2.0 * r.s_x2);
  e.g_y = r.c_y / (2.0 * r.s_y2);
  e.v_epr = (r.s_x1 * r.s_x2 - 0.25 * r.c_x * r.c_x) *
            (r.s_y1 * r.s_y2 - 0.25 * r.c_y * r.c_y) / (r.s_x2 * r.s_y2);
  e.v_dgcz = 0.25 * (r.s_x1 + r.s_x2 + r.c_x + r.s_y1 + r.s_y2 - r.c_y);
  return e;
}

double dgcz_sum_variance(const NoiseReport& r, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("dgcz_sum_variance: a must be positive");
  const double a2 = a * a;
  return (a2 * (r.s_x1 + r.s_y1) + (r.s_x2 + r.s_y2) / a2 + r.c_x - r.c_y) /
         (2.0 * (a2 + 1.0 / a2));
}

BeamsplitterResult beamsplitter_mix(const PortSpectra& source1, const PortSpectra& source2) {
  if (!(source1.s_x > 0.0) || !(source1.s_y > 0.0) || !(source2.s_x > 0.0) ||
      !(source2.s_y > 0.0))
    throw std::invalid_argument("beamsplitter_mix: spectra must be positive");

  BeamsplitterResult b;
  b.s_xa = 0.5 * (source1.s_x + source2.s_y);
  b.s_ya = 0.5 * (source1.s_y + source2.s_x);
  b.c_xab = source1.s_x - source2.s_y;
  b.c_yab = source1.s_y - source2.s_x;

  b.ent.g_x = b.c_xab / (2.0 * b.s_xa);
  b.ent.g_y = b.c_yab / (2.0 * b.s_ya);
  b.ent.v_epr = (b.s_xa * b.s_xa - 0.25 * b.c_xab * b.c_xab) *
                (b.s_ya * b.s_ya - 0.25 * b.c_yab * b.c_yab) / (b.s_xa * b.s_ya);
  b.ent.v_dgcz = 0.5 * (source1.s_x + source2.s_x);
  return b;
}

double beamsplitter_epr_equal_sources(double s_x, double p) {
  if (!(s_x > 0.0) || !(p > 0.0))
    throw std::invalid_argument("beamsplitter_epr_equal_sources: s_x and p must be positive");
  const double num = 2.0 * s_x * p;
  const double den = s_x * s_x + p;
  return (num / den) * (num / den);
}

}  // namespace shg
