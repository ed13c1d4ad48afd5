#include "shg/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "shg/cavity_network.hpp"
#include "shg/entanglement.hpp"

namespace shg {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void mark_failed(SweepRow& row, const std::string& reason) {
  row.eps1 = row.eps2 = row.zeta1 = row.zeta2 = kNaN;
  row.s_x1 = row.s_y1 = row.s_x2 = row.s_y2 = kNaN;
  row.c_x = row.c_y = kNaN;
  row.var_sum = row.var_diff = row.g_opt = kNaN;
  row.v_epr = row.v_dgcz = kNaN;
  row.status = reason;
  for (char& c : row.status)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
}

void fill_metrics(SweepRow& row, const NoiseReport& report, double intensity_ratio) {
  row.s_x1 = report.s_x1;
  row.s_y1 = report.s_y1;
  row.s_x2 = report.s_x2;
  row.s_y2 = report.s_y2;
  row.c_x = report.c_x;
  row.c_y = report.c_y;
  const TwinBeamResult tb = twin_beam(report, intensity_ratio);
  row.var_sum = tb.var_sum;
  row.var_diff = tb.var_diff;
  row.g_opt = tb.g_opt_minus;
  const EntanglementResult ent = epr_dgcz(report);
  row.v_epr = ent.v_epr;
  row.v_dgcz = ent.v_dgcz;
}
}  // namespace

SweepMode sweep_mode_from_string(const std::string& s) {
  if (s == "dual_port") return SweepMode::dual_port;
  if (s == "ring") return SweepMode::ring;
  if (s == "bs_dual") return SweepMode::bs_dual;
  if (s == "bs_ring") return SweepMode::bs_ring;
  throw std::invalid_argument("unknown sweep mode '" + s +
                              "' (expected dual_port, ring, bs_dual or bs_ring)");
}

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::dual_port: return "dual_port";
    case SweepMode::ring: return "ring";
    case SweepMode::bs_dual: return "bs_dual";
    case SweepMode::bs_ring: return "bs_ring";
  }
  throw std::invalid_argument("invalid SweepMode value");
}

void SweepConfig::validate() const {
  crystal.validate();
  cavity.validate();
  if (crystal.dk != 0.0)
    throw std::invalid_argument(
        "SweepConfig: nonzero phase mismatch makes the coupling complex and mixes the "
        "quadratures; sweeps require dk = 0");
  if (!(p_min >= 0.0) || !std::isfinite(p_min))
    throw std::invalid_argument("SweepConfig: p_min must be >= 0");
  if (!(p_max >= p_min) || !std::isfinite(p_max))
    throw std::invalid_argument("SweepConfig: p_max must be >= p_min");
  if (n_points < 1) throw std::invalid_argument("SweepConfig: n_points must be >= 1");
  if (n_points >= 2 && !(p_max > p_min))
    throw std::invalid_argument("SweepConfig: p_max must exceed p_min for multi-point grids");
  if (!std::isfinite(omega)) throw std::invalid_argument("SweepConfig: omega must be finite");
}

SweepRow evaluate_point(const SweepConfig& config, double p_in) {
  SweepRow row;
  row.p_in = p_in;
  try {
    CavitySpec cav = config.cavity;
    const bool ring = config.mode == SweepMode::ring || config.mode == SweepMode::bs_ring;
    const bool mixed = config.mode == SweepMode::bs_dual || config.mode == SweepMode::bs_ring;
    if (ring) cav.enl2 = 0.0;

    // Beamsplitter modes split the available pump between two equal sources.
    const double p_source = mixed ? 0.5 * p_in : p_in;
    const OperatingPoint op = solve_conversion(cav, p_source);
    row.eps1 = op.eps1;
    row.eps2 = op.eps2;
    row.zeta1 = op.zeta1;
    row.zeta2 = op.zeta2;

    const NoiseReport report = compute_noise_report(cav, op, config.omega);
    if (!mixed) {
      const double ratio = op.eps2 > 0.0 ? op.eps1 / op.eps2
                           : (op.eps1 > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
      fill_metrics(row, report, ratio);
    } else {
      const BeamsplitterResult mix =
          beamsplitter_mix({report.s_x1, report.s_y1}, {report.s_x1, report.s_y1});
      NoiseReport mixed_pair;
      mixed_pair.omega = config.omega;
      mixed_pair.s_x1 = mixed_pair.s_x2 = mix.s_xa;
      mixed_pair.s_y1 = mixed_pair.s_y2 = mix.s_ya;
      mixed_pair.c_x = mix.c_xab;
      mixed_pair.c_y = mix.c_yab;
      fill_metrics(row, mixed_pair, 1.0);
      row.v_epr = mix.ent.v_epr;
      row.v_dgcz = mix.ent.v_dgcz;
    }
  } catch (const std::exception& e) {
    mark_failed(row, e.what());
  }
  return row;
}

namespace {
std::vector<SweepRow> sweep_impl(const SweepConfig& config, bool parallel) {
  config.validate();
  const int n = config.n_points;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = n == 1 ? config.p_min
                     : config.p_min + (config.p_max - config.p_min) * i / (n - 1);

  std::vector<SweepRow> rows(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) rows[i] = evaluate_point(config, grid[i]);
  } else {
    for (int i = 0; i < n; ++i) rows[i] = evaluate_point(config, grid[i]);
  }
  return rows;
}
}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) { return sweep_impl(config, true); }

std::vector<SweepRow> run_sweep_serial(const SweepConfig& config) {
  return sweep_impl(config, false);
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "p_in,eps1,eps2,zeta1,zeta2,s_x1,s_y1,s_x2,s_y2,c_x,c_y,var_sum,var_diff,g_opt,"
      "v_epr,v_dgcz,status\n";
  char buf[64];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof(buf), "%.12g%c", v, sep);
    out += buf;
  };
  for (const auto& r : rows) {
    put(r.p_in, ',');
    put(r.eps1, ',');
    put(r.eps2, ',');
    put(r.zeta1, ',');
    put(r.zeta2, ',');
    put(r.s_x1, ',');
    put(r.s_y1, ',');
    put(r.s_x2, ',');
    put(r.s_y2, ',');
    put(r.c_x, ',');
    put(r.c_y, ',');
    put(r.var_sum, ',');
    put(r.var_diff, ',');
    put(r.g_opt, ',');
    put(r.v_epr, ',');
    put(r.v_dgcz, ',');
    out += r.status;
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("emit_csv: cannot open '" + path + "' for writing");
  f << format_csv(rows);
  f.flush();
  if (!f) throw std::runtime_error("emit_csv: write to '" + path + "' failed");
}

namespace {
double get_or(const nlohmann::json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}
}  // namespace

SweepConfig config_from_json(const nlohmann::json& j) {
  SweepConfig c;
  if (j.contains("crystal")) {
    const auto& k = j.at("crystal");
    c.crystal.d = get_or(k, "d", c.crystal.d);
    c.crystal.n1 = get_or(k, "n1", c.crystal.n1);
    c.crystal.n2 = get_or(k, "n2", c.crystal.n2);
    c.crystal.lc = get_or(k, "lc", c.crystal.lc);
    c.crystal.lambda1 = get_or(k, "lambda1", c.crystal.lambda1);
    c.crystal.dk = get_or(k, "dk", c.crystal.dk);
    c.crystal.w = get_or(k, "w", c.crystal.w);
  }
  c.cavity.n1 = c.crystal.n1;
  c.cavity.n2 = c.crystal.n2;
  c.cavity.lc = c.crystal.lc;
  bool have_enl1 = false, have_enl2 = false;
  if (j.contains("cavity")) {
    const auto& k = j.at("cavity");
    c.cavity.t11 = get_or(k, "t11", c.cavity.t11);
    c.cavity.t12 = get_or(k, "t12", c.cavity.t12);
    c.cavity.t21 = get_or(k, "t21", c.cavity.t21);
    c.cavity.t22 = get_or(k, "t22", c.cavity.t22);
    c.cavity.l13 = get_or(k, "l13", c.cavity.l13);
    c.cavity.l14 = get_or(k, "l14", c.cavity.l14);
    c.cavity.l23 = get_or(k, "l23", c.cavity.l23);
    c.cavity.l24 = get_or(k, "l24", c.cavity.l24);
    c.cavity.la = get_or(k, "la", c.cavity.la);
    c.cavity.n1 = get_or(k, "n1", c.cavity.n1);
    c.cavity.n2 = get_or(k, "n2", c.cavity.n2);
    c.cavity.lc = get_or(k, "lc", c.cavity.lc);
    if ((have_enl1 = k.contains("enl1"))) c.cavity.enl1 = k.at("enl1").get<double>();
    if ((have_enl2 = k.contains("enl2"))) c.cavity.enl2 = k.at("enl2").get<double>();
  }
  if (!have_enl1 || !have_enl2) {
    const double derived = compute_enl(c.crystal).enl;
    if (!have_enl1) c.cavity.enl1 = derived;
    if (!have_enl2) c.cavity.enl2 = derived;
  }
  c.p_min = get_or(j, "p_min", c.p_min);
  c.p_max = get_or(j, "p_max", c.p_max);
  if (j.contains("n_points")) c.n_points = j.at("n_points").get<int>();
  c.omega = get_or(j, "omega", c.omega);
  if (j.contains("mode")) c.mode = sweep_mode_from_string(j.at("mode").get<std::string>());
  c.validate();
  return c;
}

nlohmann::json config_to_json(const SweepConfig& config) {
  nlohmann::json j;
  j["crystal"] = {{"d", config.crystal.d},     {"n1", config.crystal.n1},
                  {"n2", config.crystal.n2},   {"lc", config.crystal.lc},
                  {"lambda1", config.crystal.lambda1}, {"dk", config.crystal.dk},
                  {"w", config.crystal.w}};
  j["cavity"] = {{"t11", config.cavity.t11}, {"t12", config.cavity.t12},
                 {"t21", config.cavity.t21}, {"t22", config.cavity.t22},
                 {"l13", config.cavity.l13}, {"l14", config.cavity.l14},
                 {"l23", config.cavity.l23}, {"l24", config.cavity.l24},
                 {"la", config.cavity.la},   {"enl1", config.cavity.enl1},
                 {"enl2", config.cavity.enl2}, {"n1", config.cavity.n1},
                 {"n2", config.cavity.n2},   {"lc", config.cavity.lc}};
  j["p_min"] = config.p_min;
  j["p_max"] = config.p_max;
  j["n_points"] = config.n_points;
  j["omega"] = config.omega;
  j["mode"] = to_string(config.mode);
  return j;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("load_config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    f >> j;
    return config_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_config: '" + path + "': " + e.what());
  }
}

SweepConfig default_config() {
  SweepConfig c;
  const double derived = compute_enl(c.crystal).enl;
  c.cavity.enl1 = derived;
  c.cavity.enl2 = derived;
  c.cavity.n1 = c.crystal.n1;
  c.cavity.n2 = c.crystal.n2;
  c.cavity.lc = c.crystal.lc;
  return c;
}

}  // namespace shg
