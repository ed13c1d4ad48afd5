#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shg/coupling.hpp"
#include "shg/mean_field.hpp"

// Pump-power sweep driver producing the CSV datasets behind the squeezing,
// twin-beam, entanglement and beamsplitter-comparison curves.
namespace shg {

enum class SweepMode {
  dual_port,  // one dual-ported resonator, metrics between its two outputs
  ring,       // single-output ring (enl2 forced to 0)
  bs_dual,    // two dual-ported resonators at P_in/2 each, output 1 mixed on a beamsplitter
  bs_ring,    // two ring resonators at P_in/2 each, outputs mixed on a beamsplitter
};

SweepMode sweep_mode_from_string(const std::string& s);
std::string to_string(SweepMode mode);

struct SweepConfig {
  CrystalSpec crystal{11e-12, 2.2, 2.2, 0.01, 860e-9, 0.0, 21.1e-6};
  CavitySpec cavity{};
  double p_min = 0.0;  // [W]
  double p_max = 1.0;  // [W]
  int n_points = 201;
  double omega = 0.0;  // sideband angular frequency [rad/s]
  SweepMode mode = SweepMode::dual_port;

  void validate() const;
};

// One sweep grid point. g_opt is the sum-branch (negative) gain; it is NaN in
// ring modes where only one beam reaches the detectors. On a per-point solver
// failure the numeric fields are NaN and status carries the reason.
struct SweepRow {
  double p_in = 0.0;
  double eps1 = 0.0, eps2 = 0.0;
  double zeta1 = 0.0, zeta2 = 0.0;
  double s_x1 = 1.0, s_y1 = 1.0, s_x2 = 1.0, s_y2 = 1.0;
  double c_x = 0.0, c_y = 0.0;
  double var_sum = 1.0, var_diff = 1.0;
  double g_opt = -1.0;
  double v_epr = 1.0, v_dgcz = 1.0;
  std::string status = "ok";
};

// Evaluates one grid point; exceptions from the solvers are caught and
// recorded in the row status.
SweepRow evaluate_point(const SweepConfig& config, double p_in);

// Grid sweep. run_sweep parallelizes over grid points with OpenMP;
// run_sweep_serial is the reference implementation kept for testing and
// benchmarking. Both produce identical rows.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
std::vector<SweepRow> run_sweep_serial(const SweepConfig& config);

// CSV with a fixed header naming every row field; values use 12 significant
// digits, so output is byte-stable for identical configs.
std::string format_csv(const std::vector<SweepRow>& rows);
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);

// JSON config mirroring the SweepConfig fields (snake_case). When the cavity
// block omits enl1/enl2 they are derived from the crystal; n1, n2 and lc are
// always taken from the crystal unless the cavity block overrides them.
SweepConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SweepConfig& config);
SweepConfig load_config(const std::string& path);

// Reference configuration: KNbO3 crystal near optimal focusing with the
// conversion coefficient derived from the crystal parameters.
SweepConfig default_config();

}  // namespace shg
