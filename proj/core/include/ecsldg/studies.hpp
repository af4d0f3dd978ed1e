#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ecsldg/config.hpp"
#include "ecsldg/diagnostics.hpp"

namespace ecsldg {

/// "%.17g"
std::string format_number(double x);

/// Header of the per-step series file.
inline constexpr const char* series_header = "t,E_E,E_K,E_total,L1,P,gauss_res";
std::string series_row(const DiagRecord& d);

/// Header lines (N_x, N_v, k, domain) then f in ascending (i, p, j, q) order.
void write_f_snapshot(std::ostream& out, const PhaseSpaceField& f);
/// Header lines (N_x, k, domain) then E at the x Gauss nodes in ascending (i, p).
void write_E_snapshot(std::ostream& out, const DGFunction1D& E);

struct RunSummary {
  long steps = 0;
  DiagRecord initial;
  DiagRecord final;
  double max_rel_energy_drift = 0.0;
  double max_rel_mass_drift = 0.0;
  double max_abs_momentum_dev = 0.0;
  double max_E_E = 0.0;
  std::vector<DiagRecord> series;  // one per step
};

/// Runs one simulation from a fresh projection. Writes nothing when out_dir
/// is empty; otherwise series.csv, snapshots and summary.txt go there.
RunSummary run_single(const RunConfig& cfg, const std::string& out_dir);

/// Same, from an explicit initial state and options; no files.
RunSummary run_tracked(SimState& state, const RunOptions& options);

struct ReversibilityRow {
  int k = 0;
  int n = 0;
  double f_L1 = 0.0;
  double f_L2 = 0.0;
  double E_L2 = 0.0;
  std::optional<double> order_f_L1;
  std::optional<double> order_f_L2;
  std::optional<double> order_E_L2;
};

/// Forward to T, reflect v, forward to 2T, reflect v; errors against the
/// initial projection, for every (degree, mesh) pair. Writes
/// reversibility.csv when out_dir is non-empty.
std::vector<ReversibilityRow> run_reversibility_study(const RunConfig& cfg, const std::string& out_dir);

struct TemporalRow {
  std::string scheme;
  double h = 0.0;  // nominal CFL or dt
  double f_L1 = 0.0;
  double f_L2 = 0.0;
  double E_L2 = 0.0;
};

struct TemporalResult {
  std::vector<TemporalRow> rows;
  /// Least-squares log-log slope of the f L1 error per scheme, same order as
  /// the configured schemes.
  std::vector<std::pair<std::string, double>> slopes;
};

/// Errors at T against a reference run at reference_cfl (default 0.01) or
/// reference_dt, using reference_scheme when set and otherwise the scheme
/// under test. Writes temporal.csv and temporal_slopes.csv.
TemporalResult run_temporal_study(const RunConfig& cfg, const std::string& out_dir);

struct SweepRow {
  int n_x = 0;
  std::string control;  // "cfl" or "dt"
  double value = 0.0;
  long steps = 0;
  double max_rel_energy_drift = 0.0;
  double max_rel_mass_drift = 0.0;
  double max_abs_momentum_dev = 0.0;
  double max_E_E = 0.0;
};

/// Conservation table over the configured cfls (or dts) and meshes (N_x).
/// Writes cfl_sweep.csv and one series file per run.
std::vector<SweepRow> run_cfl_sweep(const RunConfig& cfg, const std::string& out_dir);

}  // namespace ecsldg
