#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecsldg/scenarios.hpp"
#include "ecsldg/stepper.hpp"

namespace ecsldg {

enum class StudyKind { single, spatial_convergence, temporal_convergence, reversibility, cfl_sweep };

std::string to_string(StudyKind kind);

struct RunConfig {
  std::string scenario;
  int n_x = 64;
  int n_v = 64;
  int k = 2;
  double v_max = 10.0;
  double lambda = 1.0;
  double init_lambda = 0.0;  // 0: same as lambda
  SplittingScheme scheme = SplittingScheme::ten_lie();
  FieldMode mode = FieldMode::ec;
  std::optional<double> cfl;
  std::optional<double> dt;
  double T = 0.0;
  StudyKind study = StudyKind::single;

  std::string out_dir = ".";
  std::vector<double> snapshot_times;

  // Study parameters.
  std::vector<int> meshes;           // reversibility: N_x = N_v; sweep: N_x
  std::vector<int> degrees;          // reversibility
  std::vector<double> cfls;          // temporal / sweep
  std::vector<double> dts;           // temporal / sweep
  std::vector<SplittingScheme> schemes;  // temporal
  std::optional<double> reference_cfl;
  std::optional<double> reference_dt;
  std::optional<SplittingScheme> reference_scheme;  // temporal: one shared reference

  TimeControl time_control() const;
  /// Scenario with the configured v_max / lambda / init_lambda applied.
  Scenario make_scenario() const;
};

/// Parses the key = value format:
///
///   # comment
///   [run]      scenario, study, T, CFL, dt, scheme, mode
///   [mesh]     N_x, N_v, k, v_max
///   [physics]  lambda, init_lambda
///   [output]   dir, snapshot_times
///   [study]    meshes, degrees, cfls, dts, schemes, reference_cfl, reference_dt,
///              reference_scheme
///
/// Keys are case-insensitive and may also appear before any section header.
/// Lists are comma separated. Throws InputError naming the offending key.
RunConfig parse_config(std::string_view text);

/// Checks the cross-field rules; parse_config calls it.
void validate(const RunConfig& cfg);

/// Named configurations for the paper experiments.
std::vector<std::string> preset_names();
std::string preset_text(std::string_view name);
RunConfig preset(std::string_view name);

}  // namespace ecsldg
