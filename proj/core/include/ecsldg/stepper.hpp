#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "ecsldg/field.hpp"
#include "ecsldg/phase_space.hpp"
#include "ecsldg/scheme.hpp"

namespace ecsldg {

/// ec: energy-conserving midpoint Ampere update.
/// ae: explicit Ampere update, same cycle otherwise.
/// vp: E recomputed from Poisson at every HE substep (reference mode).
enum class FieldMode { ec, ae, vp };

std::string to_string(FieldMode mode);
FieldMode parse_field_mode(std::string_view text);

struct SimState {
  PhaseSpaceField f;
  FieldState field;
  double t = 0.0;
  double ion_density = 1.0;
};

/// Accumulates, over the HE substeps of a step, sum of dt_sub * int n* E_half dx.
/// The momentum change of the step equals minus this quantity.
struct StepTrace {
  double momentum_source = 0.0;
};

/// Threshold above which leftover mass in the outer v cells is fatal.
inline constexpr double v_boundary_tolerance = 1e-12;

/// Free streaming over dt: every x-line at velocity node v is shifted by v*dt.
void step_Hf(SimState& state, double dt);

/// Acceleration over dt with the field update selected by `mode`.
void step_HE(SimState& state, double dt, FieldMode mode, StepTrace* trace = nullptr);

/// One full step of `scheme`. After every substep the outer v cells are
/// checked (SolverError above v_boundary_tolerance) and then cleared.
void advance(SimState& state, double dt, const SplittingScheme& scheme, FieldMode mode,
             StepTrace* trace = nullptr);

/// dt = cfl / (v_m / dx + max|E| / dv), max over the x Gauss nodes.
double cfl_time_step(const SimState& state, double cfl);

struct TimeControl {
  enum class Kind { cfl, fixed };
  Kind kind = Kind::cfl;
  double value = 1.0;

  static TimeControl cfl(double c) { return {Kind::cfl, c}; }
  static TimeControl fixed(double dt) { return {Kind::fixed, dt}; }
};

struct RunOptions {
  double T = 1.0;
  TimeControl time;
  SplittingScheme scheme;
  FieldMode mode = FieldMode::ec;
};

/// Called after every completed step with the step size just taken.
using StepObserver = std::function<void(const SimState&, double dt)>;

/// Steps until state.t reaches T; the last step is shortened to land on T.
/// Returns the number of steps taken.
long run(SimState& state, const RunOptions& options, const StepObserver& observer = {});

}  // namespace ecsldg
