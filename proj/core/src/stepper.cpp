#include "ecsldg/stepper.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cmath>
#include <string>
#include <vector>

#include "ecsldg/error.hpp"
#include "ecsldg/parallel.hpp"
#include "ecsldg/sldg.hpp"

namespace ecsldg {

std::string to_string(FieldMode mode) {
  switch (mode) {
    case FieldMode::ec: return "ec";
    case FieldMode::ae: return "ae";
    case FieldMode::vp: return "vp";
  }
  return "?";
}

FieldMode parse_field_mode(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "ec") return FieldMode::ec;
  if (s == "ae") return FieldMode::ae;
  if (s == "vp") return FieldMode::vp;
  throw InputError("unknown field mode '" + std::string(text) + "' (expected ec, ae or vp)");
}

namespace {

constexpr int x_block = 8;

void check_and_clear_boundary(PhaseSpaceField& f, const char* where) {
  const double leak = f.v_boundary_max_abs();
  if (!(leak <= v_boundary_tolerance)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", leak);
    throw SolverError(std::string(where) + ": |f| = " + buf + " in the outer velocity cells; increase v_max");
  }
  f.zero_v_boundary();
}

}  // namespace

void step_Hf(SimState& state, double dt) {
  if (dt == 0.0) return;
  PhaseSpaceField& f = state.f;
  const Mesh1D& mx = f.mesh_x();
  const int k = f.degree();
  const int n = f.n_local();
  const int nx = f.nx_nodes();
  const std::size_t stride = f.x_stride();
  const auto v = node_coordinates(f.mesh_v(), k);
  // The outer v cells are zero by invariant, so only interior nodes move.
  const int c_begin = n;
  const int c_end = f.nv_nodes() - n;
  const int n_blocks = (c_end - c_begin + x_block - 1) / x_block;
  double* data = f.values().data();

  parallel_for(n_blocks, [&](int b0, int b1) {
    std::vector<double> in(static_cast<std::size_t>(x_block) * nx);
    std::vector<double> out(nx);
    for (int blk = b0; blk < b1; ++blk) {
      const int c0 = c_begin + blk * x_block;
      const int width = std::min(x_block, c_end - c0);
      for (int r = 0; r < nx; ++r) {
        const double* row = data + r * stride + c0;
        for (int b = 0; b < width; ++b) in[b * nx + r] = row[b];
      }
      for (int b = 0; b < width; ++b) {
        const ShiftKernel kernel(k, mx, v[c0 + b] * dt);
        std::span<const double> line(in.data() + b * nx, nx);
        advect_nodal_line(kernel, Boundary::periodic, mx.n_cells(), line, out);
        for (int r = 0; r < nx; ++r) data[r * stride + c0 + b] = out[r];
      }
    }
  });
}

void step_HE(SimState& state, double dt, FieldMode mode, StepTrace* trace) {
  if (dt == 0.0) return;
  PhaseSpaceField& f = state.f;
  const Mesh1D& mx = f.mesh_x();
  const Mesh1D& mv = f.mesh_v();
  const int k = f.degree();
  const int nx = f.nx_nodes();
  const int nv = f.nv_nodes();

  // Phase 1: moments of the current f (read-only).
  std::vector<double> n(nx), J(nx);
  compute_moments_nodal(f, n, J);

  // Phase 2: field update and the advecting field.
  std::vector<double> E_adv(nx);
  if (mode == FieldMode::vp) {
    const auto n_dg = DGFunction1D::from_nodal(mx, k, n);
    state.field.E = poisson_ldg(n_dg, state.field.lambda, state.ion_density);
    E_adv = state.field.E.nodal_values();
  } else {
    const auto E = state.field.E.nodal_values();
    std::vector<double> E_new(nx);
    if (mode == FieldMode::ec) {
      ampere_ec_nodal(E, n, J, state.field.lambda, dt, E_new);
    } else {
      ampere_explicit_nodal(E, J, state.field.lambda, dt, E_new);
    }
    for (int r = 0; r < nx; ++r) E_adv[r] = 0.5 * (E[r] + E_new[r]);
    state.field.E = DGFunction1D::from_nodal(mx, k, E_new);
  }

  if (trace != nullptr) {
    const auto wx = node_weights(mx, k);
    double s = 0.0;
    for (int r = 0; r < nx; ++r) s += wx[r] * n[r] * E_adv[r];
    trace->momentum_source += dt * s;
  }

  // Phase 3: every v-line moves by -E_adv * dt.
  double* data = f.values().data();
  parallel_for(nx, [&](int r0, int r1) {
    std::vector<double> out(nv);
    for (int r = r0; r < r1; ++r) {
      const ShiftKernel kernel(k, mv, -E_adv[r] * dt);
      std::span<double> line(data + static_cast<std::size_t>(r) * nv, nv);
      advect_nodal_line(kernel, Boundary::zero_exterior, mv.n_cells(), line, out);
      std::copy(out.begin(), out.end(), line.begin());
    }
  });
}

void advance(SimState& state, double dt, const SplittingScheme& scheme, FieldMode mode,
             StepTrace* trace) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InputError("advance: dt must be positive and finite");
  for (const Substep& s : expand_scheme(scheme)) {
    if (s.kind == SubstepKind::Hf) {
      step_Hf(state, s.coefficient * dt);
      check_and_clear_boundary(state.f, "Hf substep");
    } else {
      step_HE(state, s.coefficient * dt, mode, trace);
      check_and_clear_boundary(state.f, "HE substep");
    }
  }
  if (mode == FieldMode::vp) {
    const auto m = compute_moments(state.f);
    state.field.E = poisson_ldg(m.n, state.field.lambda, state.ion_density);
  }
  state.t += dt;
}

double cfl_time_step(const SimState& state, double cfl) {
  if (!(cfl > 0.0) || !std::isfinite(cfl)) throw InputError("CFL must be positive");
  const auto E = state.field.E.nodal_values();
  double emax = 0.0;
  for (double e : E) emax = std::max(emax, std::abs(e));
  const Mesh1D& mv = state.f.mesh_v();
  const double vmax = std::max(std::abs(mv.lo()), std::abs(mv.hi()));
  return cfl / (vmax / state.f.mesh_x().width() + emax / mv.width());
}

long run(SimState& state, const RunOptions& options, const StepObserver& observer) {
  if (!(options.time.value > 0.0) || !std::isfinite(options.time.value)) {
    throw InputError("time step control must be positive");
  }
  if (!(options.T > state.t)) throw InputError("run: end time must exceed the current time");
  const double T = options.T;
  const double slack = 1e-12 * std::max(1.0, std::abs(T));
  long steps = 0;
  while (state.t < T - slack) {
    double dt = options.time.kind == TimeControl::Kind::cfl ? cfl_time_step(state, options.time.value)
                                                             : options.time.value;
    const bool last = state.t + dt >= T - slack;
    if (last) dt = T - state.t;
    advance(state, dt, options.scheme, options.mode);
    if (last) state.t = T;
    ++steps;
    if (observer) observer(state, dt);
  }
  return steps;
}

}  // namespace ecsldg
