#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ecsldg/stepper.hpp"

namespace ecsldg {

/// Initial condition plus domain and physical defaults for one benchmark.
struct Scenario {
  std::string name;
  double length = 0.0;   // x in [0, length]
  double v_max = 10.0;   // v in [-v_max, v_max]
  double lambda = 1.0;
  double ion_density = 1.0;
  double alpha = 0.0;
  double kappa = 0.0;
  double v0 = 0.0;
  double vt = 1.0;
  /// Debye length used by the initial Poisson solve; 0 means `lambda`.
  double init_lambda = 0.0;

  PhaseFunction f0;
  /// Exact field for the analytic density with Debye length `lam`.
  std::function<double(double x, double lam)> exact_E0;

  double initial_lambda() const { return init_lambda > 0.0 ? init_lambda : lambda; }
};

/// f0 = (1 + alpha cos(kappa x)) exp(-v^2/2) / sqrt(2 pi); alpha = 0.01, kappa = 0.5.
Scenario weak_landau();
/// As weak_landau with alpha = 0.5.
Scenario strong_landau();
/// f0 = 2/(7 sqrt(2 pi)) (1 + 5 v^2) (1 + alpha ((cos 2kx + cos 3kx)/1.2 + cos kx)) exp(-v^2/2).
/// Its density averages 12/7, which is also the ion background.
Scenario two_stream_I();
/// Two counter-streaming Maxwellians at +-v0 with thermal speed vt on [0, 13 pi].
Scenario two_stream_II(double lambda = 1.0);

/// Lookup by name: weak_landau, strong_landau, two_stream_I, two_stream_II
/// (case-insensitive). Throws InputError.
Scenario scenario_by_name(std::string_view name);
std::vector<std::string> scenario_names();

Mesh1D x_mesh(const Scenario& sc, int n_x);
Mesh1D v_mesh(const Scenario& sc, int n_v);

/// Projects f0, clears the outer v cells and solves for E from the density.
SimState initialize(const Scenario& sc, int n_x, int n_v, int k);

}  // namespace ecsldg
