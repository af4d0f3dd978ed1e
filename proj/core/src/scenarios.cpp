#include "ecsldg/scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "ecsldg/error.hpp"

namespace ecsldg {

namespace {

const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

Scenario landau(const char* name, double alpha) {
  Scenario sc;
  sc.name = name;
  sc.alpha = alpha;
  sc.kappa = 0.5;
  sc.length = 2.0 * std::numbers::pi / sc.kappa;
  const double k = sc.kappa;
  sc.f0 = [alpha, k](double x, double v) {
    return inv_sqrt_2pi * (1.0 + alpha * std::cos(k * x)) * std::exp(-0.5 * v * v);
  };
  // lam^2 E' = 1 - n = -alpha cos(kx)
  sc.exact_E0 = [alpha, k](double x, double lam) { return -alpha / (k * lam * lam) * std::sin(k * x); };
  return sc;
}

}  // namespace

Scenario weak_landau() { return landau("weak_landau", 0.01); }

Scenario strong_landau() { return landau("strong_landau", 0.5); }

Scenario two_stream_I() {
  Scenario sc;
  sc.name = "two_stream_I";
  sc.alpha = 0.01;
  sc.kappa = 0.5;
  sc.length = 2.0 * std::numbers::pi / sc.kappa;
  sc.ion_density = 12.0 / 7.0;
  const double a = sc.alpha;
  const double k = sc.kappa;
  sc.f0 = [a, k](double x, double v) {
    const double shape = 1.0 + a * ((std::cos(2 * k * x) + std::cos(3 * k * x)) / 1.2 + std::cos(k * x));
    return 2.0 / 7.0 * inv_sqrt_2pi * (1.0 + 5.0 * v * v) * shape * std::exp(-0.5 * v * v);
  };
  sc.exact_E0 = [a, k](double x, double lam) {
    const double s = (std::sin(2 * k * x) / (2 * k) + std::sin(3 * k * x) / (3 * k)) / 1.2 + std::sin(k * x) / k;
    return -12.0 / 7.0 * a / (lam * lam) * s;
  };
  return sc;
}

Scenario two_stream_II(double lambda) {
  if (!(lambda > 0.0)) throw InputError("two_stream_II: lambda must be positive");
  Scenario sc;
  sc.name = "two_stream_II";
  sc.alpha = 0.05;
  sc.kappa = 2.0 / 13.0;
  sc.v0 = 0.99;
  sc.vt = 0.3;
  sc.lambda = lambda;
  sc.length = 2.0 * std::numbers::pi / sc.kappa;
  const double a = sc.alpha;
  const double k = sc.kappa;
  const double v0 = sc.v0;
  const double vt = sc.vt;
  sc.f0 = [a, k, v0, vt](double x, double v) {
    const double g = std::exp(-(v - v0) * (v - v0) / (2 * vt * vt)) + std::exp(-(v + v0) * (v + v0) / (2 * vt * vt));
    return 0.5 * inv_sqrt_2pi / vt * (1.0 + a * std::cos(k * x)) * g;
  };
  sc.exact_E0 = [a, k](double x, double lam) { return -a / (k * lam * lam) * std::sin(k * x); };
  return sc;
}

std::vector<std::string> scenario_names() {
  return {"weak_landau", "strong_landau", "two_stream_I", "two_stream_II"};
}

Scenario scenario_by_name(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "weak_landau") return weak_landau();
  if (s == "strong_landau") return strong_landau();
  if (s == "two_stream_i") return two_stream_I();
  if (s == "two_stream_ii") return two_stream_II();
  throw InputError("unknown scenario '" + std::string(name) + "'");
}

Mesh1D x_mesh(const Scenario& sc, int n_x) { return Mesh1D(0.0, sc.length, n_x, Boundary::periodic); }

Mesh1D v_mesh(const Scenario& sc, int n_v) {
  return Mesh1D(-sc.v_max, sc.v_max, n_v, Boundary::zero_exterior);
}

SimState initialize(const Scenario& sc, int n_x, int n_v, int k) {
  if (!sc.f0) throw InputError("scenario '" + sc.name + "' has no initial condition");
  const Mesh1D mx = x_mesh(sc, n_x);
  const Mesh1D mv = v_mesh(sc, n_v);
  PhaseSpaceField f = project_phase_space(sc.f0, mx, mv, k);
  f.zero_v_boundary();
  const Moments m = compute_moments(f);
  DGFunction1D E = poisson_ldg(m.n, sc.initial_lambda(), sc.ion_density);
  return SimState{std::move(f), FieldState{std::move(E), sc.lambda}, 0.0, sc.ion_density};
}

}  // namespace ecsldg
