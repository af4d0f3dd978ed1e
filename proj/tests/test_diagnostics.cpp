#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ecsldg/diagnostics.hpp"
#include "ecsldg/error.hpp"
#include "ecsldg/scenarios.hpp"
#include "oracle.hpp"

using namespace ecsldg;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("observables of a uniform Maxwellian") {
  const Mesh1D mx(0.0, 4.0 * pi, 16, Boundary::periodic);
  const Mesh1D mv(-10.0, 10.0, 128, Boundary::zero_exterior);
  auto f = project_phase_space([](double, double v) { return std::exp(-0.5 * v * v) / std::sqrt(2.0 * pi); }, mx, mv, 2);
  f.zero_v_boundary();
  const SimState s{f, FieldState{DGFunction1D(mx, 2), 1.0}, 0.5, 1.0};
  const auto d = observe(s);
  const double L = 4.0 * pi;
  CHECK(d.t == 0.5);
  CHECK(std::abs(d.L1 - L) < 1e-10 * L);
  CHECK(std::abs(d.P) < 1e-13);
  CHECK(std::abs(d.E_K - L / 2.0) < 1e-10 * L);
  CHECK(d.E_E == 0.0);
  CHECK(d.E_total == d.E_K);
  CHECK(std::abs(d.l2_f - L / (2.0 * std::sqrt(pi))) < 1e-8);
  CHECK(d.min_f == 0.0);
  CHECK(d.gauss_res < 1e-10);
}

TEST_CASE("electric energy carries lambda squared") {
  auto s = initialize(weak_landau(), 32, 32, 2);
  s.field.E = project([](double x) { return std::sin(0.5 * x); }, s.f.mesh_x(), 2);
  s.field.lambda = 0.5;
  const auto d = observe(s);
  // Nodal quadrature of the projected field.
  const auto E = s.field.E.nodal_values();
  const auto w = node_weights(s.f.mesh_x(), 2);
  double ref = 0.0;
  for (std::size_t r = 0; r < E.size(); ++r) ref += w[r] * E[r] * E[r];
  CHECK(std::abs(d.E_E - 0.125 * ref) < 1e-15);
  CHECK(std::abs(d.E_E - 0.25 / 2.0 * 2.0 * pi) < 1e-8);
}

TEST_CASE("error norms") {
  const Mesh1D mx(0.0, 3.0, 4, Boundary::periodic);
  const Mesh1D mv(-2.0, 2.0, 5, Boundary::zero_exterior);
  PhaseSpaceField a(mx, mv, 2), b(mx, mv, 2);
  for (auto& x : a.values()) x = oracle::uniform(-1.0, 1.0);
  b.values() = a.values();
  for (auto& x : b.values()) x -= 0.25;
  const auto e = error_norms(a, b);
  CHECK(std::abs(e.L1 - 0.25 * 3.0 * 4.0) < 1e-14);
  CHECK(std::abs(e.L2 - 0.25 * std::sqrt(12.0)) < 1e-14);

  // Random perturbation against a dense-quadrature oracle.
  PhaseSpaceField c(mx, mv, 2);
  const auto fa = [](double x, double v) { return std::sin(x) * v * v; };
  const auto fc = [](double x, double v) { return std::cos(x) * v; };
  const auto pa = project_phase_space(fa, mx, mv, 2);
  const auto pc = project_phase_space(fc, mx, mv, 2);
  (void)c;
  // Both projections reproduce the quadratic-in-v factor; the x factor is not polynomial,
  // so compare against the projected difference integrated densely.
  const auto diff = [&](double x, double v) {
    int i = std::min(3, static_cast<int>(x / 0.75)), j = std::min(4, static_cast<int>((v + 2.0) / 0.8));
    // Reconstruct both projections from their nodes by Lagrange interpolation.
    const auto& r = gauss_rule(2);
    const auto lag = [&](int m, double xi) {
      double p = 1.0;
      for (int o = 0; o < 3; ++o)
        if (o != m) p *= (xi - r.nodes[o]) / (r.nodes[m] - r.nodes[o]);
      return p;
    };
    const double xi = 2.0 * (x - mx.cell_lo(i)) / mx.width() - 1.0;
    const double eta = 2.0 * (v - mv.cell_lo(j)) / mv.width() - 1.0;
    double s = 0.0;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) s += (pa.at(i, p, j, q) - pc.at(i, p, j, q)) * lag(p, xi) * lag(q, eta);
    return s;
  };
  double l2 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j)
      l2 += oracle::gauss(
          [&](double x) {
            return oracle::gauss([&](double v) { const double d = diff(x, v); return d * d; }, mv.cell_lo(j),
                                 mv.cell_hi(j), 20);
          },
          mx.cell_lo(i), mx.cell_hi(i), 20);
  CHECK(std::abs(error_norms(pa, pc).L2 - std::sqrt(l2)) < 1e-12);

  PhaseSpaceField other(mx, Mesh1D(-2.0, 2.0, 6, Boundary::zero_exterior), 2);
  CHECK_THROWS_AS(error_norms(a, other), InputError);
}

TEST_CASE("field error") {
  const Mesh1D mx(0.0, 2.0, 4, Boundary::periodic);
  const auto a = project([](double x) { return x; }, mx, 1);
  const auto b = project([](double x) { return x + 0.5; }, mx, 1);
  CHECK(std::abs(field_error(a, b) - 0.5 * std::sqrt(2.0)) < 1e-14);
  CHECK_THROWS_AS(field_error(a, project([](double x) { return x; }, mx, 2)), InputError);
}

TEST_CASE("decay-rate fit recovers a synthetic damped oscillation") {
  for (double gamma : {-0.1533, -0.3, 0.2}) {
    std::vector<double> t, ee;
    for (int i = 0; i <= 5000; ++i) {
      const double ti = 0.01 * i;
      const double amp = std::exp(gamma * ti) * std::abs(std::cos(1.4156 * ti + 0.3));
      t.push_back(ti);
      ee.push_back(amp * amp + 1e-300);
    }
    CHECK(fit_decay_rate(t, ee) == doctest::Approx(gamma).epsilon(1e-3));
  }
  std::vector<double> t{0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> flat(9, 2.0);
  CHECK(fit_decay_rate(t, flat) == 0.0);
  std::vector<double> mono{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK_THROWS_AS(fit_decay_rate(t, mono), InputError);
  CHECK_THROWS_AS(fit_decay_rate(t, std::vector<double>(8, 1.0)), InputError);
}

TEST_CASE("convergence orders") {
  const std::vector<double> h{1.0, 0.5, 0.25};
  const auto o = convergence_order(h, std::vector<double>{1.0, 0.25, 0.0625});
  REQUIRE(o.size() == 2);
  CHECK(*o[0] == doctest::Approx(2.0));
  CHECK(*o[1] == doctest::Approx(2.0));
  const auto z = convergence_order(h, std::vector<double>{1.0, 0.0, 0.1});
  CHECK(!z[0].has_value());
  CHECK(!z[1].has_value());
  CHECK_THROWS_AS(convergence_order(h, std::vector<double>{1.0}), InputError);
}

TEST_CASE("slope estimators") {
  std::vector<double> x, y;
  for (int i = 0; i < 20; ++i) {
    x.push_back(i);
    y.push_back(3.0 - 0.5 * i);
  }
  CHECK(least_squares_slope(x, y) == doctest::Approx(-0.5));
  CHECK(theil_sen_slope(x, y) == doctest::Approx(-0.5));
  y[7] = 100.0;
  y[12] = -50.0;
  CHECK(theil_sen_slope(x, y) == doctest::Approx(-0.5));
  CHECK(least_squares_slope(x, y) != doctest::Approx(-0.5));
  CHECK_THROWS_AS(theil_sen_slope(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 1.0}), InputError);
  CHECK_THROWS_AS(least_squares_slope(std::vector<double>{1.0}, std::vector<double>{0.0}), InputError);
}
