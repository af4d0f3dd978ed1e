// Acceptance runs. One PASS/FAIL line per criterion; exit status 1 if any fails.
//
//   acceptance            all criteria
//   acceptance 3 6 10     selected criteria

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ecsldg/config.hpp"
#include "ecsldg/diagnostics.hpp"
#include "ecsldg/error.hpp"
#include "ecsldg/parallel.hpp"
#include "ecsldg/sldg.hpp"
#include "ecsldg/studies.hpp"
#include "oracle.hpp"
#include "sldg_oracle.hpp"

using namespace ecsldg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool in(double x, double lo, double hi) { return x >= lo && x <= hi; }

// Weak Landau, 128^2, k = 2, CFL 1, T = 50: EC for criteria 3 and 5, AE for 5.
const RunSummary& landau_cfl1(FieldMode mode) {
  static std::map<FieldMode, RunSummary> cache;
  auto it = cache.find(mode);
  if (it == cache.end()) {
    auto s = initialize(weak_landau(), 128, 128, 2);
    it = cache.emplace(mode, run_tracked(s, RunOptions{50.0, TimeControl::cfl(1.0), SplittingScheme::strang(), mode}))
             .first;
  }
  return it->second;
}

Outcome spatial_convergence() {
  // Reference table: rows P1, P2, P3; columns 40, 60, 80, 100.
  constexpr std::array<std::array<double, 4>, 3> L1 = {{{1.30e-2, 5.32e-3, 2.93e-3, 1.96e-3},
                                                         {3.30e-3, 1.23e-3, 5.88e-4, 3.28e-4},
                                                         {7.79e-5, 1.26e-5, 3.63e-6, 1.42e-6}}};
  constexpr std::array<std::array<double, 4>, 3> L2 = {{{1.90e-3, 7.83e-4, 4.37e-4, 2.94e-4},
                                                         {5.55e-4, 2.09e-4, 1.01e-4, 5.62e-5},
                                                         {1.26e-5, 2.03e-6, 5.82e-7, 2.28e-7}}};
  constexpr std::array<std::array<double, 4>, 3> EL2 = {{{4.82e-6, 2.15e-6, 1.24e-6, 7.88e-7},
                                                          {5.64e-7, 2.08e-7, 9.72e-8, 5.35e-8},
                                                          {7.85e-10, 1.48e-10, 5.58e-11, 2.23e-11}}};
  const auto rows = run_reversibility_study(preset("table1"), "");
  bool pass = rows.size() == 12;
  double worst_ratio = 1.0;
  double o1_lo = 1e9, o1_hi = -1e9, o3_lo = 1e9, o3_hi = -1e9;
  for (std::size_t n = 0; pass && n < rows.size(); ++n) {
    const auto& r = rows[n];
    const std::size_t d = static_cast<std::size_t>(r.k - 1);
    const std::size_t m = n % 4;
    for (const auto& [got, want] : {std::pair{r.f_L1, L1[d][m]}, {r.f_L2, L2[d][m]}, {r.E_L2, EL2[d][m]}}) {
      const double ratio = std::max(got / want, want / got);
      worst_ratio = std::max(worst_ratio, ratio);
      if (!(ratio <= 3.0)) pass = false;
    }
    if (r.k == 2) continue;
    for (const auto& o : {r.order_f_L1, r.order_f_L2, r.order_E_L2}) {
      if (!o) continue;
      double& lo = r.k == 1 ? o1_lo : o3_lo;
      double& hi = r.k == 1 ? o1_hi : o3_hi;
      lo = std::min(lo, *o);
      hi = std::max(hi, *o);
    }
  }
  pass = pass && in(o1_lo, 1.6, 2.4) && in(o1_hi, 1.6, 2.4) && in(o3_lo, 3.3, 4.7) && in(o3_hi, 3.3, 4.7);
  return {pass, "P1 orders [" + fmt("%.2f", o1_lo) + ", " + fmt("%.2f", o1_hi) + "], P3 orders [" +
                    fmt("%.2f", o3_lo) + ", " + fmt("%.2f", o3_hi) + "], worst error ratio to table " +
                    fmt("%.2f", worst_ratio) + ", P3 100^2 L1 " + fmt("%.3e", rows.back().f_L1)};
}

Outcome temporal_order() {
  const auto r = run_temporal_study(preset("temporal_64"), "");
  std::map<std::string, double> slope(r.slopes.begin(), r.slopes.end());
  const bool pass = slope["10lie"] >= 3.5 && slope["ss3"] >= 3.5 && in(slope["strang"], 1.6, 2.4);
  return {pass, "slopes 10lie " + fmt("%.3f", slope["10lie"]) + ", ss3 " + fmt("%.3f", slope["ss3"]) +
                    ", strang " + fmt("%.3f", slope["strang"])};
}

Outcome landau_damping() {
  const auto& r = landau_cfl1(FieldMode::ec);
  std::vector<double> t{0.0}, ee{r.initial.E_E};
  for (const auto& d : r.series) {
    t.push_back(d.t);
    ee.push_back(d.E_E);
  }
  const double g = fit_decay_rate(t, ee);
  return {std::abs(g + 0.1533) <= 0.008, "gamma_fit " + fmt("%.5f", g)};
}

Outcome conservation() {
  double worst_E = 0.0, worst_L1 = 0.0;
  auto c1 = preset("two_stream_I_cfl_sweep");
  c1.cfls = {1.0, 10.0, 20.0, 80.0};
  auto rows = run_cfl_sweep(c1, "");
  const auto c2 = preset("two_stream_II_nx_sweep");
  const auto rows2 = run_cfl_sweep(c2, "");
  rows.insert(rows.end(), rows2.begin(), rows2.end());
  for (const auto& r : rows) {
    worst_E = std::max(worst_E, r.max_rel_energy_drift);
    worst_L1 = std::max(worst_L1, r.max_rel_mass_drift);
  }
  return {worst_E <= 1e-12 && worst_L1 <= 1e-12 && rows.size() == 7,
          std::to_string(rows.size()) + " runs, max energy drift " + fmt("%.2e", worst_E) + ", max mass drift " +
              fmt("%.2e", worst_L1)};
}

Outcome comparator() {
  const double ae = landau_cfl1(FieldMode::ae).max_rel_energy_drift;
  const double ec = landau_cfl1(FieldMode::ec).max_rel_energy_drift;
  return {ae >= 1e-6 && ec <= 1e-12, "AE drift " + fmt("%.3e", ae) + ", EC drift " + fmt("%.3e", ec)};
}

Outcome momentum_identity() {
  // Support in the two central velocity cells so that one HE substep cannot
  // reach the outer cells of the 8-cell velocity mesh.
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    const Mesh1D mx(0.0, oracle::uniform(1.0, 4.0), 8, Boundary::periodic);
    const Mesh1D mv(-6.0, 6.0, 8, Boundary::zero_exterior);
    PhaseSpaceField f(mx, mv, k);
    for (int i = 0; i < 8; ++i)
      for (int p = 0; p <= k; ++p)
        for (int j = 3; j <= 4; ++j)
          for (int q = 0; q <= k; ++q) f.at(i, p, j, q) = oracle::uniform(0.0, 1.0);
    std::vector<double> E(static_cast<std::size_t>(8 * (k + 1)));
    for (auto& e : E) e = oracle::uniform(-0.5, 0.5);
    SimState s{std::move(f), FieldState{DGFunction1D::from_nodal(mx, k, E), oracle::uniform(0.3, 1.5)}, 0.0, 1.0};
    const auto scheme = trial % 2 == 0 ? SplittingScheme::strang() : SplittingScheme::lie();
    const double P0 = observe(s).P;
    StepTrace trace;
    advance(s, oracle::uniform(0.01, 0.3), scheme, FieldMode::ec, &trace);
    worst = std::max(worst, std::abs(observe(s).P - P0 + trace.momentum_source));
  }
  return {worst <= 1e-12, "max |dP + dt int n E| " + fmt("%.2e", worst)};
}

Outcome l2_stability() {
  auto s = initialize(strong_landau(), 128, 128, 2);
  const auto scheme = SplittingScheme::ten_lie();
  double prev = observe(s).l2_f;
  double worst = -1e300;
  for (int step = 0; step < 500; ++step) {
    advance(s, cfl_time_step(s, 10.0), scheme, FieldMode::ec);
    const double now = observe(s).l2_f;
    worst = std::max(worst, (now - prev) / prev);
    prev = now;
  }
  return {worst <= 1e-12, "500 steps to t=" + fmt("%.2f", s.t) + ", max relative increase " + fmt("%.2e", worst)};
}

Outcome gauss_residual() {
  struct Trend {
    double slope;
    double final;
  };
  const auto trend = [](const SplittingScheme& scheme) {
    auto s = initialize(strong_landau(), 128, 128, 2);
    const auto r = run_tracked(s, RunOptions{50.0, TimeControl::cfl(20.0), scheme, FieldMode::ec});
    std::vector<double> t, y;
    for (const auto& d : r.series) {
      t.push_back(d.t);
      y.push_back(std::log(d.gauss_res));
    }
    return Trend{theil_sen_slope(t, y), r.final.gauss_res};
  };
  const Trend ten = trend(SplittingScheme::ten_lie());
  const Trend strang = trend(SplittingScheme::strang());
  return {ten.slope <= 0.01 && strang.slope > ten.slope,
          "log-residual slopes 10lie " + fmt("%.4f", ten.slope) + ", strang " + fmt("%.4f", strang.slope) +
              "; residual at T 10lie " + fmt("%.2e", ten.final) + ", strang " + fmt("%.2e", strang.final)};
}

Outcome small_debye_length() {
  const auto cfg = preset("two_stream_II_lambda001");
  bool pass = true;
  std::string detail;
  for (double dt : cfg.dts) {
    auto c = cfg;
    c.dts = {dt};
    detail += "dt " + fmt("%g", dt) + ": ";
    try {
      const auto r = run_cfl_sweep(c, "").front();
      const bool ok = r.max_rel_energy_drift <= 1e-12 && std::isfinite(r.max_E_E) && r.max_E_E < 1.0;
      pass = pass && ok;
      detail += "drift " + fmt("%.2e", r.max_rel_energy_drift) + ", max E_E " + fmt("%.3g", r.max_E_E) + "; ";
    } catch (const SolverError& e) {
      pass = false;
      detail += std::string("failed (") + e.what() + "); ";
    }
  }
  return {pass, detail};
}

Outcome kernel_oracle() {
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = trial % 4;
    const int n = 2 + trial % 9;
    const Boundary bc = trial % 3 == 0 ? Boundary::zero_exterior : Boundary::periodic;
    const double a = oracle::uniform(-3.0, 1.0);
    const Mesh1D mesh(a, a + oracle::uniform(0.5, 5.0), n, bc);
    std::vector<double> c(static_cast<std::size_t>(n * (k + 1)));
    for (auto& x : c) x = oracle::uniform(-1.0, 1.0);
    const DGFunction1D u(mesh, k, c);
    const double s = oracle::uniform(-3.0, 3.0) * mesh.width();
    const auto got = advect_const(u, s).coeffs();
    const auto ref = oracle::sldg_brute_force(u, s);
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - ref[i]));
  }
  return {worst <= 1e-12, "200 instances, max coefficient difference " + fmt("%.2e", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  set_num_threads(static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));

  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"spatial convergence", spatial_convergence},
      {"temporal order", temporal_order},
      {"Landau damping rate", landau_damping},
      {"energy and mass conservation", conservation},
      {"AE energy drift", comparator},
      {"momentum identity", momentum_identity},
      {"L2 stability", l2_stability},
      {"Gauss residual trend", gauss_residual},
      {"small Debye length", small_debye_length},
      {"kernel oracle", kernel_oracle},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const int id = static_cast<int>(n + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d %-30s %s  %s  [%.0f s]\n", id, criteria[n].name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
