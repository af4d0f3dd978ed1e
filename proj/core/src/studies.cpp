#include "ecsldg/studies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ecsldg/error.hpp"

namespace ecsldg {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string series_row(const DiagRecord& d) {
  std::string s;
  for (double x : {d.t, d.E_E, d.E_K, d.E_total, d.L1, d.P}) {
    s += format_number(x);
    s += ',';
  }
  s += format_number(d.gauss_res);
  return s;
}

void write_f_snapshot(std::ostream& out, const PhaseSpaceField& f) {
  out << "N_x " << f.mesh_x().n_cells() << '\n'
      << "N_v " << f.mesh_v().n_cells() << '\n'
      << "k " << f.degree() << '\n'
      << "domain " << format_number(f.mesh_x().lo()) << ' ' << format_number(f.mesh_x().hi()) << ' '
      << format_number(f.mesh_v().lo()) << ' ' << format_number(f.mesh_v().hi()) << '\n';
  for (double v : f.values()) out << format_number(v) << '\n';
}

void write_E_snapshot(std::ostream& out, const DGFunction1D& E) {
  out << "N_x " << E.mesh().n_cells() << '\n'
      << "k " << E.degree() << '\n'
      << "domain " << format_number(E.mesh().lo()) << ' ' << format_number(E.mesh().hi()) << '\n';
  for (double v : E.nodal_values()) out << format_number(v) << '\n';
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

void prepare_dir(const std::string& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());
}

void track(RunSummary& s, const DiagRecord& d) {
  const auto rel = [](double a, double b) { return b != 0.0 ? std::abs(a - b) / std::abs(b) : std::abs(a - b); };
  s.max_rel_energy_drift = std::max(s.max_rel_energy_drift, rel(d.E_total, s.initial.E_total));
  s.max_rel_mass_drift = std::max(s.max_rel_mass_drift, rel(d.L1, s.initial.L1));
  s.max_abs_momentum_dev = std::max(s.max_abs_momentum_dev, std::abs(d.P - s.initial.P));
  s.max_E_E = std::max(s.max_E_E, d.E_E);
  s.series.push_back(d);
  s.final = d;
}

RunOptions options_for(const RunConfig& cfg, TimeControl time) {
  RunOptions o;
  o.T = cfg.T;
  o.time = time;
  o.scheme = cfg.scheme;
  o.mode = cfg.mode;
  return o;
}

std::string tag(double x) {
  std::string s = format_number(x);
  for (char& c : s) {
    if (c == '.') c = 'p';
  }
  return s;
}

void write_series(const std::filesystem::path& path, const RunSummary& s) {
  auto out = open_out(path);
  out << series_header << '\n';
  for (const auto& d : s.series) out << series_row(d) << '\n';
}

}  // namespace

RunSummary run_tracked(SimState& state, const RunOptions& options) {
  RunSummary s;
  s.initial = observe(state);
  s.final = s.initial;
  s.max_E_E = s.initial.E_E;
  s.steps = run(state, options, [&](const SimState& st, double) { track(s, observe(st)); });
  return s;
}

RunSummary run_single(const RunConfig& cfg, const std::string& out_dir) {
  namespace fs = std::filesystem;
  prepare_dir(out_dir);
  const Scenario sc = cfg.make_scenario();
  SimState state = initialize(sc, cfg.n_x, cfg.n_v, cfg.k);

  RunSummary s;
  s.initial = observe(state);
  s.final = s.initial;
  s.max_E_E = s.initial.E_E;

  std::vector<double> stops = cfg.snapshot_times;
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  if (stops.empty() || stops.back() < cfg.T) stops.push_back(cfg.T);

  const auto snapshot = [&](double t) {
    if (out_dir.empty()) return;
    auto fo = open_out(fs::path(out_dir) / ("f_t" + tag(t) + ".txt"));
    write_f_snapshot(fo, state.f);
    auto eo = open_out(fs::path(out_dir) / ("E_t" + tag(t) + ".txt"));
    write_E_snapshot(eo, state.field.E);
  };

  for (double stop : stops) {
    if (stop > state.t) {
      RunOptions o = options_for(cfg, cfg.time_control());
      o.T = stop;
      s.steps += run(state, o, [&](const SimState& st, double) { track(s, observe(st)); });
    }
    if (std::find(cfg.snapshot_times.begin(), cfg.snapshot_times.end(), stop) != cfg.snapshot_times.end()) {
      snapshot(stop);
    }
  }

  if (!out_dir.empty()) {
    write_series(fs::path(out_dir) / "series.csv", s);
    const auto m = compute_moments(state.f);
    auto out = open_out(fs::path(out_dir) / "summary.txt");
    out << "scenario = " << sc.name << '\n'
        << "scheme = " << cfg.scheme.name() << '\n'
        << "mode = " << to_string(cfg.mode) << '\n'
        << "steps = " << s.steps << '\n'
        << "t_final = " << format_number(state.t) << '\n'
        << "max_rel_energy_drift = " << format_number(s.max_rel_energy_drift) << '\n'
        << "max_rel_mass_drift = " << format_number(s.max_rel_mass_drift) << '\n'
        << "max_abs_momentum_dev = " << format_number(s.max_abs_momentum_dev) << '\n'
        << "gauss_res_final = " << format_number(s.final.gauss_res) << '\n'
        << "gauss_res_unscaled_final = "
        << format_number(gauss_residual(state.field.E, m.n, 1.0, state.ion_density)) << '\n';
  }
  return s;
}

std::vector<ReversibilityRow> run_reversibility_study(const RunConfig& cfg, const std::string& out_dir) {
  namespace fs = std::filesystem;
  prepare_dir(out_dir);
  const Scenario sc = cfg.make_scenario();
  const std::vector<int> meshes = cfg.meshes.empty() ? std::vector<int>{40, 60, 80, 100} : cfg.meshes;
  const std::vector<int> degrees = cfg.degrees.empty() ? std::vector<int>{1, 2, 3} : cfg.degrees;

  std::vector<ReversibilityRow> rows;
  for (int k : degrees) {
    std::vector<double> h, e1, e2, eE;
    const std::size_t first = rows.size();
    for (int n : meshes) {
      SimState state = initialize(sc, n, n, k);
      const PhaseSpaceField f0 = state.f;
      const DGFunction1D E0 = state.field.E;
      RunOptions o = options_for(cfg, cfg.time_control());
      o.T = cfg.T;
      run(state, o);
      state.f.reflect_velocity();
      o.T = 2.0 * cfg.T;
      run(state, o);
      state.f.reflect_velocity();
      const ErrorNorms e = error_norms(state.f, f0);
      ReversibilityRow row;
      row.k = k;
      row.n = n;
      row.f_L1 = e.L1;
      row.f_L2 = e.L2;
      row.E_L2 = field_error(state.field.E, E0);
      rows.push_back(row);
      h.push_back(state.f.mesh_x().width());
      e1.push_back(row.f_L1);
      e2.push_back(row.f_L2);
      eE.push_back(row.E_L2);
    }
    if (h.size() >= 2) {
      const auto o1 = convergence_order(h, e1);
      const auto o2 = convergence_order(h, e2);
      const auto oE = convergence_order(h, eE);
      for (std::size_t i = 0; i < o1.size(); ++i) {
        rows[first + i + 1].order_f_L1 = o1[i];
        rows[first + i + 1].order_f_L2 = o2[i];
        rows[first + i + 1].order_E_L2 = oE[i];
      }
    }
  }

  if (!out_dir.empty()) {
    auto out = open_out(fs::path(out_dir) / "reversibility.csv");
    const auto opt = [](const std::optional<double>& o) { return o ? format_number(*o) : std::string(); };
    out << "k,N,f_L1,order_f_L1,f_L2,order_f_L2,E_L2,order_E_L2\n";
    for (const auto& r : rows) {
      out << r.k << ',' << r.n << ',' << format_number(r.f_L1) << ',' << opt(r.order_f_L1) << ','
          << format_number(r.f_L2) << ',' << opt(r.order_f_L2) << ',' << format_number(r.E_L2) << ','
          << opt(r.order_E_L2) << '\n';
    }
  }
  return rows;
}

TemporalResult run_temporal_study(const RunConfig& cfg, const std::string& out_dir) {
  namespace fs = std::filesystem;
  prepare_dir(out_dir);
  const Scenario sc = cfg.make_scenario();
  const std::vector<SplittingScheme> schemes =
      cfg.schemes.empty() ? std::vector<SplittingScheme>{cfg.scheme} : cfg.schemes;
  const bool fixed = !cfg.dts.empty();
  std::vector<double> hs = fixed ? cfg.dts : cfg.cfls;
  if (hs.empty()) hs = {0.8, 0.4, 0.2, 0.1};
  const TimeControl ref_time = cfg.reference_dt ? TimeControl::fixed(*cfg.reference_dt)
                                                : TimeControl::cfl(cfg.reference_cfl.value_or(0.01));

  const SimState initial = initialize(sc, cfg.n_x, cfg.n_v, cfg.k);
  const auto reference = [&](const SplittingScheme& scheme) {
    RunOptions o;
    o.T = cfg.T;
    o.scheme = scheme;
    o.mode = cfg.mode;
    o.time = ref_time;
    SimState ref = initial;
    run(ref, o);
    return ref;
  };
  std::optional<SimState> shared;
  if (cfg.reference_scheme) shared = reference(*cfg.reference_scheme);

  TemporalResult result;
  for (const auto& scheme : schemes) {
    RunOptions o;
    o.T = cfg.T;
    o.scheme = scheme;
    o.mode = cfg.mode;
    const SimState ref = shared ? *shared : reference(scheme);
    std::vector<double> lh, le;
    for (double h : hs) {
      o.time = fixed ? TimeControl::fixed(h) : TimeControl::cfl(h);
      SimState st = initial;
      run(st, o);
      const ErrorNorms e = error_norms(st.f, ref.f);
      TemporalRow row{scheme.name(), h, e.L1, e.L2, field_error(st.field.E, ref.field.E)};
      result.rows.push_back(row);
      if (row.f_L1 > 0.0) {
        lh.push_back(std::log(h));
        le.push_back(std::log(row.f_L1));
      }
    }
    const double slope = lh.size() >= 2 ? least_squares_slope(lh, le) : std::nan("");
    result.slopes.emplace_back(scheme.name(), slope);
  }

  if (!out_dir.empty()) {
    auto out = open_out(fs::path(out_dir) / "temporal.csv");
    out << "scheme," << (fixed ? "dt" : "cfl") << ",f_L1,f_L2,E_L2\n";
    for (const auto& r : result.rows) {
      out << r.scheme << ',' << format_number(r.h) << ',' << format_number(r.f_L1) << ','
          << format_number(r.f_L2) << ',' << format_number(r.E_L2) << '\n';
    }
    auto so = open_out(fs::path(out_dir) / "temporal_slopes.csv");
    so << "scheme,slope_f_L1\n";
    for (const auto& [name, slope] : result.slopes) so << name << ',' << format_number(slope) << '\n';
  }
  return result;
}

std::vector<SweepRow> run_cfl_sweep(const RunConfig& cfg, const std::string& out_dir) {
  namespace fs = std::filesystem;
  prepare_dir(out_dir);
  const Scenario sc = cfg.make_scenario();
  const bool fixed = !cfg.dts.empty();
  std::vector<double> values = fixed ? cfg.dts : cfg.cfls;
  if (values.empty()) {
    if (cfg.dt) {
      values = {*cfg.dt};
    } else {
      values = cfg.cfl ? std::vector<double>{*cfg.cfl} : std::vector<double>{1, 10, 20, 40, 80};
    }
  }
  const bool use_dt = fixed || (cfg.cfls.empty() && cfg.dt);
  const std::vector<int> nxs = cfg.meshes.empty() ? std::vector<int>{cfg.n_x} : cfg.meshes;

  std::vector<SweepRow> rows;
  for (int nx : nxs) {
    for (double value : values) {
      SimState state = initialize(sc, nx, cfg.n_v, cfg.k);
      const RunSummary s =
          run_tracked(state, options_for(cfg, use_dt ? TimeControl::fixed(value) : TimeControl::cfl(value)));
      SweepRow row{nx, use_dt ? "dt" : "cfl", value, s.steps, s.max_rel_energy_drift,
                   s.max_rel_mass_drift, s.max_abs_momentum_dev, s.max_E_E};
      rows.push_back(row);
      if (!out_dir.empty()) {
        write_series(fs::path(out_dir) / ("series_nx" + std::to_string(nx) + "_" + row.control + tag(value) + ".csv"), s);
      }
    }
  }

  if (!out_dir.empty()) {
    auto out = open_out(fs::path(out_dir) / "cfl_sweep.csv");
    out << "N_x,control,value,steps,max_rel_energy_drift,max_rel_mass_drift,max_abs_momentum_dev,max_E_E\n";
    for (const auto& r : rows) {
      out << r.n_x << ',' << r.control << ',' << format_number(r.value) << ',' << r.steps << ','
          << format_number(r.max_rel_energy_drift) << ',' << format_number(r.max_rel_mass_drift) << ','
          << format_number(r.max_abs_momentum_dev) << ',' << format_number(r.max_E_E) << '\n';
    }
  }
  return rows;
}

}  // namespace ecsldg
