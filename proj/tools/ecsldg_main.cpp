// ecsldg: command-line driver for single runs and the convergence/conservation studies.
//
//   ecsldg run          --config cfg.ini --out out/
//   ecsldg reversibility --preset table1 --out out/
//   ecsldg temporal     --preset temporal_64
//   ecsldg cfl-sweep    --preset two_stream_I_cfl_sweep --threads 4
//
// Exit status: 0 success, 2 configuration error, 3 solver failure, 1 other
// (I/O) failure.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ecsldg/error.hpp"
#include "ecsldg/parallel.hpp"
#include "ecsldg/studies.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_solver = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ecsldg::InputError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int thread_count(int from_flag) {
  if (const char* env = std::getenv("ECSLDG_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) throw ecsldg::InputError("ECSLDG_THREADS must be a positive integer");
    return static_cast<int>(n);
  }
  return from_flag;
}

std::string fmt(double x) { return ecsldg::format_number(x); }

void report(const ecsldg::RunSummary& s) {
  std::cout << "steps " << s.steps << "\n"
            << "t_final " << fmt(s.final.t) << "\n"
            << "max_rel_energy_drift " << fmt(s.max_rel_energy_drift) << "\n"
            << "max_rel_mass_drift " << fmt(s.max_rel_mass_drift) << "\n"
            << "max_abs_momentum_dev " << fmt(s.max_abs_momentum_dev) << "\n";
}

void report(const std::vector<ecsldg::ReversibilityRow>& rows) {
  const auto opt = [](const std::optional<double>& o) {
    char buf[16];
    if (!o) return std::string("   -  ");
    std::snprintf(buf, sizeof buf, "%6.2f", *o);
    return std::string(buf);
  };
  std::printf("%2s %5s %12s %6s %12s %6s %12s %6s\n", "k", "N", "f_L1", "order", "f_L2", "order", "E_L2", "order");
  for (const auto& r : rows) {
    std::printf("%2d %5d %12.3e %s %12.3e %s %12.3e %s\n", r.k, r.n, r.f_L1, opt(r.order_f_L1).c_str(), r.f_L2,
                opt(r.order_f_L2).c_str(), r.E_L2, opt(r.order_E_L2).c_str());
  }
}

void report(const ecsldg::TemporalResult& r) {
  std::printf("%-8s %10s %12s %12s %12s\n", "scheme", "h", "f_L1", "f_L2", "E_L2");
  for (const auto& row : r.rows) {
    std::printf("%-8s %10.4g %12.3e %12.3e %12.3e\n", row.scheme.c_str(), row.h, row.f_L1, row.f_L2, row.E_L2);
  }
  for (const auto& [name, slope] : r.slopes) std::printf("slope %-8s %.3f\n", name.c_str(), slope);
}

void report(const std::vector<ecsldg::SweepRow>& rows) {
  std::printf("%5s %4s %8s %7s %14s %14s %14s\n", "N_x", "ctl", "value", "steps", "dE_total", "dL1", "|dP|");
  for (const auto& r : rows) {
    std::printf("%5d %4s %8.4g %7ld %14.3e %14.3e %14.3e\n", r.n_x, r.control.c_str(), r.value, r.steps,
                r.max_rel_energy_drift, r.max_rel_mass_drift, r.max_abs_momentum_dev);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-conserving semi-Lagrangian DG solver for the 1D1V Vlasov-Ampere system"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string preset_name;
  int threads = 1;
  bool list = false;
  app.add_flag("--list-presets", list, "Print the preset names and exit");

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Configuration file");
    sub->add_option("--out", out_dir, "Output directory (overrides [output] dir)");
    sub->add_option("--preset", preset_name, "Named configuration");
    sub->add_option("--threads", threads, "Worker threads (ECSLDG_THREADS overrides)")->check(CLI::PositiveNumber);
  };
  CLI::App* run_cmd = app.add_subcommand("run", "Single simulation (or the study named in the config)");
  CLI::App* rev_cmd = app.add_subcommand("reversibility", "Spatial errors by time reversal");
  CLI::App* tmp_cmd = app.add_subcommand("temporal", "Temporal convergence study");
  CLI::App* swp_cmd = app.add_subcommand("cfl-sweep", "Conservation over a set of time steps");
  CLI::App* lst_cmd = app.add_subcommand("presets", "List preset names");
  for (CLI::App* sub : {run_cmd, rev_cmd, tmp_cmd, swp_cmd}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  if (list || lst_cmd->parsed()) {
    for (const auto& name : ecsldg::preset_names()) std::cout << name << "\n";
    return 0;
  }

  try {
    ecsldg::set_num_threads(thread_count(threads));
    if (config_path.empty() == preset_name.empty()) {
      throw ecsldg::InputError("give exactly one of --config and --preset");
    }
    ecsldg::RunConfig cfg = config_path.empty() ? ecsldg::preset(preset_name)
                                                : ecsldg::parse_config(read_file(config_path));
    if (!out_dir.empty()) cfg.out_dir = out_dir;

    ecsldg::StudyKind kind = cfg.study;
    if (rev_cmd->parsed()) kind = ecsldg::StudyKind::reversibility;
    if (tmp_cmd->parsed()) kind = ecsldg::StudyKind::temporal_convergence;
    if (swp_cmd->parsed()) kind = ecsldg::StudyKind::cfl_sweep;
    if (kind != cfg.study) {
      cfg.study = kind;
      ecsldg::validate(cfg);
    }

    switch (kind) {
      case ecsldg::StudyKind::single:
        report(ecsldg::run_single(cfg, cfg.out_dir));
        break;
      case ecsldg::StudyKind::spatial_convergence:
      case ecsldg::StudyKind::reversibility:
        report(ecsldg::run_reversibility_study(cfg, cfg.out_dir));
        break;
      case ecsldg::StudyKind::temporal_convergence:
        report(ecsldg::run_temporal_study(cfg, cfg.out_dir));
        break;
      case ecsldg::StudyKind::cfl_sweep:
        report(ecsldg::run_cfl_sweep(cfg, cfg.out_dir));
        break;
    }
  } catch (const ecsldg::InputError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const ecsldg::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return exit_solver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
