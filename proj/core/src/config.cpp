#include "ecsldg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "ecsldg/error.hpp"

namespace ecsldg {

std::string to_string(StudyKind kind) {
  switch (kind) {
    case StudyKind::single: return "single";
    case StudyKind::spatial_convergence: return "spatial_convergence";
    case StudyKind::temporal_convergence: return "temporal_convergence";
    case StudyKind::reversibility: return "reversibility";
    case StudyKind::cfl_sweep: return "cfl_sweep";
  }
  return "?";
}

TimeControl RunConfig::time_control() const {
  if (cfl) return TimeControl::cfl(*cfl);
  if (dt) return TimeControl::fixed(*dt);
  throw InputError("no time control: set CFL or dt");
}

Scenario RunConfig::make_scenario() const {
  Scenario sc = scenario_by_name(scenario);
  sc.v_max = v_max;
  sc.lambda = lambda;
  sc.init_lambda = init_lambda;
  return sc;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::map<std::string, std::string>& key_sections() {
  static const std::map<std::string, std::string> m = {
      {"scenario", "run"},     {"study", "run"},        {"t", "run"},
      {"cfl", "run"},          {"dt", "run"},           {"scheme", "run"},
      {"mode", "run"},         {"n_x", "mesh"},         {"n_v", "mesh"},
      {"k", "mesh"},           {"v_max", "mesh"},       {"lambda", "physics"},
      {"init_lambda", "physics"}, {"dir", "output"},    {"snapshot_times", "output"},
      {"meshes", "study"},     {"degrees", "study"},    {"cfls", "study"},
      {"dts", "study"},        {"schemes", "study"},    {"reference_cfl", "study"},
      {"reference_dt", "study"}, {"reference_scheme", "study"},
  };
  return m;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const char* b = v.data();
  const char* e = v.data() + v.size();
  auto [p, ec] = std::from_chars(b, e, out);
  if (ec != std::errc() || p != e || !std::isfinite(out)) {
    throw InputError("key '" + key + "': expected a number, got '" + v + "'");
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const char* b = v.data();
  const char* e = v.data() + v.size();
  auto [p, ec] = std::from_chars(b, e, out);
  if (ec != std::errc() || p != e) throw InputError("key '" + key + "': expected an integer, got '" + v + "'");
  return out;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

StudyKind parse_study(const std::string& v) {
  const std::string s = lower(v);
  if (s == "single") return StudyKind::single;
  if (s == "spatial_convergence") return StudyKind::spatial_convergence;
  if (s == "temporal_convergence" || s == "temporal") return StudyKind::temporal_convergence;
  if (s == "reversibility") return StudyKind::reversibility;
  if (s == "cfl_sweep") return StudyKind::cfl_sweep;
  throw InputError("key 'study': unknown study kind '" + v + "'");
}

void assign(RunConfig& cfg, const std::string& key, const std::string& v) {
  if (key == "scenario") {
    cfg.scenario = v;
  } else if (key == "study") {
    cfg.study = parse_study(v);
  } else if (key == "t") {
    cfg.T = to_double(key, v);
  } else if (key == "cfl") {
    cfg.cfl = to_double(key, v);
  } else if (key == "dt") {
    cfg.dt = to_double(key, v);
  } else if (key == "scheme") {
    cfg.scheme = parse_scheme(v);
  } else if (key == "mode") {
    cfg.mode = parse_field_mode(v);
  } else if (key == "n_x") {
    cfg.n_x = to_int(key, v);
  } else if (key == "n_v") {
    cfg.n_v = to_int(key, v);
  } else if (key == "k") {
    cfg.k = to_int(key, v);
  } else if (key == "v_max") {
    cfg.v_max = to_double(key, v);
  } else if (key == "lambda") {
    cfg.lambda = to_double(key, v);
  } else if (key == "init_lambda") {
    cfg.init_lambda = to_double(key, v);
  } else if (key == "dir") {
    cfg.out_dir = v;
  } else if (key == "snapshot_times") {
    cfg.snapshot_times.clear();
    for (const auto& s : split_list(v)) cfg.snapshot_times.push_back(to_double(key, s));
  } else if (key == "meshes") {
    cfg.meshes.clear();
    for (const auto& s : split_list(v)) cfg.meshes.push_back(to_int(key, s));
  } else if (key == "degrees") {
    cfg.degrees.clear();
    for (const auto& s : split_list(v)) cfg.degrees.push_back(to_int(key, s));
  } else if (key == "cfls") {
    cfg.cfls.clear();
    for (const auto& s : split_list(v)) cfg.cfls.push_back(to_double(key, s));
  } else if (key == "dts") {
    cfg.dts.clear();
    for (const auto& s : split_list(v)) cfg.dts.push_back(to_double(key, s));
  } else if (key == "schemes") {
    cfg.schemes.clear();
    for (const auto& s : split_list(v)) cfg.schemes.push_back(parse_scheme(s));
  } else if (key == "reference_cfl") {
    cfg.reference_cfl = to_double(key, v);
  } else if (key == "reference_dt") {
    cfg.reference_dt = to_double(key, v);
  } else if (key == "reference_scheme") {
    cfg.reference_scheme = parse_scheme(v);
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.scenario.empty()) throw InputError("missing key 'scenario'");
  (void)scenario_by_name(cfg.scenario);
  if (cfg.cfl && cfg.dt) throw InputError("time control over-specified: set only one of 'CFL' and 'dt'");
  const bool lists = !cfg.cfls.empty() || !cfg.dts.empty();
  const bool needs_time = cfg.study == StudyKind::single || cfg.study == StudyKind::reversibility ||
                          cfg.study == StudyKind::spatial_convergence ||
                          (!lists && (cfg.study == StudyKind::cfl_sweep ||
                                      cfg.study == StudyKind::temporal_convergence));
  if (needs_time && !cfg.cfl && !cfg.dt) throw InputError("missing time control: set 'CFL' or 'dt'");
  if (cfg.cfl && !(*cfg.cfl > 0.0)) throw InputError("key 'CFL' must be positive");
  if (cfg.dt && !(*cfg.dt > 0.0)) throw InputError("key 'dt' must be positive");
  if (!(cfg.T > 0.0)) throw InputError("key 'T' must be set to a positive value");
  if (cfg.n_x < 4) throw InputError("key 'N_x' must be >= 4");
  if (cfg.n_v < 4) throw InputError("key 'N_v' must be >= 4");
  if (cfg.k < 0 || cfg.k > max_rule_order - 1) throw InputError("key 'k' out of range");
  if (!(cfg.v_max > 0.0)) throw InputError("key 'v_max' must be positive");
  if (!(cfg.lambda > 0.0)) throw InputError("key 'lambda' must be positive");
  if (cfg.init_lambda < 0.0) throw InputError("key 'init_lambda' must be non-negative");
  for (double t : cfg.snapshot_times) {
    if (!(t > 0.0) || t > cfg.T) throw InputError("key 'snapshot_times': each time must lie in (0, T]");
  }
  for (int n : cfg.meshes) {
    if (n < 4) throw InputError("key 'meshes': every mesh must have >= 4 cells");
  }
  for (int d : cfg.degrees) {
    if (d < 1 || d > 3) throw InputError("key 'degrees': entries must lie in [1, 3]");
  }
  for (double c : cfg.cfls) {
    if (!(c > 0.0)) throw InputError("key 'cfls': entries must be positive");
  }
  for (double d : cfg.dts) {
    if (!(d > 0.0)) throw InputError("key 'dts': entries must be positive");
  }
  if (cfg.reference_cfl && cfg.reference_dt) {
    throw InputError("time control over-specified: set only one of 'reference_cfl' and 'reference_dt'");
  }
  if (!cfg.cfls.empty() && !cfg.dts.empty()) {
    throw InputError("time control over-specified: set only one of 'cfls' and 'dts'");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::string section;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError("line " + std::to_string(line_no) + ": malformed section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      static const std::set<std::string> known = {"run", "mesh", "physics", "output", "study"};
      if (!known.count(section)) throw InputError("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key_text = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string key = lower(key_text);
    const auto it = key_sections().find(key);
    if (it == key_sections().end()) throw InputError("unknown key '" + key_text + "'");
    if (!section.empty() && it->second != section) {
      throw InputError("key '" + key_text + "' belongs in section [" + it->second + "], not [" + section + "]");
    }
    if (!seen.insert(key).second) throw InputError("duplicate key '" + key_text + "'");
    if (value.empty()) throw InputError("key '" + key_text + "' has no value");
    assign(cfg, key, value);
  }
  validate(cfg);
  return cfg;
}

namespace {

const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> m = {
      {"table1",
       "[run]\nscenario = weak_landau\nstudy = reversibility\nT = 0.5\nCFL = 0.1\nscheme = ss3\n"
       "[study]\nmeshes = 40, 60, 80, 100\ndegrees = 1, 2, 3\n"},
      {"temporal",
       "[run]\nscenario = weak_landau\nstudy = temporal_convergence\nT = 5\n"
       "[mesh]\nN_x = 128\nN_v = 128\n"
       "[study]\ncfls = 0.8, 0.4, 0.2, 0.1\nreference_cfl = 0.01\nschemes = 10lie, ss3, strang\n"},
      {"temporal_64",
       "[run]\nscenario = weak_landau\nstudy = temporal_convergence\nT = 5\n"
       "[mesh]\nN_x = 64\nN_v = 64\nk = 3\n"
       "[study]\ndts = 0.8, 0.4, 0.2, 0.1\nreference_cfl = 0.01\nschemes = 10lie, ss3, strang\n"},
      {"weak_landau_cfl1",
       "[run]\nscenario = weak_landau\nT = 50\nCFL = 1\nscheme = ss3\n[mesh]\nN_x = 128\nN_v = 128\n"},
      {"weak_landau_ae_cfl1",
       "[run]\nscenario = weak_landau\nT = 50\nCFL = 1\nscheme = ss3\nmode = ae\n[mesh]\nN_x = 128\nN_v = 128\n"},
      {"strong_landau_cfl10",
       "[run]\nscenario = strong_landau\nT = 50\nCFL = 10\nscheme = 10lie\n[mesh]\nN_x = 128\nN_v = 128\n"
       "[output]\nsnapshot_times = 50\n"},
      {"strong_landau_cfl20",
       "[run]\nscenario = strong_landau\nT = 50\nCFL = 20\nscheme = 10lie\n[mesh]\nN_x = 128\nN_v = 128\n"
       "[output]\nsnapshot_times = 50\n"},
      {"strong_landau_vp",
       "[run]\nscenario = strong_landau\nT = 50\nCFL = 1\nscheme = strang\nmode = vp\n"
       "[mesh]\nN_x = 128\nN_v = 128\n[output]\nsnapshot_times = 50\n"},
      {"two_stream_I_cfl_sweep",
       "[run]\nscenario = two_stream_I\nstudy = cfl_sweep\nT = 50\nscheme = 10lie\n"
       "[mesh]\nN_x = 128\nN_v = 128\n[study]\ncfls = 1, 10, 20, 40, 80\n"},
      {"two_stream_I_cfl20",
       "[run]\nscenario = two_stream_I\nT = 50\nCFL = 20\nscheme = 10lie\n[mesh]\nN_x = 128\nN_v = 128\n"
       "[output]\nsnapshot_times = 20, 50\n"},
      {"two_stream_II_nx_sweep",
       "[run]\nscenario = two_stream_II\nstudy = cfl_sweep\nT = 50\nscheme = 10lie\n"
       "[mesh]\nN_v = 128\n[study]\ncfls = 10\nmeshes = 32, 64, 128\n"},
      {"two_stream_II_dt02",
       "[run]\nscenario = two_stream_II\nT = 50\ndt = 0.2\nscheme = 10lie\n[mesh]\nN_x = 128\nN_v = 256\n"
       "[output]\nsnapshot_times = 50\n"},
      {"two_stream_II_lambda001",
       "[run]\nscenario = two_stream_II\nstudy = cfl_sweep\nT = 50\nscheme = 10lie\n"
       "[mesh]\nN_x = 128\nN_v = 128\n[physics]\nlambda = 0.01\ninit_lambda = 1\n"
       "[study]\ndts = 0.05, 0.1, 0.2\n"},
  };
  return m;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : presets()) out.push_back(name);
  return out;
}

std::string preset_text(std::string_view name) {
  const auto it = presets().find(std::string(name));
  if (it == presets().end()) throw InputError("unknown preset '" + std::string(name) + "'");
  return it->second;
}

RunConfig preset(std::string_view name) { return parse_config(preset_text(name)); }

}  // namespace ecsldg
