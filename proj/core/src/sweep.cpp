#include "gqd/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

#include "gqd/errors.hpp"

namespace gqd {

namespace {

using json = nlohmann::json;

void check_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be an object");
  const std::set<std::string_view> ok(allowed);
  for (const auto& [key, _] : j.items()) {
    if (!ok.count(key)) throw ConfigError("unknown key '" + key + "' in " + std::string(where));
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

SpectralModel default_model(SpectralKind kind) {
  return kind == SpectralKind::Lorentzian ? SpectralModel{LorentzianParams{1.0, 0.5}, 1.0}
                                          : SpectralModel{OhmicParams{0.1, 3.0, 2.0}, 1.0};
}

SpectralKind parse_kind(std::string_view s) {
  if (s == "lorentzian") return SpectralKind::Lorentzian;
  if (s == "ohmic") return SpectralKind::OhmicLike;
  throw ConfigError("unknown spectral kind '" + std::string(s) + "'");
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

void write_text(const std::string& path, const std::string& text, std::ostream& stdout_sink) {
  if (path == "-") {
    stdout_sink << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Curves: return "curves";
    case Mode::RegionMap: return "region-map";
    case Mode::Trajectory: return "trajectory";
    case Mode::CrossCheck: return "cross-check";
  }
  return "?";
}

std::string_view to_string(Format f) { return f == Format::CSV ? "csv" : "json"; }

Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::Curves, Mode::RegionMap, Mode::Trajectory, Mode::CrossCheck}) {
    if (s == to_string(m)) return m;
  }
  throw ConfigError("unknown mode '" + std::string(s) + "'");
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::CSV;
  if (s == "json") return Format::JSON;
  throw ConfigError("unknown format '" + std::string(s) + "'");
}

RunConfig default_config(Mode mode, SpectralKind kind) {
  RunConfig cfg;
  cfg.mode = mode;
  cfg.spectral = default_model(kind);
  const bool lorentz = kind == SpectralKind::Lorentzian;
  const double t_max = lorentz && mode == Mode::RegionMap ? 50.0 : 10.0;
  cfg.solver = default_solver_config(cfg.spectral, t_max);
  cfg.sweep = lorentz ? SweepSpec{"lambda", 0.02, 1.98, 50, 500} : SweepSpec{"eta", 0.02, 1.0, 50, 500};
  return cfg;
}

void RunConfig::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(initial_state.alpha_sq)) throw ConfigError("alpha_sq must lie in [0, 1]");
  if (curve_alphas.empty()) throw ConfigError("curve_alphas must not be empty");
  for (double a : curve_alphas)
    if (!in_unit(a)) throw ConfigError("curve_alphas entries must lie in [0, 1]");
  if (curve_points < 2) throw ConfigError("curve_points must be >= 2");
  if (trajectory_rows < 2) throw ConfigError("trajectory_rows must be >= 2");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  try {
    spectral.validate();
    solver.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (mode == Mode::RegionMap) {
    const std::string expected = spectral.kind() == SpectralKind::Lorentzian ? "lambda" : "eta";
    if (sweep.param_name != expected) {
      throw ConfigError("sweep.param must be '" + expected + "' for this spectral kind");
    }
    if (sweep.steps < 2) throw ConfigError("sweep.steps must be >= 2");
    if (!(sweep.min > 0.0) || !(sweep.max >= sweep.min)) throw ConfigError("sweep range must be positive and ordered");
    if (sweep.time_samples < 1) throw ConfigError("sweep.time_samples must be >= 1");
  }
}

nlohmann::json RunConfig::to_json() const {
  json j;
  j["mode"] = to_string(mode);
  j["alpha_sq"] = initial_state.alpha_sq;
  j["curve_alphas"] = curve_alphas;
  j["curve_points"] = curve_points;
  j["trajectory_rows"] = trajectory_rows;
  json s;
  s["kind"] = to_string(spectral.kind());
  s["omega0"] = spectral.omega0;
  if (spectral.kind() == SpectralKind::Lorentzian) {
    s["gamma0"] = spectral.lorentzian().gamma0;
    s["lambda"] = spectral.lorentzian().lambda;
  } else {
    s["eta"] = spectral.ohmic().eta;
    s["s"] = spectral.ohmic().s;
    s["omega_c"] = spectral.ohmic().omega_c;
  }
  j["spectral"] = s;
  j["solver"] = {{"t_max", solver.t_max}, {"dt", solver.dt}};
  j["sweep"] = {{"param", sweep.param_name},
                {"min", sweep.min},
                {"max", sweep.max},
                {"steps", sweep.steps},
                {"time_samples", sweep.time_samples}};
  j["output"] = {{"path", output.path}, {"format", to_string(output.format)}};
  j["workers"] = workers;
  return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  check_keys(j, "config", {"mode", "alpha_sq", "curve_alphas", "curve_points", "trajectory_rows", "spectral",
                           "solver", "sweep", "output", "workers"});
  std::string mode_name = "curves";
  read(j, "mode", mode_name);
  const Mode mode = parse_mode(mode_name);

  SpectralKind kind = SpectralKind::Lorentzian;
  const json spec = j.value("spectral", json::object());
  if (!spec.is_object()) throw ConfigError("spectral must be an object");
  std::string kind_name = "lorentzian";
  read(spec, "kind", kind_name);
  kind = parse_kind(kind_name);

  RunConfig cfg = default_config(mode, kind);
  double a2 = cfg.initial_state.alpha_sq;
  read(j, "alpha_sq", a2);
  cfg.initial_state.alpha_sq = a2;
  read(j, "curve_alphas", cfg.curve_alphas);
  read(j, "curve_points", cfg.curve_points);
  read(j, "trajectory_rows", cfg.trajectory_rows);
  read(j, "workers", cfg.workers);

  if (kind == SpectralKind::Lorentzian) {
    check_keys(spec, "spectral", {"kind", "omega0", "gamma0", "lambda"});
    auto& p = std::get<LorentzianParams>(cfg.spectral.params);
    read(spec, "gamma0", p.gamma0);
    read(spec, "lambda", p.lambda);
  } else {
    check_keys(spec, "spectral", {"kind", "omega0", "eta", "s", "omega_c"});
    auto& p = std::get<OhmicParams>(cfg.spectral.params);
    read(spec, "eta", p.eta);
    read(spec, "s", p.s);
    read(spec, "omega_c", p.omega_c);
  }
  read(spec, "omega0", cfg.spectral.omega0);

  const json solver = j.value("solver", json::object());
  check_keys(solver, "solver", {"t_max", "dt"});
  read(solver, "t_max", cfg.solver.t_max);
  if (solver.contains("dt")) {
    read(solver, "dt", cfg.solver.dt);
  } else {
    try {
      cfg.solver.dt = default_solver_config(cfg.spectral, cfg.solver.t_max).dt;
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }

  const json sweep = j.value("sweep", json::object());
  check_keys(sweep, "sweep", {"param", "min", "max", "steps", "time_samples"});
  read(sweep, "param", cfg.sweep.param_name);
  read(sweep, "min", cfg.sweep.min);
  read(sweep, "max", cfg.sweep.max);
  read(sweep, "steps", cfg.sweep.steps);
  read(sweep, "time_samples", cfg.sweep.time_samples);

  const json output = j.value("output", json::object());
  check_keys(output, "output", {"path", "format"});
  read(output, "path", cfg.output.path);
  std::string format_name(to_string(cfg.output.format));
  read(output, "format", format_name);
  cfg.output.format = parse_format(format_name);
  return cfg;
}

CurveTable curve_table(const std::vector<double>& alphas, int points) {
  if (points < 2) throw DomainError("curve table needs at least 2 points");
  CurveTable t;
  t.alpha_sq = alphas;
  t.q = linspace(0.0, 1.0, points);
  for (double a : alphas) {
    const InitialState s(a);
    std::vector<double> dl, db;
    dl.reserve(t.q.size());
    db.reserve(t.q.size());
    for (double q : t.q) {
      dl.push_back(hdd_closed(s, q));
      db.push_back(bdd_closed(s, q));
    }
    t.d_l.push_back(std::move(dl));
    t.d_b.push_back(std::move(db));
  }
  return t;
}

Trajectory trajectory(const RunConfig& cfg) {
  const EvolutionRecord rec = derive_rates(solve(kernel(cfg.spectral), cfg.spectral.omega0, cfg.solver));
  const std::size_t n = rec.size();
  const std::size_t rows = std::min<std::size_t>(n, static_cast<std::size_t>(cfg.trajectory_rows));
  Trajectory out;
  out.rows.reserve(rows);
  std::size_t last = n;  // guards against repeated indices when rows ~ n
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t i = rows == 1 ? 0 : (r * (n - 1) + (rows - 1) / 2) / (rows - 1);
    if (i == last) continue;
    last = i;
    TrajectoryRow row;
    row.t = rec.times[i];
    row.q = rec.q[i];
    if (rec.rate_defined[i]) {
      row.gamma = rec.gamma[i];
      row.omega = rec.omega_shift[i];
    }
    row.d_t = tdd_closed(cfg.initial_state, row.q);
    row.d_l = hdd_closed(cfg.initial_state, row.q);
    row.d_b = bdd_closed(cfg.initial_state, row.q);
    out.rows.push_back(row);
  }
  return out;
}

RunResult run(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log) {
  RunResult result;
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    result.status = 2;
    return result;
  }

  const json config_json = cfg.to_json();
  try {
    std::string text;
    switch (cfg.mode) {
      case Mode::Curves: {
        text = serialize(curve_table(cfg.curve_alphas, cfg.curve_points), cfg.output.format, config_json);
        result.summary = "curves: " + std::to_string(cfg.curve_alphas.size()) + " alpha^2 values";
        break;
      }
      case Mode::RegionMap: {
        RegionMapRequest req;
        req.state = cfg.initial_state;
        req.family = cfg.spectral;
        req.param_min = cfg.sweep.min;
        req.param_max = cfg.sweep.max;
        req.param_steps = cfg.sweep.steps;
        req.solver = cfg.solver;
        req.time_samples = cfg.sweep.time_samples;
        req.workers = cfg.workers;
        const RegionMap map = region_map(req);
        result.failures = map.failures;
        text = serialize(map, cfg.output.format, config_json);
        result.summary = "region-map: " + std::to_string(map.cells.size()) + " cells";
        break;
      }
      case Mode::Trajectory: {
        const Trajectory traj = trajectory(cfg);
        text = serialize(traj, cfg.output.format, config_json);
        result.summary = "trajectory: " + std::to_string(traj.rows.size()) + " rows";
        break;
      }
      case Mode::CrossCheck: {
        const auto checks = run_cross_checks();
        std::size_t passed = 0;
        for (const auto& c : checks) {
          log << (c.passed ? "PASS " : "FAIL ") << c.name << " worst=" << format_double(c.worst)
              << " tol=" << format_double(c.tolerance) << "\n";
          if (c.passed) {
            ++passed;
          } else {
            result.failures.push_back(c.name);
          }
        }
        text = serialize(checks, cfg.output.format, config_json);
        result.summary = "cross-check: " + std::to_string(passed) + "/" + std::to_string(checks.size()) + " passed";
        break;
      }
    }
    write_text(cfg.output.path, text, stdout_sink);
  } catch (const Error& e) {
    log << "runtime error: " << e.what() << "\n";
    result.status = 1;
    result.failures.push_back(e.what());
    return result;
  }

  if (!result.failures.empty()) {
    result.status = 1;
    std::string manifest;
    for (const auto& f : result.failures) manifest += f + "\n";
    if (cfg.output.path == "-") {
      log << "failures:\n" << manifest;
    } else {
      try {
        write_text(cfg.output.path + ".failures", manifest, stdout_sink);
      } catch (const IoError& e) {
        log << e.what() << "\n";
      }
    }
  }
  log << result.summary << "\n";
  return result;
}

}  // namespace gqd
