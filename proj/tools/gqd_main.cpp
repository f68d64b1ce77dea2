// gqd: reproduce discord curves, information-flow region maps and trajectories.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "gqd/errors.hpp"
#include "gqd/sweep.hpp"

namespace {

using nlohmann::json;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gqd::ConfigError("cannot read config '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw gqd::ConfigError("malformed config '" + path + "': " + e.what());
  }
}

struct Flags {
  std::string mode;
  std::string config_path;
  std::optional<double> alpha_sq, lambda, eta, s, omega_c, t_max, dt;
  std::optional<std::string> spectral, out, format;
  std::optional<int> steps, workers;
};

// Command-line values override the config file.
json merge(json j, const Flags& f) {
  if (!j.is_object()) throw gqd::ConfigError("config root must be an object");
  if (!f.mode.empty()) j["mode"] = f.mode;
  if (f.alpha_sq) j["alpha_sq"] = *f.alpha_sq;

  json& spec = j["spectral"];
  if (spec.is_null()) spec = json::object();
  if (f.spectral && spec.value("kind", std::string()) != *f.spectral) {
    // Switching families drops parameters of the other family.
    spec = json{{"kind", *f.spectral}};
  }
  if (f.lambda) spec["lambda"] = *f.lambda;
  if (f.eta) spec["eta"] = *f.eta;
  if (f.s) spec["s"] = *f.s;
  if (f.omega_c) spec["omega_c"] = *f.omega_c;
  if ((f.eta || f.s || f.omega_c) && !spec.contains("kind")) spec["kind"] = "ohmic";

  if (f.t_max) j["solver"]["t_max"] = *f.t_max;
  if (f.dt) j["solver"]["dt"] = *f.dt;
  if (f.steps) {
    const std::string mode = j.value("mode", std::string("curves"));
    if (mode == "curves") {
      j["curve_points"] = *f.steps;
    } else if (mode == "trajectory") {
      j["trajectory_rows"] = *f.steps;
    } else {
      j["sweep"]["steps"] = *f.steps;
    }
  }
  if (f.out) j["output"]["path"] = *f.out;
  if (f.format) j["output"]["format"] = *f.format;
  if (f.workers) j["workers"] = *f.workers;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric quantum discords under structured-reservoir dynamics"};
  app.require_subcommand(1);
  Flags f;
  CLI::App* run = app.add_subcommand("run", "Run one mode and write a table");
  run->add_option("--mode", f.mode, "curves | region-map | trajectory | cross-check")->required();
  run->add_option("--config", f.config_path, "JSON config file; flags override its values");
  run->add_option("--alpha-sq", f.alpha_sq, "initial-state weight alpha^2");
  run->add_option("--spectral", f.spectral, "lorentzian | ohmic");
  auto* lam = run->add_option("--lambda", f.lambda, "Lorentzian width (units of gamma0)");
  auto* eta = run->add_option("--eta", f.eta, "Ohmic-like coupling");
  auto* s = run->add_option("--s", f.s, "Ohmic-like exponent");
  auto* wc = run->add_option("--omega-c", f.omega_c, "Ohmic-like cutoff (units of omega0)");
  lam->excludes(eta)->excludes(s)->excludes(wc);
  run->add_option("--t-max", f.t_max, "time window");
  run->add_option("--dt", f.dt, "solver step");
  run->add_option("--steps", f.steps, "sweep steps / curve points / trajectory rows");
  run->add_option("--out", f.out, "output path ('-' for stdout)");
  run->add_option("--format", f.format, "csv | json");
  run->add_option("--workers", f.workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gqd::RunConfig cfg;
  try {
    json base = f.config_path.empty() ? json::object() : load_config(f.config_path);
    cfg = gqd::RunConfig::from_json(merge(std::move(base), f));
  } catch (const gqd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return gqd::run(cfg, std::cout, std::cerr).status;
}
