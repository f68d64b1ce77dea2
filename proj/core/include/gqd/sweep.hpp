#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gqd/closed_form.hpp"
#include "gqd/crosscheck.hpp"
#include "gqd/flow.hpp"
#include "gqd/reservoir.hpp"
#include "gqd/volterra.hpp"

namespace gqd {

enum class Mode { Curves, RegionMap, Trajectory, CrossCheck };
enum class Format { CSV, JSON };

std::string_view to_string(Mode m);
std::string_view to_string(Format f);
Mode parse_mode(std::string_view s);      // throws ConfigError
Format parse_format(std::string_view s);  // throws ConfigError

struct SweepSpec {
  std::string param_name;  // "lambda" (in units of gamma0) or "eta"
  double min = 0.02;
  double max = 1.98;
  int steps = 50;
  int time_samples = 500;
};

struct OutputSpec {
  std::string path = "-";  // "-" writes to stdout
  Format format = Format::CSV;
};

struct RunConfig {
  Mode mode = Mode::Curves;
  InitialState initial_state{};
  std::vector<double> curve_alphas{0.1, 0.3, 0.5, 0.7, 0.9};
  int curve_points = 1001;
  int trajectory_rows = 1001;
  SpectralModel spectral{};
  SolverConfig solver{};
  SweepSpec sweep{};
  OutputSpec output{};
  int workers = 1;

  // Throws ConfigError on missing or inconsistent fields.
  void validate() const;
  nlohmann::json to_json() const;
  // Missing keys keep their defaults. Throws ConfigError.
  static RunConfig from_json(const nlohmann::json& j);
};

// Mode-dependent defaults: the Lorentzian window is t*gamma0 in (0, 50] with
// lambda/gamma0 in [0.02, 1.98]; the Ohmic-like window is t*w0 in (0, 10] with eta in [0.02, 1].
RunConfig default_config(Mode mode, SpectralKind kind);

struct CurveTable {
  std::vector<double> alpha_sq;
  std::vector<double> q;                  // strictly increasing in [0, 1]
  std::vector<std::vector<double>> d_l;   // [alpha index][q index]
  std::vector<std::vector<double>> d_b;

  bool operator==(const CurveTable&) const = default;
};

CurveTable curve_table(const std::vector<double>& alphas, int points);

struct TrajectoryRow {
  double t = 0.0;
  double q = 0.0;
  std::optional<double> gamma;
  std::optional<double> omega;
  double d_t = 0.0;
  double d_l = 0.0;
  double d_b = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;
};

// Solves the dynamics for cfg.spectral and evaluates the three discords along q(t).
Trajectory trajectory(const RunConfig& cfg);

// CSV: a '#' comment line holding the config JSON, a header row, LF endings, 17
// significant digits. JSON mirrors the same columns under "config" and a row array.
std::string serialize(const CurveTable& table, Format format, const nlohmann::json& config = {});
std::string serialize(const RegionMap& map, Format format, const nlohmann::json& config = {});
std::string serialize(const Trajectory& traj, Format format, const nlohmann::json& config = {});
std::string serialize(const std::vector<CheckResult>& checks, Format format, const nlohmann::json& config = {});

CurveTable parse_curve_table(const std::string& text, Format format);

std::string format_double(double v);

struct RunResult {
  int status = 0;  // 0 success, 1 runtime failure, 2 config error
  std::vector<std::string> failures;
  std::string summary;
};

// Executes one run and writes the artifact to cfg.output. Never throws for runtime or
// config failures; those are reported through the status code.
RunResult run(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log);

}  // namespace gqd
