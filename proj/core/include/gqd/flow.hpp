#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "gqd/closed_form.hpp"
#include "gqd/matrix.hpp"
#include "gqd/reservoir.hpp"
#include "gqd/tolerances.hpp"
#include "gqd/volterra.hpp"

namespace gqd {

// Two-qubit X state at survival factor q, basis {|11>, |10>, |01>, |00>}.
DensityMatrix two_qubit_state(const InitialState& s, double q);

// Applies the single-qubit damping map with amplitude p to both qubits of the initial
// pure state (Kraus form) and returns the max entrywise deviation from two_qubit_state(|p|^2).
double kraus_consistency_check(const InitialState& s, std::complex<double> p);

enum class GammaSign { Negative, Positive, Zero, Undefined };
enum class Enhancement { Enhanced, Degraded, Stationary, Undefined };

// Cyan: backflow and enhanced. Red: forward flow and enhanced. Orange: backflow and
// degraded. Plain: any other cell with a defined decay rate.
enum class Category { Cyan, Red, Orange, Plain, Undefined };

std::string_view to_string(GammaSign g);
std::string_view to_string(Enhancement e);
std::string_view to_string(Category c);

struct FlowCell {
  double param_value = 0.0;
  double t = 0.0;
  GammaSign gamma_sign = GammaSign::Undefined;
  std::array<Enhancement, 3> enhancement{Enhancement::Undefined, Enhancement::Undefined,
                                         Enhancement::Undefined};  // TDD, HDD, BDD

  Enhancement of(Measure m) const { return enhancement[static_cast<std::size_t>(m)]; }
};

Category category(const FlowCell& cell, Measure m);

// Chain rule: the discord grows iff its q-monotonicity and the sign of dq/dt agree.
// Cells with q <= 1e-12 are Undefined.
FlowCell classify_cell(const InitialState& s, double q, double dq_dt, double tol = tol::flow_deadband);

struct RegionMap {
  double alpha_sq = 0.0;
  SpectralKind kind = SpectralKind::Lorentzian;
  std::vector<double> params;
  std::vector<double> times;
  std::vector<FlowCell> cells;       // params.size() x times.size(), row per parameter value
  std::vector<std::string> failures;  // one entry per parameter row that could not be solved

  const FlowCell& at(std::size_t param_index, std::size_t time_index) const {
    return cells[param_index * times.size() + time_index];
  }
  std::size_t count(Measure m, Category c) const;
};

struct RegionMapRequest {
  InitialState state{};
  // Template: the swept parameter (lambda for Lorentzian, eta for Ohmic-like) is overwritten.
  SpectralModel family{};
  double param_min = 0.02;
  double param_max = 1.98;
  int param_steps = 50;
  SolverConfig solver{};  // t_max sets the time window; dt is used by the Volterra path only
  int time_samples = 500;
  int workers = 1;
};

// Lorentzian rows use the exact solution; Ohmic-like rows solve the memory-kernel
// equation. Rows are independent and may run on several workers; results are stored
// by index so the map does not depend on the worker count.
RegionMap region_map(const RegionMapRequest& req);

SpectralModel with_swept_parameter(const SpectralModel& family, double value);

}  // namespace gqd
