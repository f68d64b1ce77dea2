#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gqd/reservoir.hpp"

namespace gqd {

enum class Frame { Rotating };
enum class Quadrature { Trapezoid };

struct SolverConfig {
  double t_max = 10.0;
  double dt = 1e-3;
  Frame frame = Frame::Rotating;
  Quadrature quadrature = Quadrature::Trapezoid;

  // Throws DomainError unless 0 < dt <= t_max / 100.
  void validate() const;
  std::size_t steps() const;
};

// dt = 1e-3 / gamma0 (Lorentzian) or 1e-3 / omega_c (Ohmic-like), capped at t_max / 100.
SolverConfig default_solver_config(const SpectralModel& model, double t_max);

struct EvolutionRecord {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<std::complex<double>> p;
  std::vector<double> q;
  std::vector<double> gamma;
  std::vector<double> omega_shift;
  std::vector<std::uint8_t> rate_defined;  // 0 where q < 1e-12 makes Gamma / Omega undefined

  std::size_t size() const noexcept { return times.size(); }
};

// Integrates p' + i w0 p + int_0^t f(t - t1) p(t1) dt1 = 0 with p(0) = 1 in the frame
// rotating at w0. Rates are left empty; call derive_rates.
// Throws StepTooLarge when predictor and corrector disagree by more than 1e-3.
EvolutionRecord solve(const KernelFunction& kernel, double omega0, const SolverConfig& cfg);

// Gamma from central differences of ln q, Omega = -2 d(arg p)/dt; one-sided at the ends.
EvolutionRecord derive_rates(EvolutionRecord rec);

// dq/dt by central differences (one-sided at the ends).
std::vector<double> dq_dt(const EvolutionRecord& rec);

// omega0 * rho11(0) * q(t).
std::vector<double> energy(const EvolutionRecord& rec, double rho11_initial, double omega0);

}  // namespace gqd
