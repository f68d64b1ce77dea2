#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gqd/reservoir.hpp"

namespace gqd {

// f(tau) by direct numerical quadrature of the spectral density, independent of the
// closed-form kernels. Extended-precision panel quadrature (one oscillation per panel)
// for the Ohmic-like family, Ooura's double-exponential Fourier rules for the Lorentzian.
std::complex<double> kernel_by_quadrature(const SpectralModel& model, double tau);

struct CheckResult {
  std::string name;
  double worst = 0.0;     // largest observed deviation
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool passed = false;
  std::string detail;
};

struct CrossCheckOptions {
  std::uint64_t seed = 20240611;
  int discord_grid = 11;  // (alpha^2, q) grid per side for the pipeline comparison
  int monotonicity_samples = 10000;
  int kraus_samples = 100;
  int kernel_models = 20;
};

// Every oracle comparison the toolkit ships: Lorentzian memory-kernel solver vs exact
// solution, kernels vs quadrature, closed-form vs pipeline discords, Kraus vs X-state
// construction, monotonicity classes vs finite differences.
std::vector<CheckResult> run_cross_checks(const CrossCheckOptions& opts = {});

CheckResult check_lorentzian_solver();
CheckResult check_kernels(const CrossCheckOptions& opts);
std::vector<CheckResult> check_discord_pipelines(const CrossCheckOptions& opts);
CheckResult check_kraus(const CrossCheckOptions& opts);
CheckResult check_monotonicity(const CrossCheckOptions& opts);

}  // namespace gqd
