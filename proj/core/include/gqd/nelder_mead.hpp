#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gqd/tolerances.hpp"

namespace gqd::optim {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  double tolerance = tol::nm_simplex;  // spread of objective values across the simplex
  int max_iterations = tol::nm_max_iterations;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Standard reflection / expansion / contraction / shrink simplex search.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts = {});

struct MultiStartOptions {
  int restarts = tol::tdd_restarts;
  std::uint64_t seed = 0x5eed5eedULL;
  double start_radius = 1.0;  // starts drawn uniformly in [-r, r]^n
  NelderMeadOptions local{};
};

// Runs `restarts` independent simplices from seeded random starts and keeps the
// best (ties broken by restart index). Throws OptimizerDiverged when a simplex
// hits the iteration cap without converging.
NelderMeadResult multi_start_minimize(const Objective& f, std::size_t n,
                                      const MultiStartOptions& opts = {});

}  // namespace gqd::optim
