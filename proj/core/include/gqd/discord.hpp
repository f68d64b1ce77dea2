#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "gqd/matrix.hpp"
#include "gqd/tolerances.hpp"

namespace gqd {

// Direction on the Bloch sphere; theta in [0, pi], phi in [0, 2 pi).
struct MeasurementDirection {
  double theta = 0.0;
  double phi = 0.0;

  // Wraps arbitrary angles into the canonical ranges (same unit vector).
  static MeasurementDirection normalized(double theta, double phi);
  std::array<double, 3> unit_vector() const;
};

// chi = p1 Pi_1 (x) rho_1 + (1 - p1) Pi_2 (x) rho_2, with Pi_{1,2} = (I +- u.sigma)/2.
struct ZeroDiscordState {
  double p1 = 1.0;
  MeasurementDirection projector_dir{};
  std::array<double, 3> bloch_b1{};
  std::array<double, 3> bloch_b2{};

  ComplexMatrix matrix() const;
  // Maps 9 unconstrained reals onto a valid state: p1 = sin^2 x0, projector angles (x1, x2),
  // Bloch vectors of length sin^2 x3 (sin^2 x6) along the polar angles (x4, x5) ((x7, x8)).
  static ZeroDiscordState from_parameters(const std::array<double, 9>& x);
};

enum class Method { ClosedForm, EigenPipeline, BruteForce };
std::string_view to_string(Method m);

struct DiscordValue {
  double value = 0.0;
  Method method = Method::ClosedForm;
};

struct DiscordTriple {
  DiscordValue d_t;
  DiscordValue d_l;
  DiscordValue d_b;
};

// 2|rho_23| for X states with rho_14 = 0. Throws NotXState / UnsupportedXState.
double tdd_x_state(const DensityMatrix& rho);

struct BruteForceOptions {
  int restarts = tol::tdd_restarts;
  std::uint64_t seed = 0x7dd5eedULL;
  int max_iterations = tol::tdd_max_iterations;
};

// min over the 9-parameter zero-discord family of ||rho - chi||_1. Upper bound on
// the trace-distance discord. Stops early once a restart reaches the simplex tolerance
// (the objective is a norm). Throws OptimizerDiverged.
double tdd_bruteforce(const DensityMatrix& rho, int restarts = tol::tdd_restarts);
double tdd_bruteforce(const DensityMatrix& rho, const BruteForceOptions& opts);

// 3x3 real matrix W_ij = Tr{ sqrt(rho) (sigma_i (x) I) sqrt(rho) (sigma_j (x) I) }.
std::array<std::array<double, 3>, 3> hellinger_w_matrix(const DensityMatrix& rho);

// 1 - lambda_max(W).
double hdd_eigen(const DensityMatrix& rho);

// 2 || sqrt(rho) - Pi^A(sqrt(rho)) ||_2^2 for the von Neumann measurement along `dir`.
double hellinger_measurement_distance(const ComplexMatrix& sqrt_rho, const MeasurementDirection& dir);

// Grid over (theta, phi) followed by local simplex refinement.
double hdd_bruteforce(const DensityMatrix& rho, int grid = tol::angle_grid);

// (1/2)(1 - Tr L + 2 (lambda_1 + lambda_2)) with L = sqrt(rho)(u.sigma (x) I)sqrt(rho).
double bures_fidelity_objective(const ComplexMatrix& sqrt_rho, const MeasurementDirection& dir);

// Maximum of the above over the sphere.
double bures_fidelity_max(const DensityMatrix& rho, int grid = tol::angle_grid);

// sqrt((2 + sqrt 2)(1 - sqrt F_max)).
double bdd_fidelity_max(const DensityMatrix& rho, int grid = tol::angle_grid);
double bures_discord_from_fidelity(double f_max);

}  // namespace gqd
