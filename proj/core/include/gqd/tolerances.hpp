#pragma once

namespace gqd::tol {

// Numerical thresholds shared by every module. Property tests read these
// directly so that a retune happens in exactly one place.

inline constexpr double hermitian_check = 1e-10;  // hermitian_eigen precondition
inline constexpr double density_hermitian = 1e-12;
inline constexpr double density_trace = 1e-12;
inline constexpr double eigen_clamp = -1e-10;  // eigenvalues above this are clamped to 0
inline constexpr double jacobi_offdiag = 1e-15;
inline constexpr int jacobi_max_sweeps = 64;

inline constexpr double x_shape = 1e-10;  // X-state and rho_14 = 0 checks

inline constexpr double nm_simplex = 1e-8;
inline constexpr int nm_max_iterations = 2000;
// The 9-parameter trace-distance search needs up to ~5000 steps on some starts.
inline constexpr int tdd_max_iterations = 20000;
inline constexpr int tdd_restarts = 20;
inline constexpr int angle_grid = 64;

inline constexpr double branch_continuity = 1e-9;
inline constexpr double stationary_derivative = 1e-9;

inline constexpr double critical_damping = 1e-8;  // |d| < this * lambda uses the series branch

inline constexpr double corrector_mismatch = 1e-3;
inline constexpr double q_undefined = 1e-12;
inline constexpr double q_clamp = 1e-9;
inline constexpr double flow_deadband = 1e-9;

}  // namespace gqd::tol
