#pragma once

#include <optional>
#include <string_view>

namespace gqd {

// Initial pure state alpha|10> + beta|01>, beta^2 = 1 - alpha^2. Only alpha^2 matters.
struct InitialState {
  double alpha_sq = 0.5;

  explicit InitialState(double a2);
  InitialState() = default;

  double beta_sq() const noexcept { return 1.0 - alpha_sq; }
  // alpha * beta with alpha, beta >= 0.
  double alpha_beta() const noexcept;
};

struct CriticalPoints {
  std::optional<double> qc1, qc2;  // alpha^2 > 1/3
  std::optional<double> qc3, qc4;  // alpha^2 in (1/3, 0.5]
  std::optional<double> qc5, qc6;  // alpha^2 >= 0.5
};

struct AuxiliarySymbols {
  double chi = 0.0;  // 2 alpha^2 q - 1
  double xi = 0.0;   // 4(1 - alpha^2 beta^2) q^2 - 4q + 1
};

enum class Measure { TDD, HDD, BDD };
enum class Monotonicity { Increasing, Decreasing, Stationary };

std::string_view to_string(Measure m);
std::string_view to_string(Monotonicity m);

CriticalPoints critical_points(const InitialState& s);
AuxiliarySymbols auxiliary_symbols(const InitialState& s, double q);

// All of these throw DomainError for q outside [0, 1].
double tdd_closed(const InitialState& s, double q);
double hdd_closed(const InitialState& s, double q);
// Maximal fidelity to the zero-discord set, piecewise in (alpha^2, q).
double bures_fidelity_closed(const InitialState& s, double q);
double bdd_closed(const InitialState& s, double q);
double closed_form(Measure m, const InitialState& s, double q);

// d(measure)/dq on the branch selected at q. q must lie in (0, 1).
double closed_form_derivative(Measure m, const InitialState& s, double q);

// Sign class of d(measure)/dq; Stationary when |derivative| < 1e-9.
// Throws DomainError for alpha^2 in {0, 1} or q outside (0, 1).
Monotonicity monotonicity_class(const InitialState& s, double q, Measure m);

// The alpha^2 at which q_c3 = 1/2 (about 0.382). Above it, BDD decreases on [q_c3, 0.5].
double bdd_threshold_alpha_sq();

}  // namespace gqd
