#include "gqd/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gqd/errors.hpp"
#include "gqd/tolerances.hpp"

namespace gqd {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kBuresPrefactor = 2.0 + std::numbers::sqrt2;

void check_q(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q = " + std::to_string(q) + " outside [0, 1]");
}

bool inside(const std::optional<double>& lo, const std::optional<double>& hi, double q) {
  return lo && hi && q >= *lo && q <= *hi;
}

double hdd_linear(const InitialState& s, double q) { return 4.0 * s.alpha_sq * s.beta_sq() * q; }
double hdd_root(const InitialState& s, double q) {
  return 1.0 - 2.0 * s.alpha_sq * std::sqrt(q * (1.0 - q));
}

double fid_linear(const InitialState& s, double q) { return 1.0 - s.alpha_sq * q; }
double fid_root(const InitialState& s, double q) { return 0.5 + std::sqrt(s.alpha_sq * q * (1.0 - q)); }
double fid_xi(const InitialState& s, double q) {
  const double arg = auxiliary_symbols(s, q).xi + 4.0 * s.alpha_sq * q * (1.0 - q);
  return 0.5 * (1.0 + std::sqrt(std::max(0.0, arg)));
}

enum class FidelityBranch { Linear, Root, Xi };

FidelityBranch fidelity_branch(const InitialState& s, double q) {
  const auto cp = critical_points(s);
  if (s.alpha_sq <= kThird) return FidelityBranch::Linear;
  if (s.alpha_sq <= 0.5) return inside(cp.qc3, cp.qc4, q) ? FidelityBranch::Root : FidelityBranch::Linear;
  return inside(cp.qc5, cp.qc6, q) ? FidelityBranch::Root : FidelityBranch::Xi;
}

double fidelity_derivative(const InitialState& s, double q) {
  const double a2 = s.alpha_sq;
  switch (fidelity_branch(s, q)) {
    case FidelityBranch::Linear:
      return -a2;
    case FidelityBranch::Root:
      return a2 * (1.0 - 2.0 * q) / (2.0 * std::sqrt(a2 * q * (1.0 - q)));
    case FidelityBranch::Xi: {
      const double ab2 = a2 * s.beta_sq();
      const double arg = auxiliary_symbols(s, q).xi + 4.0 * a2 * q * (1.0 - q);
      const double darg = 8.0 * (1.0 - ab2) * q - 4.0 + 4.0 * a2 * (1.0 - 2.0 * q);
      return 0.25 * darg / std::sqrt(arg);
    }
  }
  return 0.0;
}

}  // namespace

InitialState::InitialState(double a2) : alpha_sq(a2) {
  if (!(a2 >= 0.0 && a2 <= 1.0)) throw DomainError("alpha^2 = " + std::to_string(a2) + " outside [0, 1]");
}

double InitialState::alpha_beta() const noexcept { return std::sqrt(alpha_sq * beta_sq()); }

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::TDD: return "TDD";
    case Measure::HDD: return "HDD";
    case Measure::BDD: return "BDD";
  }
  return "?";
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "Increasing";
    case Monotonicity::Decreasing: return "Decreasing";
    case Monotonicity::Stationary: return "Stationary";
  }
  return "?";
}

CriticalPoints critical_points(const InitialState& s) {
  const double a2 = s.alpha_sq;
  const double b2 = s.beta_sq();
  CriticalPoints cp;
  if (a2 > kThird) {
    // beta * sqrt(3 a^2 - 1) taken as a single root keeps a^2 = 1/2 exact.
    const double disc = std::sqrt(b2 * (3.0 * a2 - 1.0));
    const double den = 2.0 * a2 * (1.0 + 4.0 * b2 * b2);
    cp.qc1 = ((2.0 - a2) - disc) / den;
    cp.qc2 = ((2.0 - a2) + disc) / den;
  }
  if (a2 > kThird && a2 <= 0.5) {
    const double alpha = std::sqrt(a2);
    const double disc = std::sqrt(3.0 * a2 - 1.0);
    const double den = 2.0 * alpha * (1.0 + a2);
    cp.qc3 = (2.0 * alpha - disc) / den;
    cp.qc4 = (2.0 * alpha + disc) / den;
  }
  // At alpha^2 = 1/2 this pair coincides with (q_c3, q_c4); both are reported.
  if (a2 >= 0.5) {
    const double ab = s.alpha_beta();
    const double den = 2.0 * (1.0 - a2 * b2);
    cp.qc5 = (1.0 - ab) / den;
    cp.qc6 = (1.0 + ab) / den;
  }
  return cp;
}

AuxiliarySymbols auxiliary_symbols(const InitialState& s, double q) {
  const double ab2 = s.alpha_sq * s.beta_sq();
  return {2.0 * s.alpha_sq * q - 1.0, 4.0 * (1.0 - ab2) * q * q - 4.0 * q + 1.0};
}

double tdd_closed(const InitialState& s, double q) {
  check_q(q);
  return 2.0 * s.alpha_beta() * q;
}

double hdd_closed(const InitialState& s, double q) {
  check_q(q);
  if (s.alpha_sq <= kThird) return hdd_linear(s, q);
  const auto cp = critical_points(s);
  return inside(cp.qc1, cp.qc2, q) ? hdd_root(s, q) : hdd_linear(s, q);
}

double bures_fidelity_closed(const InitialState& s, double q) {
  check_q(q);
  switch (fidelity_branch(s, q)) {
    case FidelityBranch::Linear: return fid_linear(s, q);
    case FidelityBranch::Root: return fid_root(s, q);
    case FidelityBranch::Xi: return fid_xi(s, q);
  }
  return 1.0;
}

double bdd_closed(const InitialState& s, double q) {
  const double f = std::min(1.0, bures_fidelity_closed(s, q));
  return std::sqrt(kBuresPrefactor * (1.0 - std::sqrt(f)));
}

double closed_form(Measure m, const InitialState& s, double q) {
  switch (m) {
    case Measure::TDD: return tdd_closed(s, q);
    case Measure::HDD: return hdd_closed(s, q);
    case Measure::BDD: return bdd_closed(s, q);
  }
  return 0.0;
}

double closed_form_derivative(Measure m, const InitialState& s, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("derivative needs q in (0, 1)");
  const double a2 = s.alpha_sq;
  switch (m) {
    case Measure::TDD:
      return 2.0 * s.alpha_beta();
    case Measure::HDD: {
      const auto cp = critical_points(s);
      if (a2 > kThird && inside(cp.qc1, cp.qc2, q)) {
        return -a2 * (1.0 - 2.0 * q) / std::sqrt(q * (1.0 - q));
      }
      return 4.0 * a2 * s.beta_sq();
    }
    case Measure::BDD: {
      const double f = bures_fidelity_closed(s, q);
      const double d = bdd_closed(s, q);
      if (d == 0.0) return 0.0;
      // dD/dF = -(2 + sqrt2) / (4 sqrt(F) D)
      return -kBuresPrefactor / (4.0 * std::sqrt(f) * d) * fidelity_derivative(s, q);
    }
  }
  return 0.0;
}

Monotonicity monotonicity_class(const InitialState& s, double q, Measure m) {
  if (!(s.alpha_sq > 0.0 && s.alpha_sq < 1.0)) {
    throw DomainError("monotonicity undefined for the product states alpha^2 in {0, 1}");
  }
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q = " + std::to_string(q) + " outside (0, 1)");
  const double d = closed_form_derivative(m, s, q);
  if (std::abs(d) < tol::stationary_derivative) return Monotonicity::Stationary;
  return d > 0.0 ? Monotonicity::Increasing : Monotonicity::Decreasing;
}

double bdd_threshold_alpha_sq() {
  // q_c3 falls monotonically from 0.75 to 1/3 on (1/3, 1/2]; bisect q_c3 = 1/2.
  double lo = kThird + 1e-15;
  double hi = 0.5;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double qc3 = *critical_points(InitialState(mid)).qc3;
    (qc3 > 0.5 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gqd
