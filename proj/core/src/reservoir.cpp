#include "gqd/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gqd/errors.hpp"
#include "gqd/tolerances.hpp"

namespace gqd {

namespace {

using cplx = std::complex<double>;

const LorentzianParams& require_lorentzian(const SpectralModel& m) {
  if (m.kind() != SpectralKind::Lorentzian) throw DomainError("analytic solution needs a Lorentzian model");
  return m.lorentzian();
}

// C = cosh(dt/2) and S = sinh(dt/2)/d, continued analytically in d^2, with the decay
// envelope exp(-lambda t / 2) kept separate so that large real d t cannot overflow.
struct Propagator {
  double c;
  double s;
  double envelope;
};

Propagator propagator(const LorentzianParams& p, double t) {
  const double d2 = p.lambda * p.lambda - 2.0 * p.gamma0 * p.lambda;
  const double lam = p.lambda;
  if (std::sqrt(std::abs(d2)) < tol::critical_damping * lam) {
    const double x = d2 * t * t;
    return {1.0 + x / 8.0, 0.5 * t * (1.0 + x / 24.0), std::exp(-0.5 * lam * t)};
  }
  if (d2 < 0.0) {
    const double w = std::sqrt(-d2);
    return {std::cos(0.5 * w * t), std::sin(0.5 * w * t) / w, std::exp(-0.5 * lam * t)};
  }
  const double d = std::sqrt(d2);
  const double h = 0.5 * d * t;
  if (h < 20.0) return {std::cosh(h), std::sinh(h) / d, std::exp(-0.5 * lam * t)};
  // cosh ~ sinh ~ e^h / 2; fold e^h into the envelope (d < lambda, so the exponent is negative).
  const double tail = std::exp(-2.0 * h);
  return {0.5 * (1.0 + tail), 0.5 * (1.0 - tail) / d, std::exp(0.5 * (d - lam) * t)};
}

}  // namespace

std::string_view to_string(SpectralKind k) {
  return k == SpectralKind::Lorentzian ? "lorentzian" : "ohmic";
}

SpectralModel SpectralModel::lorentzian(double gamma0, double lambda, double omega0) {
  SpectralModel m{LorentzianParams{gamma0, lambda}, omega0};
  m.validate();
  return m;
}

SpectralModel SpectralModel::ohmic(double eta, double s, double omega_c, double omega0) {
  SpectralModel m{OhmicParams{eta, s, omega_c}, omega0};
  m.validate();
  return m;
}

SpectralKind SpectralModel::kind() const noexcept {
  return std::holds_alternative<LorentzianParams>(params) ? SpectralKind::Lorentzian : SpectralKind::OhmicLike;
}

const LorentzianParams& SpectralModel::lorentzian() const { return std::get<LorentzianParams>(params); }
const OhmicParams& SpectralModel::ohmic() const { return std::get<OhmicParams>(params); }

void SpectralModel::validate() const {
  if (!(omega0 > 0.0)) throw DomainError("omega0 must be positive");
  if (kind() == SpectralKind::Lorentzian) {
    const auto& p = lorentzian();
    if (!(p.gamma0 > 0.0) || !(p.lambda > 0.0)) throw DomainError("gamma0 and lambda must be positive");
  } else {
    const auto& p = ohmic();
    if (!(p.eta > 0.0) || !(p.s > 0.0) || !(p.omega_c > 0.0)) {
      throw DomainError("eta, s and omega_c must be positive");
    }
  }
}

double SpectralModel::density(double omega) const {
  if (kind() == SpectralKind::Lorentzian) {
    const auto& p = lorentzian();
    const double dw = omega - omega0;
    return p.gamma0 * p.lambda * p.lambda / (2.0 * std::numbers::pi * (dw * dw + p.lambda * p.lambda));
  }
  const auto& p = ohmic();
  if (omega < 0.0) return 0.0;
  return p.eta * std::pow(omega, p.s) * std::pow(p.omega_c, 1.0 - p.s) * std::exp(-omega / p.omega_c);
}

KernelFunction kernel(const SpectralModel& model) {
  model.validate();
  if (model.kind() == SpectralKind::Lorentzian) {
    const auto p = model.lorentzian();
    const double w0 = model.omega0;
    return KernelFunction(
        [p, w0](double tau) {
          return 0.5 * p.gamma0 * p.lambda * std::exp(-p.lambda * tau) * std::polar(1.0, -w0 * tau);
        },
        "lorentzian: (gamma0 lambda / 2) exp(-lambda tau) exp(-i w0 tau)");
  }
  const auto p = model.ohmic();
  const double amp = p.eta * std::tgamma(p.s + 1.0) * p.omega_c * p.omega_c;
  return KernelFunction(
      [p, amp](double tau) { return amp * std::pow(cplx(1.0, p.omega_c * tau), -(p.s + 1.0)); },
      "ohmic: eta Gamma(s+1) wc^2 (1 + i wc tau)^-(s+1)");
}

KernelFunction zero_kernel() {
  return KernelFunction([](double) { return cplx(0.0); }, "zero");
}

LorentzianAmplitude lorentzian_amplitude(const SpectralModel& model, double t) {
  const auto& p = require_lorentzian(model);
  if (!(t >= 0.0)) throw DomainError("t = " + std::to_string(t) + " is negative");
  const Propagator g = propagator(p, t);
  return {g.envelope * (g.c + p.lambda * g.s), -p.gamma0 * p.lambda * g.envelope * g.s};
}

double lorentzian_q_analytic(const SpectralModel& model, double t) {
  const auto a = lorentzian_amplitude(model, t);
  return std::clamp(a.u * a.u, 0.0, 1.0);
}

double lorentzian_dq_dt_analytic(const SpectralModel& model, double t) {
  const auto a = lorentzian_amplitude(model, t);
  return 2.0 * a.u * a.du_dt;
}

double lorentzian_gamma_analytic(const SpectralModel& model, double t) {
  const auto& p = require_lorentzian(model);
  if (!(t > 0.0)) throw DomainError("Gamma(t) needs t > 0");
  const Propagator g = propagator(p, t);
  const double num = 2.0 * p.gamma0 * p.lambda * g.s;
  const double den = g.c + p.lambda * g.s;
  if (den == 0.0) return std::copysign(std::numeric_limits<double>::infinity(), num);
  return num / den;
}

}  // namespace gqd
