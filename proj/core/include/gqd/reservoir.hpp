#pragma once

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

namespace gqd {

// Lorentzian J(w) = (1/2pi) gamma0 lambda^2 / ((w - w0)^2 + lambda^2), over the real line.
struct LorentzianParams {
  double gamma0 = 1.0;  // Markovian-limit decay rate
  double lambda = 1.0;  // spectral width
};

// Ohmic-like J(w) = eta w^s wc^(1-s) exp(-w/wc), over w >= 0.
struct OhmicParams {
  double eta = 0.1;
  double s = 3.0;
  double omega_c = 2.0;
};

enum class SpectralKind { Lorentzian, OhmicLike };
std::string_view to_string(SpectralKind k);

struct SpectralModel {
  std::variant<LorentzianParams, OhmicParams> params = LorentzianParams{};
  double omega0 = 1.0;  // qubit transition frequency

  static SpectralModel lorentzian(double gamma0, double lambda, double omega0 = 1.0);
  static SpectralModel ohmic(double eta, double s, double omega_c, double omega0 = 1.0);

  SpectralKind kind() const noexcept;
  const LorentzianParams& lorentzian() const;
  const OhmicParams& ohmic() const;

  // Throws DomainError on non-positive rates or exponents.
  void validate() const;
  double density(double omega) const;
};

// Reservoir correlation function f(tau) = int dw J(w) exp(-i w tau), tau >= 0.
class KernelFunction {
 public:
  using Fn = std::function<std::complex<double>(double)>;

  KernelFunction(Fn fn, std::string form) : fn_(std::move(fn)), form_(std::move(form)) {}

  std::complex<double> operator()(double tau) const { return fn_(tau); }
  const std::string& form() const noexcept { return form_; }

 private:
  Fn fn_;
  std::string form_;
};

KernelFunction kernel(const SpectralModel& model);
KernelFunction zero_kernel();

// Exact Lorentzian solution in the frame rotating at omega0: p(t) = exp(-i w0 t) u(t) with u real.
struct LorentzianAmplitude {
  double u = 1.0;
  double du_dt = 0.0;
};
LorentzianAmplitude lorentzian_amplitude(const SpectralModel& model, double t);

// q(t) = |p(t)|^2. Throws DomainError for t < 0 or a non-Lorentzian model.
double lorentzian_q_analytic(const SpectralModel& model, double t);
double lorentzian_dq_dt_analytic(const SpectralModel& model, double t);

// Gamma(t) = 2 gamma0 lambda / (lambda + d coth(dt/2)). Returns +-infinity exactly at
// the isolated zeros of q. Throws DomainError for t <= 0.
double lorentzian_gamma_analytic(const SpectralModel& model, double t);

}  // namespace gqd
