#include "gqd/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gqd/errors.hpp"
#include "gqd/tolerances.hpp"

namespace gqd {

namespace {

using cplx = std::complex<double>;

double one_sided_start(double f0, double f1, double f2, double h) { return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h); }
double one_sided_end(double f0, double f1, double f2, double h) { return (3.0 * f2 - 4.0 * f1 + f0) / (2.0 * h); }

}  // namespace

void SolverConfig::validate() const {
  if (!(t_max > 0.0)) throw DomainError("t_max must be positive");
  if (!(dt > 0.0) || dt > t_max / 100.0 * (1.0 + 1e-12)) {
    throw DomainError("dt = " + std::to_string(dt) + " must lie in (0, t_max/100]");
  }
}

std::size_t SolverConfig::steps() const { return static_cast<std::size_t>(std::llround(t_max / dt)); }

SolverConfig default_solver_config(const SpectralModel& model, double t_max) {
  SolverConfig cfg;
  cfg.t_max = t_max;
  const double scale =
      model.kind() == SpectralKind::Lorentzian ? model.lorentzian().gamma0 : model.ohmic().omega_c;
  cfg.dt = std::min(1e-3 / scale, t_max / 100.0);
  return cfg;
}

EvolutionRecord solve(const KernelFunction& kernel, double omega0, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.steps();
  const double h = cfg.dt;

  // Rotating-frame kernel k(tau) = f(tau) exp(i w0 tau) tabulated once.
  std::vector<cplx> k(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double tau = h * static_cast<double>(j);
    k[j] = kernel(tau) * std::polar(1.0, omega0 * tau);
  }

  std::vector<cplx> u(n + 1);
  std::vector<cplx> du(n + 1);
  u[0] = 1.0;
  du[0] = 0.0;
  const cplx implicit_c = 1.0 + 0.25 * h * h * k[0];

  for (std::size_t m = 0; m < n; ++m) {
    // History part of the trapezoid rule for int_0^{t_{m+1}} k(t_{m+1} - s) u(s) ds,
    // everything except the (h/2) k_0 u_{m+1} endpoint.
    cplx hist = 0.5 * k[m + 1] * u[0];
    for (std::size_t j = 1; j <= m; ++j) hist += k[m + 1 - j] * u[j];
    hist *= h;

    const cplx predicted =
        m == 0 ? u[0] + h * du[0] : u[m] + h * (1.5 * du[m] - 0.5 * du[m - 1]);
    // Trapezoid corrector; linear in u_{m+1}, so it is solved exactly.
    const cplx corrected = (u[m] + 0.5 * h * (du[m] - hist)) / implicit_c;
    if (std::abs(predicted - corrected) > tol::corrector_mismatch) {
      throw StepTooLarge("predictor/corrector mismatch " + std::to_string(std::abs(predicted - corrected)) +
                         " at t = " + std::to_string(h * static_cast<double>(m + 1)));
    }
    u[m + 1] = corrected;
    du[m + 1] = -(hist + 0.5 * h * k[0] * corrected);
  }

  EvolutionRecord rec;
  rec.dt = h;
  rec.times.resize(n + 1);
  rec.p.resize(n + 1);
  rec.q.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double t = h * static_cast<double>(j);
    rec.times[j] = t;
    rec.p[j] = std::polar(1.0, -omega0 * t) * u[j];
    rec.q[j] = std::clamp(std::norm(u[j]), 0.0, 1.0);
  }
  return rec;
}

EvolutionRecord derive_rates(EvolutionRecord rec) {
  const std::size_t n = rec.size();
  rec.gamma.assign(n, 0.0);
  rec.omega_shift.assign(n, 0.0);
  rec.rate_defined.assign(n, 1);
  if (n < 3) {
    std::fill(rec.rate_defined.begin(), rec.rate_defined.end(), 0);
    return rec;
  }
  const double h = rec.dt;

  std::vector<double> lnq(n);
  std::vector<std::uint8_t> ok(n);
  for (std::size_t i = 0; i < n; ++i) {
    ok[i] = rec.q[i] >= tol::q_undefined && std::abs(rec.p[i]) > 0.0;
    lnq[i] = ok[i] ? std::log(rec.q[i]) : 0.0;
  }
  // Phase increments between neighbours; small for any resolved step.
  std::vector<double> dphase(n - 1, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (ok[i] && ok[i + 1]) dphase[i] = std::arg(rec.p[i + 1] / rec.p[i]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a, b, c;  // stencil
    if (i == 0) {
      a = 0, b = 1, c = 2;
    } else if (i + 1 == n) {
      a = n - 3, b = n - 2, c = n - 1;
    } else {
      a = i - 1, b = i, c = i + 1;
    }
    if (!(ok[a] && ok[b] && ok[c])) {
      rec.rate_defined[i] = 0;
      continue;
    }
    const double phi_b = dphase[a];
    const double phi_c = dphase[a] + dphase[b];
    double dlnq, dphi;
    if (i == 0) {
      dlnq = one_sided_start(lnq[a], lnq[b], lnq[c], h);
      dphi = one_sided_start(0.0, phi_b, phi_c, h);
    } else if (i + 1 == n) {
      dlnq = one_sided_end(lnq[a], lnq[b], lnq[c], h);
      dphi = one_sided_end(0.0, phi_b, phi_c, h);
    } else {
      dlnq = (lnq[c] - lnq[a]) / (2.0 * h);
      dphi = phi_c / (2.0 * h);
    }
    rec.gamma[i] = -dlnq;
    rec.omega_shift[i] = -2.0 * dphi;
  }
  return rec;
}

std::vector<double> dq_dt(const EvolutionRecord& rec) {
  const std::size_t n = rec.size();
  std::vector<double> out(n, 0.0);
  if (n < 3) return out;
  const double h = rec.dt;
  out[0] = one_sided_start(rec.q[0], rec.q[1], rec.q[2], h);
  out[n - 1] = one_sided_end(rec.q[n - 3], rec.q[n - 2], rec.q[n - 1], h);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (rec.q[i + 1] - rec.q[i - 1]) / (2.0 * h);
  return out;
}

std::vector<double> energy(const EvolutionRecord& rec, double rho11_initial, double omega0) {
  if (!(rho11_initial >= 0.0 && rho11_initial <= 1.0)) throw DomainError("rho11(0) outside [0, 1]");
  std::vector<double> e(rec.size());
  for (std::size_t i = 0; i < rec.size(); ++i) e[i] = omega0 * rho11_initial * rec.q[i];
  return e;
}

}  // namespace gqd
