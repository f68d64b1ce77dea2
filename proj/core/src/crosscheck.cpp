#include "gqd/crosscheck.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "gqd/closed_form.hpp"
#include "gqd/discord.hpp"
#include "gqd/flow.hpp"
#include "gqd/volterra.hpp"

namespace gqd {

namespace {

using cplx = std::complex<double>;
namespace bq = boost::math::quadrature;

CheckResult finish(CheckResult r) {
  r.passed = r.worst < r.tolerance;
  return r;
}

}  // namespace

cplx kernel_by_quadrature(const SpectralModel& model, double tau) {
  model.validate();
  if (model.kind() == SpectralKind::OhmicLike) {
    // Extended precision: at large tau the result is ~1e-7 of the integrand's L1 mass.
    using real = long double;
    const auto& p = model.ohmic();
    const real eta = p.eta, s = p.s, wc = p.omega_c, t = tau;
    auto density = [&](real w) { return eta * std::pow(w, s) * std::pow(wc, 1 - s) * std::exp(-w / wc); };
    auto re = [&](real w) { return density(w) * std::cos(w * t); };
    auto im = [&](real w) { return -density(w) * std::sin(w * t); };
    const real upper = 80 * wc;
    // One oscillation period per panel; tanh-sinh on the first panel absorbs w^s at 0.
    const real panel = tau > 0.0 ? std::min<real>(wc, 2 * std::numbers::pi_v<real> / t) : wc;
    bq::tanh_sinh<real> head;
    real r = head.integrate(re, real(0), panel);
    real i = tau > 0.0 ? head.integrate(im, real(0), panel) : 0;
    for (real a = panel; a < upper; a += panel) {
      const real b = std::min(upper, a + panel);
      r += bq::gauss_kronrod<real, 61>::integrate(re, a, b, 0);
      if (tau > 0.0) i += bq::gauss_kronrod<real, 61>::integrate(im, a, b, 0);
    }
    return {static_cast<double>(r), static_cast<double>(i)};
  }
  // Fold the real line about omega0: J(w0 + x) +- J(w0 - x) on x >= 0.
  const double w0 = model.omega0;
  auto even = [&](double x) { return model.density(w0 + x) + model.density(w0 - x); };
  auto odd = [&](double x) { return model.density(w0 + x) - model.density(w0 - x); };
  cplx shifted;
  if (tau == 0.0) {
    bq::exp_sinh<double> integrator;
    shifted = integrator.integrate(even, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
  } else {
    bq::ooura_fourier_cos<double> cos_rule(1e-15);
    bq::ooura_fourier_sin<double> sin_rule(1e-15);
    const double c = cos_rule.integrate(even, tau).first;
    const double s = sin_rule.integrate(odd, tau).first;
    shifted = {c, -s};
  }
  return std::polar(1.0, -w0 * tau) * shifted;
}

CheckResult check_lorentzian_solver() {
  CheckResult r{"lorentzian-volterra-vs-analytic", 0.0, 1e-6, 0, false, ""};
  for (double ratio : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    const SpectralModel model = SpectralModel::lorentzian(1.0, ratio);
    SolverConfig cfg;
    cfg.t_max = 10.0;
    cfg.dt = 1e-3;
    const EvolutionRecord rec = solve(kernel(model), model.omega0, cfg);
    for (std::size_t i = 0; i < rec.size(); ++i) {
      r.worst = std::max(r.worst, std::abs(rec.q[i] - lorentzian_q_analytic(model, rec.times[i])));
    }
    r.samples += rec.size();
  }
  r.detail = "lambda/gamma0 in {0.1, 0.5, 1, 2, 3}, t in [0, 10], dt = 1e-3";
  return finish(r);
}

CheckResult check_kernels(const CrossCheckOptions& opts) {
  CheckResult r{"kernel-vs-quadrature", 0.0, 1e-7, 0, false, ""};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> lam(0.1, 2.0), g0(0.2, 3.0), eta(0.01, 1.0), s(0.5, 4.0),
      wc(0.5, 4.0), w0(0.5, 2.0);
  for (int k = 0; k < opts.kernel_models; ++k) {
    const SpectralModel models[] = {SpectralModel::lorentzian(g0(rng), lam(rng), w0(rng)),
                                    SpectralModel::ohmic(eta(rng), s(rng), wc(rng), w0(rng))};
    for (const auto& m : models) {
      const KernelFunction f = kernel(m);
      for (double x : {0.0, 0.1, 1.0, 5.0}) {
        const double tau = x / m.omega0;
        const cplx exact = f(tau);
        const cplx quad = kernel_by_quadrature(m, tau);
        r.worst = std::max(r.worst, std::abs(exact - quad) / std::abs(exact));
        ++r.samples;
      }
    }
  }
  r.detail = "relative error, tau*w0 in {0, 0.1, 1, 5}";
  return finish(r);
}

std::vector<CheckResult> check_discord_pipelines(const CrossCheckOptions& opts) {
  CheckResult t{"tdd-closed-vs-x-state", 0.0, 1e-12, 0, false, ""};
  CheckResult h{"hdd-closed-vs-w-eigen", 0.0, 1e-6, 0, false, ""};
  CheckResult b{"bdd-closed-vs-fidelity-max", 0.0, 1e-4, 0, false, ""};
  const int n = std::max(2, opts.discord_grid);
  for (int i = 0; i < n; ++i) {
    const InitialState s(static_cast<double>(i) / (n - 1));
    for (int j = 0; j < n; ++j) {
      const double q = static_cast<double>(j) / (n - 1);
      const DensityMatrix rho = two_qubit_state(s, q);
      t.worst = std::max(t.worst, std::abs(tdd_closed(s, q) - tdd_x_state(rho)));
      h.worst = std::max(h.worst, std::abs(hdd_closed(s, q) - hdd_eigen(rho)));
      b.worst = std::max(b.worst, std::abs(bdd_closed(s, q) - bdd_fidelity_max(rho)));
    }
  }
  const std::string detail = std::to_string(n) + "x" + std::to_string(n) + " grid over (alpha^2, q)";
  for (auto* c : {&t, &h, &b}) {
    c->samples = static_cast<std::size_t>(n) * n;
    c->detail = detail;
  }
  return {finish(t), finish(h), finish(b)};
}

CheckResult check_kraus(const CrossCheckOptions& opts) {
  CheckResult r{"kraus-vs-x-state", 0.0, 1e-10, 0, false, ""};
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < opts.kraus_samples; ++k) {
    const InitialState s(unit(rng));
    const cplx p = std::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    r.worst = std::max(r.worst, kraus_consistency_check(s, p));
    ++r.samples;
  }
  r.detail = "max entrywise deviation over random (alpha^2, p)";
  return finish(r);
}

CheckResult check_monotonicity(const CrossCheckOptions& opts) {
  // Finite differences of the closed forms, sampled away from branch points.
  CheckResult r{"monotonicity-vs-finite-difference", 0.0, 0.5, 0, false, ""};
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double step = 1e-6;
  constexpr double margin = 1e-4;
  std::size_t mismatches = 0;
  while (r.samples < static_cast<std::size_t>(opts.monotonicity_samples)) {
    const double a2 = unit(rng);
    const double q = unit(rng);
    if (a2 < margin || a2 > 1.0 - margin || q < margin || q > 1.0 - margin) continue;
    const InitialState s(a2);
    const auto cp = critical_points(s);
    bool near = std::abs(q - 0.5) < margin;
    for (const auto& c : {cp.qc1, cp.qc2, cp.qc3, cp.qc4, cp.qc5, cp.qc6}) near = near || (c && std::abs(q - *c) < margin);
    if (near) continue;
    for (Measure m : {Measure::TDD, Measure::HDD, Measure::BDD}) {
      const double fd = (closed_form(m, s, q + step) - closed_form(m, s, q - step)) / (2.0 * step);
      const Monotonicity cls = monotonicity_class(s, q, m);
      const bool agree = (cls == Monotonicity::Increasing && fd > 0.0) || (cls == Monotonicity::Decreasing && fd < 0.0);
      if (!agree) ++mismatches;
    }
    ++r.samples;
  }
  r.worst = static_cast<double>(mismatches);
  r.detail = "sign disagreements (count) at random (alpha^2, q), step 1e-6";
  return finish(r);
}

std::vector<CheckResult> run_cross_checks(const CrossCheckOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(check_lorentzian_solver());
  out.push_back(check_kernels(opts));
  for (auto& c : check_discord_pipelines(opts)) out.push_back(std::move(c));
  out.push_back(check_kraus(opts));
  out.push_back(check_monotonicity(opts));
  return out;
}

}  // namespace gqd
