// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gqd/closed_form.hpp"
#include "gqd/discord.hpp"
#include "gqd/errors.hpp"
#include "gqd/flow.hpp"
#include "gqd/reservoir.hpp"
#include "gqd/volterra.hpp"

using namespace gqd;

namespace {

struct Verdict {
  bool passed = false;
  std::string detail;
};

char buf[512];

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double max_q_error(const SpectralModel& model, double t_max, double dt) {
  const auto rec = solve(kernel(model), model.omega0, {.t_max = t_max, .dt = dt});
  double worst = 0.0;
  for (std::size_t i = 0; i < rec.size(); ++i)
    worst = std::max(worst, std::abs(rec.q[i] - lorentzian_q_analytic(model, rec.times[i])));
  return worst;
}

Verdict lorentzian_gold_standard() {
  double worst = 0.0;
  for (double ratio : {0.1, 0.5, 1.0, 2.0, 3.0})
    worst = std::max(worst, max_q_error(SpectralModel::lorentzian(1.0, ratio), 10.0, 1e-3));
  return {worst < 1e-6, fmt("max |dq| = %.3e (limit 1e-6)", worst)};
}

Verdict backflow_criterion() {
  // Exact decay rate on 1e4 samples of t*gamma0 in (0, 30], plus the rate the solver
  // recovers on the same grid wherever q stays away from zero.
  bool ok = true;
  std::string detail;
  int mismatches = 0;
  for (double ratio : {0.02, 0.5, 1.0, 1.9, 2.0, 2.5, 3.0}) {
    const auto model = SpectralModel::lorentzian(1.0, ratio);
    const int n = 10000;
    const double dt = 30.0 / n;
    bool negative = false;
    for (int i = 1; i <= n; ++i) negative = negative || lorentzian_gamma_analytic(model, dt * i) < 0.0;
    const auto rec = derive_rates(solve(kernel(model), 1.0, {.t_max = 30.0, .dt = dt}));
    for (std::size_t i = 1; i < rec.size(); ++i) {
      if (!rec.rate_defined[i]) continue;
      if ((rec.gamma[i] < 0.0) != (lorentzian_gamma_analytic(model, rec.times[i]) < 0.0)) ++mismatches;
    }
    const bool expected = ratio < 2.0;
    ok = ok && negative == expected;
    detail += fmt("%g:%s ", ratio, negative ? "neg" : "pos");
  }
  ok = ok && mismatches == 0;
  return {ok, detail + fmt("solver sign mismatches = %d", mismatches)};
}

Verdict closed_form_vs_pipelines() {
  double dt = 0.0, dl = 0.0, db = 0.0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const InitialState s(i / 20.0);
      const double q = j / 20.0;
      const DensityMatrix rho = two_qubit_state(s, q);
      dt = std::max(dt, std::abs(tdd_closed(s, q) - tdd_x_state(rho)));
      dl = std::max(dl, std::abs(hdd_closed(s, q) - hdd_eigen(rho)));
      db = std::max(db, std::abs(bdd_closed(s, q) - bdd_fidelity_max(rho)));
    }
  return {dt < 1e-12 && dl < 1e-6 && db < 1e-4, fmt("TDD %.2e, HDD %.2e, BDD %.2e", dt, dl, db)};
}

Verdict brute_force_oracles() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double dt = 0.0, dl = 0.0, db = 0.0;
  for (int i = 0; i < 50; ++i) {
    const InitialState s(u(rng));
    const double q = u(rng);
    const DensityMatrix rho = two_qubit_state(s, q);
    dt = std::max(dt, std::abs(tdd_bruteforce(rho) - tdd_closed(s, q)));
    dl = std::max(dl, std::abs(hdd_bruteforce(rho) - hdd_closed(s, q)));
    db = std::max(db, std::abs(bdd_fidelity_max(rho) - bdd_closed(s, q)));
  }
  return {dt < 1e-3 && dl < 1e-4 && db < 1e-4, fmt("TDD %.2e, HDD %.2e, BDD %.2e", dt, dl, db)};
}

Verdict critical_point_anchors() {
  const auto half = critical_points(InitialState(0.5));
  const auto edge = critical_points(InitialState(1.0 / 3.0 + 1e-9));
  const double root = bdd_threshold_alpha_sq();
  const bool ok = half.qc1 && *half.qc1 == 0.5 && half.qc2 && *half.qc2 == 1.0 && edge.qc3 &&
                  std::abs(*edge.qc3 - 0.75) < 1e-4 && half.qc5 && std::abs(*half.qc5 - 1.0 / 3.0) < 1e-12 &&
                  std::abs(root - 0.382) < 1e-3;
  return {ok, fmt("q_c1 %.17g, q_c2 %.17g, q_c3(1/3+) %.6f, q_c5 %.15f, root %.6f", half.qc1.value_or(-1),
                  half.qc2.value_or(-1), edge.qc3.value_or(-1), half.qc5.value_or(-1), root)};
}

RegionMap lorentzian_map(double a2) {
  RegionMapRequest req;
  req.state = InitialState(a2);
  req.family = SpectralModel::lorentzian(1.0, 1.0);
  req.param_min = 0.02;
  req.param_max = 1.98;
  req.param_steps = 50;
  req.solver = {.t_max = 50.0, .dt = 1e-3};
  req.time_samples = 500;
  return region_map(req);
}

Verdict region_maps() {
  const RegionMap equal = lorentzian_map(0.5);
  const auto orange_equal = equal.count(Measure::HDD, Category::Orange);

  const RegionMap skewed = lorentzian_map(0.7);
  bool narrow = true;
  std::string detail = fmt("(a) HDD orange %zu; (b)", orange_equal);
  for (Measure m : {Measure::HDD, Measure::BDD}) {
    const auto orange = skewed.count(m, Category::Orange);
    const auto red = skewed.count(m, Category::Red);
    const auto cyan = skewed.count(m, Category::Cyan);
    narrow = narrow && orange > 0 && red > 0 && orange < cyan && red < cyan;
    detail += fmt(" %s orange %zu red %zu cyan %zu;", std::string(to_string(m)).c_str(), orange, red, cyan);
  }

  RegionMapRequest req;
  req.state = InitialState(0.5);
  req.family = SpectralModel::ohmic(0.1, 3.0, 2.0);
  req.param_min = 0.02;
  req.param_max = 1.0;
  req.param_steps = 50;
  req.solver = default_solver_config(req.family, 10.0);
  req.time_samples = 500;
  const RegionMap ohmic = region_map(req);
  const auto cyan = ohmic.count(Measure::TDD, Category::Cyan);
  std::size_t tdd_degraded = 0;
  for (const auto& c : ohmic.cells)
    if (c.gamma_sign == GammaSign::Negative && c.of(Measure::TDD) == Enhancement::Degraded) ++tdd_degraded;
  detail += fmt(" (c) cyan %zu, TDD degraded on backflow %zu, failed rows %zu", cyan, tdd_degraded,
                ohmic.failures.size() + equal.failures.size() + skewed.failures.size());

  const bool ok = orange_equal == 0 && narrow && cyan > 0 && tdd_degraded == 0 && ohmic.failures.empty() &&
                  equal.failures.empty() && skewed.failures.empty();
  return {ok, detail};
}

Verdict solver_order() {
  const auto model = SpectralModel::lorentzian(1.0, 0.5);
  const double e1 = max_q_error(model, 10.0, 0.02), e2 = max_q_error(model, 10.0, 0.01),
               e3 = max_q_error(model, 10.0, 0.005);
  const double r1 = e1 / e2, r2 = e2 / e3;
  const bool ok = r1 >= 3.5 && r1 <= 4.5 && r2 >= 3.5 && r2 <= 4.5;
  return {ok, fmt("errors %.3e %.3e %.3e, ratios %.3f %.3f", e1, e2, e3, r1, r2)};
}

// Index of an interior local minimum of f on the grid within (lo, hi], or -1.
int interior_minimum(const std::vector<double>& q, const std::vector<double>& f, double lo, double hi) {
  for (std::size_t i = 1; i + 1 < q.size(); ++i) {
    if (q[i] <= lo || q[i] > hi) continue;
    if (f[i] < f[i - 1] && f[i] <= f[i + 1]) return static_cast<int>(i);
  }
  return -1;
}

Verdict curve_shapes() {
  const int n = 1001;
  std::vector<double> q(n);
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  auto sample = [&](Measure m, const InitialState& s) {
    std::vector<double> f;
    for (double x : q) f.push_back(closed_form(m, s, x));
    return f;
  };
  bool ok = true;
  std::string detail;
  for (double a2 : {0.7, 0.9}) {
    const InitialState s(a2);
    const auto cp = critical_points(s);
    const int il = interior_minimum(q, sample(Measure::HDD, s), *cp.qc1, 0.5);
    const int ib = interior_minimum(q, sample(Measure::BDD, s), *cp.qc5, 0.5);
    ok = ok && il >= 0 && ib >= 0;
    detail += fmt("a2=%g D_L min q=%g, D_B min q=%g; ", a2, il >= 0 ? q[il] : -1.0, ib >= 0 ? q[ib] : -1.0);
  }
  for (double a2 : {0.1, 0.2, 0.3}) {
    const InitialState s(a2);
    for (Measure m : {Measure::HDD, Measure::BDD}) {
      const auto f = sample(m, s);
      for (std::size_t i = 1; i < f.size(); ++i) ok = ok && f[i] > f[i - 1];
    }
  }
  return {ok, detail + "a2<=0.3 monotone checked"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"lorentzian gold standard", lorentzian_gold_standard},
      {"negative decay rate only below lambda = 2 gamma0", backflow_criterion},
      {"closed forms vs pipeline discords", closed_form_vs_pipelines},
      {"brute-force oracles", brute_force_oracles},
      {"critical-point anchors", critical_point_anchors},
      {"region maps", region_maps},
      {"solver order", solver_order},
      {"discord curve shapes", curve_shapes},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.passed) ++failures;
    std::printf("%s %zu %s: %s [%.2f s]\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].name, v.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
