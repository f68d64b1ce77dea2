#include "gqd/flow.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "gqd/errors.hpp"

namespace gqd {

namespace {

using cplx = std::complex<double>;

constexpr std::array<Measure, 3> kMeasures{Measure::TDD, Measure::HDD, Measure::BDD};

// Kraus operators of the damping map in the basis {|1>, |0>}.
std::array<ComplexMatrix, 2> damping_kraus(cplx p) {
  ComplexMatrix k0(2), k1(2);
  k0(0, 0) = p;
  k0(1, 1) = 1.0;
  k1(1, 0) = std::sqrt(std::max(0.0, 1.0 - std::norm(p)));
  return {k0, k1};
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

void fill_row(const RegionMapRequest& req, const RegionMap& map, std::size_t row, FlowCell* out) {
  const SpectralModel model = with_swept_parameter(req.family, map.params[row]);
  const std::size_t m = map.times.size();
  if (model.kind() == SpectralKind::Lorentzian) {
    for (std::size_t j = 0; j < m; ++j) {
      const double t = map.times[j];
      out[j] = classify_cell(req.state, lorentzian_q_analytic(model, t), lorentzian_dq_dt_analytic(model, t));
    }
  } else {
    SolverConfig cfg = req.solver;
    const EvolutionRecord rec = solve(kernel(model), model.omega0, cfg);
    const std::vector<double> slope = dq_dt(rec);
    for (std::size_t j = 0; j < m; ++j) {
      const auto idx = std::min<std::size_t>(rec.size() - 1,
                                             static_cast<std::size_t>(std::llround(map.times[j] / rec.dt)));
      out[j] = classify_cell(req.state, rec.q[idx], slope[idx]);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    out[j].param_value = map.params[row];
    out[j].t = map.times[j];
  }
}

}  // namespace

DensityMatrix two_qubit_state(const InitialState& s, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q = " + std::to_string(q) + " outside [0, 1]");
  ComplexMatrix m(4);
  m(1, 1) = s.alpha_sq * q;
  m(2, 2) = s.beta_sq() * q;
  m(1, 2) = s.alpha_beta() * q;
  m(2, 1) = s.alpha_beta() * q;
  m(3, 3) = 1.0 - q;
  return DensityMatrix(m);
}

double kraus_consistency_check(const InitialState& s, cplx p) {
  if (std::abs(p) > 1.0 + 1e-12) throw DomainError("|p| > 1");
  ComplexMatrix phi(4);
  const double alpha = std::sqrt(s.alpha_sq);
  const double beta = std::sqrt(s.beta_sq());
  phi(1, 1) = alpha * alpha;
  phi(1, 2) = alpha * beta;
  phi(2, 1) = alpha * beta;
  phi(2, 2) = beta * beta;

  const auto k = damping_kraus(p);
  ComplexMatrix out(4);
  for (const auto& ka : k)
    for (const auto& kb : k) {
      const ComplexMatrix op = kron(ka, kb);
      out += op * phi * op.adjoint();
    }
  const ComplexMatrix ref = two_qubit_state(s, std::min(1.0, std::norm(p))).mat();
  return (out - ref).max_abs();
}

std::string_view to_string(GammaSign g) {
  switch (g) {
    case GammaSign::Negative: return "Negative";
    case GammaSign::Positive: return "Positive";
    case GammaSign::Zero: return "Zero";
    case GammaSign::Undefined: return "Undefined";
  }
  return "?";
}

std::string_view to_string(Enhancement e) {
  switch (e) {
    case Enhancement::Enhanced: return "Enhanced";
    case Enhancement::Degraded: return "Degraded";
    case Enhancement::Stationary: return "Stationary";
    case Enhancement::Undefined: return "Undefined";
  }
  return "?";
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Cyan: return "Cyan";
    case Category::Red: return "Red";
    case Category::Orange: return "Orange";
    case Category::Plain: return "Plain";
    case Category::Undefined: return "Undefined";
  }
  return "?";
}

Category category(const FlowCell& cell, Measure m) {
  const Enhancement e = cell.of(m);
  if (cell.gamma_sign == GammaSign::Undefined || e == Enhancement::Undefined) return Category::Undefined;
  if (cell.gamma_sign == GammaSign::Negative) {
    if (e == Enhancement::Enhanced) return Category::Cyan;
    if (e == Enhancement::Degraded) return Category::Orange;
    return Category::Plain;
  }
  if (cell.gamma_sign == GammaSign::Positive && e == Enhancement::Enhanced) return Category::Red;
  return Category::Plain;
}

FlowCell classify_cell(const InitialState& s, double q, double dq_dt, double tol) {
  FlowCell cell;
  if (!(q > tol::q_undefined) || !std::isfinite(dq_dt)) return cell;

  if (std::abs(dq_dt) <= tol) {
    cell.gamma_sign = GammaSign::Zero;
    cell.enhancement.fill(Enhancement::Stationary);
    return cell;
  }
  cell.gamma_sign = dq_dt > 0.0 ? GammaSign::Negative : GammaSign::Positive;

  if (s.alpha_sq <= 0.0 || s.alpha_sq >= 1.0) {
    // Product initial states carry no discord at any q.
    cell.enhancement.fill(Enhancement::Stationary);
    return cell;
  }
  const double qq = std::min(q, std::nextafter(1.0, 0.0));
  for (std::size_t i = 0; i < kMeasures.size(); ++i) {
    const Monotonicity mono = monotonicity_class(s, qq, kMeasures[i]);
    if (mono == Monotonicity::Stationary) {
      cell.enhancement[i] = Enhancement::Stationary;
      continue;
    }
    const bool grows = (mono == Monotonicity::Increasing) == (dq_dt > 0.0);
    cell.enhancement[i] = grows ? Enhancement::Enhanced : Enhancement::Degraded;
  }
  return cell;
}

std::size_t RegionMap::count(Measure m, Category c) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const FlowCell& cell) { return category(cell, m) == c; }));
}

SpectralModel with_swept_parameter(const SpectralModel& family, double value) {
  SpectralModel m = family;
  if (auto* l = std::get_if<LorentzianParams>(&m.params)) {
    l->lambda = value * l->gamma0;
  } else {
    std::get<OhmicParams>(m.params).eta = value;
  }
  m.validate();
  return m;
}

RegionMap region_map(const RegionMapRequest& req) {
  if (req.param_steps < 2) throw DomainError("param_steps must be >= 2");
  if (!(req.param_min > 0.0) || !(req.param_max >= req.param_min)) {
    throw DomainError("parameter range must be positive and ordered");
  }
  if (req.time_samples < 1) throw DomainError("time_samples must be >= 1");
  req.solver.validate();

  RegionMap map;
  map.alpha_sq = req.state.alpha_sq;
  map.kind = req.family.kind();
  map.params = linspace(req.param_min, req.param_max, req.param_steps);
  map.times.resize(static_cast<std::size_t>(req.time_samples));
  for (int j = 0; j < req.time_samples; ++j) {
    map.times[static_cast<std::size_t>(j)] = req.solver.t_max * (j + 1) / req.time_samples;
  }
  const std::size_t rows = map.params.size();
  const std::size_t m = map.times.size();
  map.cells.resize(rows * m);
  std::vector<std::string> row_errors(rows);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t row = next++; row < rows; row = next++) {
      FlowCell* out = map.cells.data() + row * m;
      try {
        fill_row(req, map, row, out);
      } catch (const Error& e) {
        row_errors[row] = e.what();
        for (std::size_t j = 0; j < m; ++j) out[j] = FlowCell{map.params[row], map.times[j]};
      }
    }
  };
  const int nworkers = std::max(1, std::min<int>(req.workers, static_cast<int>(rows)));
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
  }

  for (std::size_t row = 0; row < rows; ++row) {
    if (!row_errors[row].empty()) {
      map.failures.push_back("param " + std::to_string(map.params[row]) + ": " + row_errors[row]);
    }
  }
  return map;
}

}  // namespace gqd
