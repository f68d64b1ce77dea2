#include "gqd/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gqd/errors.hpp"
#include "gqd/nelder_mead.hpp"

namespace gqd {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix bloch_operator(const std::array<double, 3>& v) {
  ComplexMatrix m(2);
  m(0, 0) = v[2];
  m(1, 1) = -v[2];
  m(0, 1) = cplx(v[0], -v[1]);
  m(1, 0) = cplx(v[0], v[1]);
  return m;
}

// (I + v.sigma)/2
ComplexMatrix qubit_state(const std::array<double, 3>& v) {
  ComplexMatrix m = bloch_operator(v) + ComplexMatrix::identity(2);
  return m * cplx(0.5);
}

// Length sin^2(r) along (theta, phi): smooth, and pure states sit at finite parameters.
std::array<double, 3> bloch_from_params(double r, double theta, double phi) {
  const double s = std::sin(r);
  const double len = s * s;
  return {len * std::sin(theta) * std::cos(phi), len * std::sin(theta) * std::sin(phi), len * std::cos(theta)};
}

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("two-qubit (4x4) state required");
}

// sqrt(rho)(sigma_i (x) I)sqrt(rho) for i = x, y, z.
std::array<ComplexMatrix, 3> sandwiched_paulis(const ComplexMatrix& sqrt_rho) {
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  std::array<ComplexMatrix, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = sqrt_rho * kron(pauli::by_index(i), id2) * sqrt_rho;
  return out;
}

double bures_objective_from_sandwiched(const std::array<ComplexMatrix, 3>& s,
                                       const std::array<double, 3>& u) {
  ComplexMatrix lambda = s[0] * cplx(u[0]) + s[1] * cplx(u[1]) + s[2] * cplx(u[2]);
  const EigenSystem es = hermitian_eigen(lambda);
  const double tr = es.values[0] + es.values[1] + es.values[2] + es.values[3];
  return 0.5 * (1.0 - tr + 2.0 * (es.values[0] + es.values[1]));
}

struct AngleSearch {
  double best_value;
  double theta;
  double phi;
};

// Minimizes f(theta, phi) over the sphere: full grid, then simplex refinement from
// the few best grid points.
template <typename F>
AngleSearch minimize_on_sphere(F&& f, int grid) {
  if (grid < 2) throw std::invalid_argument("angle grid must be >= 2");
  struct Sample {
    double v, th, ph;
  };
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    const double th = kPi * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double ph = 2.0 * kPi * j / grid;
      samples.push_back({f(th, ph), th, ph});
    }
  }
  const std::size_t seeds = std::min<std::size_t>(4, samples.size());
  std::partial_sort(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(seeds), samples.end(),
                    [](const Sample& a, const Sample& b) { return a.v < b.v; });

  AngleSearch best{samples[0].v, samples[0].th, samples[0].ph};
  optim::NelderMeadOptions opts;
  opts.tolerance = 1e-14;
  opts.initial_step = kPi / grid;
  opts.max_iterations = 4000;
  for (std::size_t k = 0; k < seeds; ++k) {
    auto res = optim::nelder_mead(
        [&](std::span<const double> x) { return f(x[0], x[1]); }, {samples[k].th, samples[k].ph}, opts);
    if (res.value < best.best_value) best = {res.value, res.x[0], res.x[1]};
  }
  return best;
}

}  // namespace

MeasurementDirection MeasurementDirection::normalized(double theta, double phi) {
  const double z = std::cos(theta);
  const double s = std::sin(theta);
  double th = std::acos(std::clamp(z, -1.0, 1.0));
  double ph = s >= 0.0 ? phi : phi + kPi;
  ph = std::fmod(ph, 2.0 * kPi);
  if (ph < 0.0) ph += 2.0 * kPi;
  return {th, ph};
}

std::array<double, 3> MeasurementDirection::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

ComplexMatrix ZeroDiscordState::matrix() const {
  const auto u = projector_dir.unit_vector();
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix un = bloch_operator(u);
  const ComplexMatrix pi1 = (id2 + un) * cplx(0.5);
  const ComplexMatrix pi2 = (id2 - un) * cplx(0.5);
  return kron(pi1, qubit_state(bloch_b1)) * cplx(p1) + kron(pi2, qubit_state(bloch_b2)) * cplx(1.0 - p1);
}

ZeroDiscordState ZeroDiscordState::from_parameters(const std::array<double, 9>& x) {
  ZeroDiscordState z;
  const double s = std::sin(x[0]);
  z.p1 = s * s;
  z.projector_dir = MeasurementDirection::normalized(x[1], x[2]);
  z.bloch_b1 = bloch_from_params(x[3], x[4], x[5]);
  z.bloch_b2 = bloch_from_params(x[6], x[7], x[8]);
  return z;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::EigenPipeline: return "eigen-pipeline";
    case Method::BruteForce: return "brute-force";
  }
  return "unknown";
}

double tdd_x_state(const DensityMatrix& rho) {
  require_two_qubit(rho);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool on_x = (r == c) || (r + c == 3);
      if (!on_x && std::abs(rho(r, c)) > tol::x_shape) {
        throw NotXState("entry (" + std::to_string(r) + "," + std::to_string(c) + ") is nonzero");
      }
    }
  if (std::abs(rho(0, 3)) >= tol::x_shape) {
    throw UnsupportedXState("rho_14 != 0 needs the general X-state formula");
  }
  return 2.0 * std::abs(rho(1, 2));
}

double tdd_bruteforce(const DensityMatrix& rho, int restarts) {
  BruteForceOptions opts;
  opts.restarts = restarts;
  return tdd_bruteforce(rho, opts);
}

double tdd_bruteforce(const DensityMatrix& rho, const BruteForceOptions& opts) {
  require_two_qubit(rho);
  if (opts.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  const ComplexMatrix& m = rho.mat();
  auto objective = [&](std::span<const double> x) {
    std::array<double, 9> p{};
    std::copy(x.begin(), x.end(), p.begin());
    return trace_norm(m - ZeroDiscordState::from_parameters(p).matrix());
  };

  optim::NelderMeadOptions local;
  local.max_iterations = opts.max_iterations;
  local.initial_step = 0.4;

  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(r) * 0x9E3779B97F4A7C15ULL);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::vector<double> x0(9);
    for (std::size_t i = 0; i < x0.size(); ++i) x0[i] = (i % 3 == 2 ? 2.0 : 1.0) * angle(rng);
    auto run = optim::nelder_mead(objective, std::move(x0), local);
    if (!run.converged) {
      throw OptimizerDiverged("restart " + std::to_string(r) + " hit the iteration cap");
    }
    // Re-seed the simplex around the converged point until it stops improving.
    optim::NelderMeadOptions polish = local;
    polish.initial_step = 0.05;
    for (int k = 0; k < 8; ++k) {
      auto again = optim::nelder_mead(objective, run.x, polish);
      if (!again.converged) {
        throw OptimizerDiverged("restart " + std::to_string(r) + " polish hit the iteration cap");
      }
      const bool improved = again.value < run.value - 1e-12;
      if (again.value < run.value) run = std::move(again);
      if (!improved) break;
    }
    best = std::min(best, run.value);
    if (best <= local.tolerance) break;
  }
  return best;
}

std::array<std::array<double, 3>, 3> hellinger_w_matrix(const DensityMatrix& rho) {
  require_two_qubit(rho);
  const ComplexMatrix sq = matrix_sqrt_psd(rho);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  std::array<ComplexMatrix, 3> half;
  for (int i = 0; i < 3; ++i) half[i] = sq * kron(pauli::by_index(i), id2);
  std::array<std::array<double, 3>, 3> w{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i][j] = (half[i] * half[j]).trace().real();
  return w;
}

double hdd_eigen(const DensityMatrix& rho) {
  const auto w = hellinger_w_matrix(rho);
  ComplexMatrix wm(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) wm(i, j) = 0.5 * (w[i][j] + w[j][i]);
  const EigenSystem es = hermitian_eigen(wm);
  return std::max(0.0, 1.0 - es.values[0]);
}

double hellinger_measurement_distance(const ComplexMatrix& sqrt_rho, const MeasurementDirection& dir) {
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix un = bloch_operator(dir.unit_vector());
  const ComplexMatrix p1 = kron((id2 + un) * cplx(0.5), id2);
  const ComplexMatrix p2 = kron((id2 - un) * cplx(0.5), id2);
  const ComplexMatrix diff = sqrt_rho - (p1 * sqrt_rho * p1 + p2 * sqrt_rho * p2);
  double hs = 0.0;
  for (std::size_t r = 0; r < diff.dim(); ++r)
    for (std::size_t c = 0; c < diff.dim(); ++c) hs += std::norm(diff(r, c));
  return 2.0 * hs;
}

double hdd_bruteforce(const DensityMatrix& rho, int grid) {
  require_two_qubit(rho);
  const ComplexMatrix sq = matrix_sqrt_psd(rho);
  const auto res = minimize_on_sphere(
      [&](double th, double ph) { return hellinger_measurement_distance(sq, {th, ph}); }, grid);
  return std::max(0.0, res.best_value);
}

double bures_fidelity_objective(const ComplexMatrix& sqrt_rho, const MeasurementDirection& dir) {
  return bures_objective_from_sandwiched(sandwiched_paulis(sqrt_rho), dir.unit_vector());
}

double bures_fidelity_max(const DensityMatrix& rho, int grid) {
  require_two_qubit(rho);
  const auto s = sandwiched_paulis(matrix_sqrt_psd(rho));
  const auto res = minimize_on_sphere(
      [&](double th, double ph) {
        return -bures_objective_from_sandwiched(s, MeasurementDirection{th, ph}.unit_vector());
      },
      grid);
  return std::min(1.0, -res.best_value);
}

double bures_discord_from_fidelity(double f_max) {
  const double f = std::clamp(f_max, 0.0, 1.0);
  return std::sqrt((2.0 + std::numbers::sqrt2) * (1.0 - std::sqrt(f)));
}

double bdd_fidelity_max(const DensityMatrix& rho, int grid) {
  return bures_discord_from_fidelity(bures_fidelity_max(rho, grid));
}

}  // namespace gqd
