#include "gqd/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "gqd/errors.hpp"

namespace gqd::optim {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> idx(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  auto blend = [&](std::vector<double>& out, const std::vector<double>& from, double coeff) {
    // out = centroid + coeff * (from - centroid)
    for (std::size_t i = 0; i < n; ++i) out[i] = centroid[i] + coeff * (from[i] - centroid[i]);
  };

  NelderMeadResult res;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = idx[0], worst = idx[n], second = idx[n - 1];

    if (std::abs(vals[worst] - vals[best]) <= opts.tolerance) {
      res.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[idx[k]][i];
    for (double& c : centroid) c /= static_cast<double>(n);

    blend(trial, pts[worst], -kReflect);
    const double fr = f(trial);
    if (fr < vals[best]) {
      blend(trial2, pts[worst], -kReflect * kExpand);
      const double fe = f(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        vals[worst] = fe;
      } else {
        pts[worst] = trial;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = trial;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    blend(trial2, outside ? trial : pts[worst], kContract);
    const double fc = f(trial2);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      auto& p = pts[idx[k]];
      for (std::size_t i = 0; i < n; ++i) p[i] = pts[best][i] + kShrink * (p[i] - pts[best][i]);
      vals[idx[k]] = f(p);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  res.x = pts[best];
  res.value = vals[best];
  res.iterations = iter;
  return res;
}

NelderMeadResult multi_start_minimize(const Objective& f, std::size_t n, const MultiStartOptions& opts) {
  NelderMeadResult best;
  bool have = false;
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(r) * 0x9E3779B97F4A7C15ULL);
    std::uniform_real_distribution<double> u(-opts.start_radius, opts.start_radius);
    std::vector<double> x0(n);
    for (double& x : x0) x = u(rng);

    NelderMeadResult run = nelder_mead(f, std::move(x0), opts.local);
    if (!run.converged) {
      throw OptimizerDiverged("restart " + std::to_string(r) + " did not reach tolerance in " +
                              std::to_string(opts.local.max_iterations) + " iterations");
    }
    if (!have || run.value < best.value) {
      best = std::move(run);
      have = true;
    }
  }
  return best;
}

}  // namespace gqd::optim
