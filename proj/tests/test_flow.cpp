#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gqd/closed_form.hpp"
#include "gqd/errors.hpp"
#include "gqd/flow.hpp"
#include "gqd/reservoir.hpp"
#include "support.hpp"

using namespace gqd;

namespace {

constexpr std::array<Measure, 3> kMeasures{Measure::TDD, Measure::HDD, Measure::BDD};

RegionMapRequest lorentzian_request(double a2, double lo, double hi, int steps, int samples) {
  RegionMapRequest req;
  req.state = InitialState(a2);
  req.family = SpectralModel::lorentzian(1.0, 1.0);
  req.param_min = lo;
  req.param_max = hi;
  req.param_steps = steps;
  req.solver = {.t_max = 50.0, .dt = 1e-3};
  req.time_samples = samples;
  return req;
}

}  // namespace

TEST(TwoQubitState, Examples) {
  const auto bell = two_qubit_state(InitialState(0.5), 1.0).mat();
  EXPECT_NEAR(bell(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(bell(2, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(bell(1, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(bell(3, 3).real(), 0.0, 1e-15);
  // A pure state is its own square.
  EXPECT_LT((bell * bell - bell).max_abs(), 1e-15);

  const auto ground = two_qubit_state(InitialState(0.3), 0.0).mat();
  EXPECT_LT((ground - ComplexMatrix::diagonal({0, 0, 0, 1})).max_abs(), 1e-15);

  EXPECT_THROW(two_qubit_state(InitialState(0.3), 1.2), DomainError);
  EXPECT_THROW(two_qubit_state(InitialState(0.3), -0.1), DomainError);
}

TEST(TwoQubitState, Spectrum) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double a2 = u(rng), q = u(rng);
    const auto eig = hermitian_eigen(two_qubit_state(InitialState(a2), q).mat());
    std::vector<double> ev(eig.values.begin(), eig.values.begin() + 4);
    std::vector<double> expected{0.0, 0.0, q, 1.0 - q};
    std::sort(ev.begin(), ev.end());
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(ev[k], expected[k], 1e-12) << a2 << " " << q;
  }
}

TEST(Kraus, Examples) {
  const InitialState s(0.3);
  EXPECT_LT(kraus_consistency_check(s, 1.0), 1e-15);
  EXPECT_LT(kraus_consistency_check(s, 0.0), 1e-15);
  for (double phi : {0.0, 0.7, 2.0, std::numbers::pi, 5.5}) {
    EXPECT_LT(kraus_consistency_check(s, std::polar(0.6, phi)), 1e-10) << phi;
  }
  EXPECT_THROW(kraus_consistency_check(s, 1.1), DomainError);
}

TEST(Kraus, RandomPairs) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double a2 = u(rng);
    const auto p = std::polar(std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    EXPECT_LT(kraus_consistency_check(InitialState(a2), p), 1e-10);
  }
}

TEST(ClassifyCell, EqualWeightsBackflow) {
  const InitialState s(0.5);
  for (double q : {0.1, 0.2, 0.4, 0.6, 0.9}) {
    const FlowCell c = classify_cell(s, q, 0.3);
    EXPECT_EQ(c.gamma_sign, GammaSign::Negative);
    EXPECT_EQ(c.of(Measure::TDD), Enhancement::Enhanced) << q;
    EXPECT_EQ(c.of(Measure::HDD), Enhancement::Enhanced) << q;
    // At alpha^2 = 0.5 the Bures discord decreases on (1/3, 0.5).
    const bool inside = q > 1.0 / 3.0 && q < 0.5;
    EXPECT_EQ(c.of(Measure::BDD), inside ? Enhancement::Degraded : Enhancement::Enhanced) << q;
  }
}

TEST(ClassifyCell, HellingerDipRegion) {
  const InitialState s(0.7);
  const FlowCell back = classify_cell(s, 0.45, 0.2);
  EXPECT_EQ(back.of(Measure::HDD), Enhancement::Degraded);
  EXPECT_EQ(category(back, Measure::HDD), Category::Orange);
  const FlowCell forward = classify_cell(s, 0.45, -0.2);
  EXPECT_EQ(forward.gamma_sign, GammaSign::Positive);
  EXPECT_EQ(forward.of(Measure::HDD), Enhancement::Enhanced);
  EXPECT_EQ(category(forward, Measure::HDD), Category::Red);
}

TEST(ClassifyCell, DeadBandAndUndefined) {
  const InitialState s(0.7);
  const FlowCell flat = classify_cell(s, 0.6, 1e-12);
  EXPECT_EQ(flat.gamma_sign, GammaSign::Zero);
  for (Measure m : kMeasures) EXPECT_EQ(flat.of(m), Enhancement::Stationary);
  EXPECT_EQ(category(flat, Measure::HDD), Category::Plain);

  const FlowCell gone = classify_cell(s, 1e-13, 0.1);
  EXPECT_EQ(gone.gamma_sign, GammaSign::Undefined);
  for (Measure m : kMeasures) {
    EXPECT_EQ(gone.of(m), Enhancement::Undefined);
    EXPECT_EQ(category(gone, m), Category::Undefined);
  }
}

TEST(ClassifyCell, ChainRuleAgreesWithDiscordDifferences) {
  std::size_t defined = 0, agree = 0;
  const double h = 1e-4;
  for (double a2 : {0.2, 0.5, 0.7, 0.9}) {
    for (double ratio : {0.05, 0.3, 1.0, 2.5}) {
      const auto model = SpectralModel::lorentzian(1.0, ratio);
      const InitialState s(a2);
      for (int i = 1; i <= 2000; ++i) {
        const double t = 0.01 * i;
        const double q0 = lorentzian_q_analytic(model, t), q1 = lorentzian_q_analytic(model, t + h);
        const FlowCell c = classify_cell(s, q0, lorentzian_dq_dt_analytic(model, t));
        for (std::size_t k = 0; k < kMeasures.size(); ++k) {
          const Enhancement e = c.enhancement[k];
          if (e != Enhancement::Enhanced && e != Enhancement::Degraded) continue;
          const double dd = closed_form(kMeasures[k], s, std::min(q1, 1.0)) - closed_form(kMeasures[k], s, q0);
          if (dd == 0.0) continue;
          ++defined;
          if ((dd > 0) == (e == Enhancement::Enhanced)) ++agree;
        }
      }
    }
  }
  ASSERT_GT(defined, 10000u);
  EXPECT_GE(static_cast<double>(agree) / static_cast<double>(defined), 0.999) << agree << "/" << defined;
}

TEST(ClassifyCell, TraceDiscordFollowsBackflow) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(0.0, 1.0), slope(-1.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double a2 = u(rng), q = u(rng);
    if (a2 == 0.0 || q < 1e-6) continue;
    const FlowCell c = classify_cell(InitialState(a2), q, slope(rng));
    if (c.gamma_sign == GammaSign::Undefined || c.gamma_sign == GammaSign::Zero) continue;
    EXPECT_EQ(c.of(Measure::TDD) == Enhancement::Enhanced, c.gamma_sign == GammaSign::Negative);
  }
}

TEST(Category, IsTotal) {
  const std::array<GammaSign, 4> signs{GammaSign::Negative, GammaSign::Positive, GammaSign::Zero, GammaSign::Undefined};
  const std::array<Enhancement, 4> states{Enhancement::Enhanced, Enhancement::Degraded, Enhancement::Stationary,
                                          Enhancement::Undefined};
  for (GammaSign g : signs) {
    for (Enhancement e : states) {
      FlowCell cell;
      cell.gamma_sign = g;
      cell.enhancement.fill(e);
      const Category c = category(cell, Measure::HDD);
      const bool defined = g != GammaSign::Undefined && e != Enhancement::Undefined;
      EXPECT_EQ(c != Category::Undefined, defined);
    }
  }
  FlowCell cyan;
  cyan.gamma_sign = GammaSign::Negative;
  cyan.enhancement.fill(Enhancement::Enhanced);
  EXPECT_EQ(category(cyan, Measure::BDD), Category::Cyan);
  EXPECT_EQ(to_string(Category::Orange), "Orange");
  EXPECT_EQ(to_string(GammaSign::Negative), "Negative");
  EXPECT_EQ(to_string(Enhancement::Degraded), "Degraded");
}

TEST(RegionMap, MarkovianLorentzianHasNoBackflow) {
  auto req = lorentzian_request(0.5, 3.0, 3.0, 2, 500);
  req.solver.t_max = 10.0;
  const RegionMap map = region_map(req);
  ASSERT_EQ(map.cells.size(), 1000u);
  EXPECT_TRUE(map.failures.empty());
  for (const auto& c : map.cells) EXPECT_EQ(c.gamma_sign, GammaSign::Positive);
  // Later on q falls below 1e-10 and dq/dt enters the dead band, but never turns positive.
  for (const auto& c : region_map(lorentzian_request(0.5, 3.0, 3.0, 2, 500)).cells)
    EXPECT_NE(c.gamma_sign, GammaSign::Negative);
}

TEST(RegionMap, ShapeAndIndexing) {
  const RegionMap map = region_map(lorentzian_request(0.7, 0.02, 1.98, 5, 40));
  ASSERT_EQ(map.params.size(), 5u);
  ASSERT_EQ(map.times.size(), 40u);
  EXPECT_DOUBLE_EQ(map.params.front(), 0.02);
  EXPECT_DOUBLE_EQ(map.params.back(), 1.98);
  EXPECT_DOUBLE_EQ(map.times.back(), 50.0);
  EXPECT_GT(map.times.front(), 0.0);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 40; ++j) {
      EXPECT_EQ(map.at(i, j).param_value, map.params[i]);
      EXPECT_EQ(map.at(i, j).t, map.times[j]);
    }
}

TEST(RegionMap, NarrowOrangeRegion) {
  const RegionMap map = region_map(lorentzian_request(0.7, 0.02, 1.98, 50, 500));
  for (Measure m : {Measure::HDD, Measure::BDD}) {
    const auto orange = map.count(m, Category::Orange);
    const auto cyan = map.count(m, Category::Cyan);
    EXPECT_GT(orange, 0u) << to_string(m);
    EXPECT_LT(orange, cyan) << to_string(m);
  }
}

TEST(RegionMap, EqualWeightsNeverOrangeForHellinger) {
  const RegionMap map = region_map(lorentzian_request(0.5, 0.02, 1.98, 50, 500));
  EXPECT_EQ(map.count(Measure::HDD, Category::Orange), 0u);
  EXPECT_GT(map.count(Measure::HDD, Category::Cyan), 0u);
}

TEST(RegionMap, OhmicHasBackflow) {
  RegionMapRequest req;
  req.state = InitialState(0.5);
  req.family = SpectralModel::ohmic(0.1, 3.0, 2.0);
  req.param_min = 0.02;
  req.param_max = 1.0;
  req.param_steps = 6;
  req.solver = default_solver_config(req.family, 10.0);
  req.time_samples = 200;
  const RegionMap map = region_map(req);
  EXPECT_TRUE(map.failures.empty());
  EXPECT_GT(map.count(Measure::TDD, Category::Cyan), 0u);
  EXPECT_EQ(map.count(Measure::TDD, Category::Orange), 0u);
}

TEST(RegionMap, WorkerCountDoesNotChangeResult) {
  auto req = lorentzian_request(0.7, 0.02, 1.98, 12, 100);
  const RegionMap one = region_map(req);
  req.workers = 4;
  const RegionMap many = region_map(req);
  ASSERT_EQ(one.cells.size(), many.cells.size());
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    EXPECT_EQ(one.cells[i].gamma_sign, many.cells[i].gamma_sign);
    EXPECT_EQ(one.cells[i].enhancement, many.cells[i].enhancement);
    EXPECT_EQ(one.cells[i].t, many.cells[i].t);
  }
}

TEST(RegionMap, RejectsBadRequests) {
  EXPECT_THROW(region_map(lorentzian_request(0.5, 0.02, 1.98, 1, 10)), DomainError);
  EXPECT_THROW(region_map(lorentzian_request(0.5, 0.0, 1.98, 5, 10)), DomainError);
  EXPECT_THROW(region_map(lorentzian_request(0.5, 1.0, 0.5, 5, 10)), DomainError);
}

TEST(RegionMap, SweptParameter) {
  const auto lor = with_swept_parameter(SpectralModel::lorentzian(2.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(lor.lorentzian().lambda, 1.0);
  const auto ohm = with_swept_parameter(SpectralModel::ohmic(0.1, 3.0, 2.0), 0.7);
  EXPECT_DOUBLE_EQ(ohm.ohmic().eta, 0.7);
}
