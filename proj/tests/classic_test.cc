// Copyright 2026 The pprq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "pprq/classic.h"
#include "pprq/errors.h"
#include "pprq/exact.h"
#include "pprq/instances.h"
#include "test_util.h"

namespace pprq {
namespace {

constexpr double kAlpha = 0.2;
constexpr double kEps = 0.1;
constexpr double kPf = 0.1;
constexpr int kTrials = 200;
// Success-rate floor 1 - p_f - 3 sigma for 200 trials.
const double kFloor = 1.0 - kPf - 3.0 * std::sqrt(kPf * (1 - kPf) / kTrials);

TEST(Walk, OneStepLaw) {
  const auto g = testing::chain2();
  OracleHandle o(g, Capabilities::none());
  Rng rng(1);
  const int n = 100000;
  int hits = 0;
  std::vector<double> lengths;
  for (int i = 0; i < n; ++i) {
    const auto w = sample_walk(o, 0, kAlpha, rng);
    hits += w.terminal == 1;
    lengths.push_back(static_cast<double>(w.length));
  }
  const double sigma = std::sqrt(n * 0.8 * 0.2);
  EXPECT_LE(std::abs(hits - 0.8 * n), 4 * sigma);
  EXPECT_TRUE(testing::within_se(testing::mean_se(lengths), 0.8 / 0.2));
  // Two queries per step.
  double steps = 0.0;
  for (double l : lengths) steps += l;
  EXPECT_EQ(o.stats().total(), static_cast<std::uint64_t>(2 * steps));
  EXPECT_EQ(o.stats().deg_out, o.stats().out);
}

TEST(MonteCarlo, SingletonExact) {
  const auto g = testing::singleton();
  OracleHandle o(g, Capabilities::none());
  Rng rng(2);
  EXPECT_EQ(monte_carlo_pair(o, 0, 0, kAlpha, 0.3, kEps, kPf, rng).estimate,
            1.0);
}

TEST(MonteCarlo, ChainSuccessRate) {
  const auto g = testing::chain2();
  int ok = 0;
  for (int k = 0; k < kTrials; ++k) {
    OracleHandle o(g, Capabilities::none());
    Rng rng(derive_seed(3, k));
    const double e =
        monte_carlo_pair(o, 0, 1, kAlpha, 0.1, kEps, kPf, rng).estimate;
    ok += std::abs(e - 0.8) < 0.08;
  }
  EXPECT_GE(ok / double(kTrials), kFloor);
}

TEST(MonteCarlo, SpWorstPostSwap) {
  InstanceSpec s;
  s.family = Family::kSpWorst;
  s.L = s.D = 2;
  s.swap = SwapChoice{};
  const auto inst = generate(s);
  int ok = 0;
  for (int k = 0; k < 50; ++k) {
    OracleHandle o(inst.graph, Capabilities::none());
    Rng rng(derive_seed(4, k));
    const double e = monte_carlo_pair(o, inst.meta.source, inst.meta.target,
                                      kAlpha, 0.1, kEps, kPf, rng)
                         .estimate;
    ok += std::abs(e - 0.128) < kEps * 0.128;
  }
  EXPECT_GE(ok, 45);
}

TEST(MonteCarlo, UnbiasedMean) {
  const auto g = random_digraph(30, 2.0, 5);
  const double truth = exact_single_source(g, 0, kAlpha)[0];
  std::vector<double> xs;
  for (int k = 0; k < 10000; ++k) {
    OracleHandle o(g, Capabilities::none());
    Rng rng(derive_seed(6, k));
    xs.push_back(monte_carlo_pair(o, 0, 0, kAlpha, 1.0, 0.5, 0.5, rng).estimate);
  }
  EXPECT_TRUE(testing::within_se(testing::mean_se(xs), truth));
}

TEST(MonteCarlo, SingleSourceSumsToOne) {
  const auto g = random_digraph(20, 2.0, 7);
  OracleHandle o(g, Capabilities::none());
  Rng rng(8);
  const auto v = monte_carlo_single_source(o, 0, kAlpha, 0.2, 0.2, kPf, rng);
  double sum = 0.0;
  for (double x : v) sum += x;
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(PushBack, ChainOnePush) {
  const auto g = testing::chain2();
  OracleHandle o(g, Capabilities::none());
  PushFrontier st(2, 1, 0.5);
  push_back(o, 1, st, kAlpha);
  EXPECT_NEAR(st.r[0], 0.8, 1e-15);
  EXPECT_NEAR(st.p[1], 0.2, 1e-15);
  // Self-loop feeds back into t.
  EXPECT_NEAR(st.r[1], 0.8, 1e-15);
}

TEST(ApproxContributions, ThresholdIsInclusive) {
  const auto g = testing::singleton();
  OracleHandle o(g, Capabilities::none());
  const auto st = approx_contributions(o, 0, kAlpha, 1.0);
  EXPECT_EQ(st.pushes, 1u);
  EXPECT_NEAR(st.p[0], 0.2, 1e-15);
  EXPECT_NEAR(st.r[0], 0.8, 1e-15);
}

TEST(ApproxContributions, ChainBand) {
  const auto g = testing::chain2();
  OracleHandle o(g, Capabilities::none());
  const auto st = approx_contributions(o, 1, kAlpha, 0.05);
  EXPECT_GT(st.p[0], 0.75);
  EXPECT_LE(st.p[0], 0.8);
  EXPECT_THROW(approx_contributions(o, 1, kAlpha, 0.0), Error);
}

TEST(ApproxContributions, SandwichOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_digraph(70, 3.0, 100 + seed);
    const auto col = exact_single_target(g, 3, kAlpha);
    OracleHandle o(g, Capabilities::none());
    const auto st = approx_contributions(o, 3, kAlpha, 1e-3);
    for (NodeId s = 0; s < 70; ++s) {
      EXPECT_LE(st.p[s], col[s] + 1e-12);
      EXPECT_LE(col[s], st.p[s] + 1e-3 + 1e-12);
      EXPECT_LT(st.r[s], 1e-3);
    }
  }
}

TEST(PowerIteration, SingletonTail) {
  const auto g = testing::singleton();
  OracleHandle o(g, Capabilities::none());
  const auto v = power_iteration_target(o, 0, kAlpha, 10);
  EXPECT_GE(v[0], 1.0 - std::pow(0.8, 10));
  EXPECT_LE(v[0], 1.0);
}

TEST(PowerIteration, MatchesBruteForce) {
  const auto g = testing::chain2();
  OracleHandle o(g, Capabilities::none());
  const auto v = power_iteration_target(o, 1, kAlpha, 2);
  EXPECT_NEAR(v[0], brute_force_pair(g, 0, 1, kAlpha, 2), 1e-12);
  EXPECT_NEAR(v[0], 0.16 + 0.8 * 0.8 * 0.2, 1e-12);
}

TEST(PowerIteration, LevelsFormula) {
  const std::size_t L = power_iteration_levels(kAlpha, 0.01, 0.1);
  EXPECT_LE(std::pow(0.8, L + 1), 0.001);
  EXPECT_GT(std::pow(0.8, L), 0.001);
}

TEST(Bippr, ChainSuccessRate) {
  const auto g = testing::chain2();
  int ok = 0;
  for (int k = 0; k < kTrials; ++k) {
    OracleHandle o(g, Capabilities::none());
    Rng rng(derive_seed(9, k));
    const double e =
        bippr_pair(o, 0, 1, kAlpha, 0.1, kEps, kPf, 0.5, rng).estimate;
    ok += std::abs(e - 0.8) < 0.08;
  }
  EXPECT_GE(ok / double(kTrials), kFloor);
}

TEST(Bippr, WalkCountFormula) {
  EXPECT_EQ(bippr_walk_count(0.1, 0.01, 0.1, 0.1, 16.0),
            static_cast<std::uint64_t>(
                std::ceil(16.0 * 0.1 * std::log(10.0) / (0.01 * 0.01))));
  EXPECT_NEAR(bippr_default_r_max(4.0, 0.01), 0.2, 1e-15);
}

TEST(Rbs, UnbiasedAtEverySource) {
  const auto g = random_digraph(25, 3.0, 21);
  const std::size_t L = 12;
  // Expectation of the randomized push equals the deterministic one.
  OracleHandle od(g, Capabilities::none());
  const auto det = power_iteration_target(od, 2, kAlpha, L);
  std::vector<std::vector<double>> samples(25);
  for (int k = 0; k < 4000; ++k) {
    OracleHandle o(g, {false, true, false});
    Rng rng(derive_seed(22, k));
    const auto v = rbs_single_target(o, 2, kAlpha, 0.05, L, rng);
    for (NodeId s = 0; s < 25; ++s) samples[s].push_back(v[s]);
  }
  for (NodeId s = 0; s < 25; ++s) {
    EXPECT_TRUE(testing::within_se(testing::mean_se(samples[s]), det[s]))
        << "source " << s;
  }
}

TEST(Rbs, NeedsInSorted) {
  const auto g = testing::chain2();
  OracleHandle o(g, Capabilities::none());
  Rng rng(1);
  EXPECT_THROW(rbs_single_target(o, 1, kAlpha, 0.1, 3, rng),
               CapabilityDisabled);
}

TEST(JumpMc, SingleNode) {
  const auto g = testing::singleton();
  OracleHandle o(g, {true, false, false}, 3);
  Rng rng(4);
  const auto v = single_target_jump_mc(o, 0, kAlpha, 0.5, kEps, kPf, rng);
  EXPECT_EQ(v[0], 1.0);
  OracleHandle none(g, Capabilities::none());
  EXPECT_THROW(single_target_jump_mc(none, 0, kAlpha, 0.5, kEps, kPf, rng),
               CapabilityDisabled);
}

TEST(JumpMc, CoverageCost) {
  // Coupon collector with n = 2: expected 2 * H_2 = 3 jumps.
  const auto g = testing::chain2();
  std::vector<double> jumps;
  for (int k = 0; k < 5000; ++k) {
    OracleHandle o(g, {true, false, false}, derive_seed(5, k));
    const auto order = cover_by_jumps(o);
    EXPECT_EQ(order.size(), 2u);
    jumps.push_back(static_cast<double>(o.stats().jump));
  }
  EXPECT_TRUE(testing::within_se(testing::mean_se(jumps), 3.0));
}

TEST(BidirJump, DegenerateRmax) {
  // d * delta / n = 1: r_max = 1, a single push of t, then walks.
  const auto g = build_graph({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 2);
  const auto col = exact_single_target(g, 1, kAlpha);
  OracleHandle o(g, {true, false, false}, 8);
  Rng rng(9);
  const auto v = single_target_bidir_jump(o, 1, kAlpha, 1.0, kEps, kPf, rng);
  EXPECT_EQ(o.stats().deg_in, 1u);
  for (NodeId s = 0; s < 2; ++s) EXPECT_NEAR(v[s], col[s], kEps * col[s]);
}

TEST(Estimators, CountersOnlyThroughOracle) {
  const auto g = random_digraph(40, 3.0, 31);
  OracleHandle o(g, Capabilities::none());
  Rng rng(32);
  const auto est = bippr_pair(o, 0, 1, kAlpha, 0.05, kEps, kPf, 0.05, rng);
  const QueryStats q = o.stats();
  EXPECT_EQ(q.total(), q.deg_in + q.deg_out + q.in + q.out);
  EXPECT_GT(q.in, 0u);
  EXPECT_GT(q.out, 0u);
  EXPECT_GE(est.walks, 1u);
}

}  // namespace
}  // namespace pprq
