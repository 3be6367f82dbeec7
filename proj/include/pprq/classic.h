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

#ifndef PPRQ_CLASSIC_H_
#define PPRQ_CLASSIC_H_

#include <cstdint>
#include <deque>
#include <vector>

#include "pprq/oracle.h"
#include "pprq/rng.h"

namespace pprq {

// Default multiplier in walk counts c * log(1/p_f) / (eps^2 delta).
inline constexpr double kDefaultWalkConstant = 16.0;

struct WalkRecord {
  NodeId start = 0;
  NodeId terminal = 0;
  std::uint64_t length = 0;
};

struct PairEstimate {
  double estimate = 0.0;
  std::uint64_t walks = 0;
};

// Reserves and residues of a backward push toward a fixed target. Dense over
// the oracle's node range.
struct PushFrontier {
  std::vector<double> p;
  std::vector<double> r;
  double r_max = 0.0;
  std::uint64_t pushes = 0;
  std::deque<NodeId> active;
  std::vector<char> queued;

  PushFrontier() = default;
  PushFrontier(std::size_t n, NodeId t, double r_max);
};

// Alpha-discounted walk; 2 queries per step.
WalkRecord sample_walk(GraphOracle& o, NodeId s, double alpha, Rng& rng);

// ceil(c * ln(1/p_f) / (eps^2 * delta))
std::uint64_t monte_carlo_walk_count(double delta, double eps, double p_f,
                                     double c = kDefaultWalkConstant);

PairEstimate monte_carlo_pair(GraphOracle& o, NodeId s, NodeId t,
                              double alpha, double delta, double eps,
                              double p_f, Rng& rng,
                              double c = kDefaultWalkConstant);

// Fraction of walks from s ending at each node.
std::vector<double> monte_carlo_single_source(
    GraphOracle& o, NodeId s, double alpha, double delta, double eps,
    double p_f, Rng& rng, double c = kDefaultWalkConstant);

// One backward push at v. Nodes whose residue reaches r_max are queued.
void push_back(GraphOracle& o, NodeId v, PushFrontier& state, double alpha);

// Pushes while some residue is >= r_max. Afterwards every residue is below
// r_max and p(s) <= pi(s,t) <= p(s) + r_max for all s.
PushFrontier approx_contributions(GraphOracle& o, NodeId t, double alpha,
                                  double r_max);

// Level-synchronous deterministic push for L rounds. Entry s is
// sum_{i<=L} alpha * r_i(s); additive error at most (1-alpha)^(L+1).
std::vector<double> power_iteration_target(GraphOracle& o, NodeId t,
                                           double alpha, std::size_t L);

// Smallest L with (1-alpha)^(L+1) <= eps * delta.
std::size_t power_iteration_levels(double alpha, double delta, double eps);

// sqrt(d * delta), the balance point of push cost and walk cost.
double bippr_default_r_max(double avg_degree, double delta);

std::uint64_t bippr_walk_count(double r_max, double delta, double eps,
                               double p_f, double c = kDefaultWalkConstant);

PairEstimate bippr_pair(GraphOracle& o, NodeId s, NodeId t, double alpha,
                        double delta, double eps, double p_f, double r_max,
                        Rng& rng, double c = kDefaultWalkConstant);

// Randomized level-synchronous push over IN-SORTED. Increments below theta
// are rounded up to theta with matching probability, using one uniform
// threshold per (node, level). Returns sum_{i<=L} alpha * r_i(s) for all s.
std::vector<double> rbs_single_target(GraphOracle& o, NodeId t, double alpha,
                                      double theta, std::size_t L, Rng& rng);

// Levels such that the truncation tail is at most eps*delta/4.
std::size_t rbs_levels(double alpha, double delta, double eps);

// Granularity for additive error eps*delta with failure p_f, union-bounded
// over union_size estimates.
double rbs_theta(double alpha, double delta, double eps, double p_f,
                 std::size_t union_size = 1);

// rbs_single_target with rbs_levels / rbs_theta, union over all sources.
std::vector<double> rbs_single_target_auto(GraphOracle& o, NodeId t,
                                           double alpha, double delta,
                                           double eps, double p_f, Rng& rng);

// JUMP until every node has been seen; returns nodes in discovery order.
std::vector<NodeId> cover_by_jumps(GraphOracle& o);

std::vector<double> single_target_jump_mc(GraphOracle& o, NodeId t,
                                          double alpha, double delta,
                                          double eps, double p_f, Rng& rng,
                                          double c = kDefaultWalkConstant);

std::vector<double> single_target_bidir_jump(GraphOracle& o, NodeId t,
                                             double alpha, double delta,
                                             double eps, double p_f, Rng& rng,
                                             double c = kDefaultWalkConstant);

}  // namespace pprq

#endif  // PPRQ_CLASSIC_H_
