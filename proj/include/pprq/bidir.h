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

#ifndef PPRQ_BIDIR_H_
#define PPRQ_BIDIR_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pprq/graph.h"
#include "pprq/oracle.h"
#include "pprq/rng.h"

namespace pprq {

// Per-level thresholds theta_i and sampling granularities gamma_i, i = 0..L.
struct LevelSchedule {
  std::size_t L = 1;
  std::vector<double> theta;
  std::vector<double> gamma;

  double theta_sum() const;
  // min_i gamma_i * theta_i
  double theta_floor() const;
  // Increment granularity for pushes landing on level i.
  double grain(std::size_t i) const { return gamma[i] * theta[i]; }

  static LevelSchedule uniform(std::size_t L, double theta, double gamma);
};

struct Multipliers {
  double c_theta = 1.0;
  double c_L = 1.0;
  double c_gamma = 1.0;
  double c_nr = 1.0;
  double c_ns = 1.0;
  double c_tau = 1.0;
};

struct ConstraintCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

struct NewAlgoParams {
  double alpha = 0.2;
  double delta = 0.0;
  double eps = 0.0;
  double p_f = 0.0;
  LevelSchedule schedule;
  std::uint64_t n_r = 1;
  std::uint64_t n_s = 1;
  double tau = 1.0;
  Multipliers mult;
  // Five checks, in order: floor, gamma bound, level count, walk count,
  // heavy-threshold balance. All O/Omega constants taken as 1.
  std::vector<ConstraintCheck> constraints;

  bool all_satisfied() const;
};

// Uniform schedule theta_i = c_theta * delta^(2/3) and the derived counts.
// Constraint outcomes are reported; with strict = true any failed one
// raises ConstraintViolation. Invalid inputs always raise.
NewAlgoParams derive_params(double alpha, double delta, double eps,
                            double p_f, std::size_t n,
                            const Multipliers& mult = {}, bool strict = false);

// One push of node v at level i.
struct PushRecord {
  std::uint32_t level = 0;
  double amount = 0.0;
};

struct RandPushState {
  NodeId target = 0;
  double alpha = 0.2;
  std::size_t L = 1;
  // r_hat[i][v], r_hat_prime[i][v]; pushed entries are zeroed.
  std::vector<std::unordered_map<NodeId, double>> r_hat;
  std::vector<std::unordered_map<NodeId, double>> r_hat_prime;
  std::unordered_map<NodeId, double> p_hat;
  // Pushes per node in level order. chi_{i+1}(u,v) is recovered as
  // (1-alpha) * amount / d_out(u) for the push of v at level i.
  std::unordered_map<NodeId, std::vector<PushRecord>> pushes;
  std::unordered_set<NodeId> heavy;
  std::vector<NodeId> heavy_list;  // ascending
  std::vector<std::uint64_t> pushes_per_level;

  explicit RandPushState(NodeId t = 0, double alpha = 0.2, std::size_t L = 1);

  double reserve(NodeId v) const;
  bool pushed(NodeId v, std::size_t level) const;
  // 1_i(v): true unless v was pushed at level i. Always true at level L.
  bool indicator(NodeId v, std::size_t level) const {
    return level >= L || !pushed(v, level);
  }
  // sum_i 1_i(u) r_hat_i(u): the residue left in place.
  double residual(NodeId u) const;
  // sum_{i>=1} 1_i(u) chi_i(u,v) given d_out(u); excludes the level-0 term.
  double chi_sum(NodeId u, NodeId v, std::size_t d_out_u) const;
  // The level-0 term of R(u): 1 for the target unless it was pushed.
  double level0_term(NodeId u) const {
    return (u == target && indicator(u, 0)) ? 1.0 : 0.0;
  }
};

// Randomized push of v at level i (receiving level i+1). Two independent
// uniform thresholds drive r_hat and r_hat_prime along one sorted scan.
void rand_push_threshold(GraphOracle& o, NodeId v, std::size_t level,
                         RandPushState& state, const LevelSchedule& schedule,
                         Rng& rng);

// Levels 0..L-1 in order; within a level, nodes with
// r_hat_prime_i(v) > theta_i in ascending id. Heavy set built at the end.
RandPushState backward_phase(GraphOracle& o, NodeId t,
                             const NewAlgoParams& params, Rng& rng);

// Exact R(u) by full out-list traversal. Test helper.
double compute_R(const RandPushState& state, const DirectedGraph& g, NodeId u);

// Unbiased estimate of R(u_k): ADJ over the heavy set plus n_s uniform
// samples from the remaining out-neighbors.
double estimate_R_hat(GraphOracle& o, const RandPushState& state, NodeId u_k,
                      const NewAlgoParams& params, Rng& rng);

struct BidirResult {
  double estimate = 0.0;
  std::uint64_t walks = 0;
  std::size_t heavy_size = 0;
  std::vector<std::uint64_t> pushes_per_level;
};

BidirResult single_pair_ppr_detailed(GraphOracle& o, NodeId s, NodeId t,
                                     const NewAlgoParams& params, Rng& rng);

double single_pair_ppr(GraphOracle& o, NodeId s, NodeId t,
                       const NewAlgoParams& params, Rng& rng);

// JSON diagnostics: schedule, per-level pushes, heavy size, queries,
// estimate.
std::string diagnostics_json(const NewAlgoParams& params,
                             const BidirResult& result,
                             const QueryStats& stats);

}  // namespace pprq

#endif  // PPRQ_BIDIR_H_
