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

#ifndef PPRQ_SINGLE_NODE_H_
#define PPRQ_SINGLE_NODE_H_

#include <unordered_map>

#include "pprq/bidir.h"
#include "pprq/graph.h"
#include "pprq/oracle.h"
#include "pprq/rng.h"

namespace pprq {

// The base graph plus one virtual node s' = n with an edge to every real
// node. On the view pi(s', t) = (1 - alpha) * pi(t).
//
// s' is the last in-neighbor of every real node (its out-degree n is never
// below a real node's, and its id is largest). Uniform out-neighbors of s'
// come from JUMP. Queries touching s' are counted here; the rest are counted
// by the base oracle. stats() reports the sum.
class SuperSourceView final : public GraphOracle {
 public:
  explicit SuperSourceView(GraphOracle& base) : base_(&base) {}

  NodeId source() const { return static_cast<NodeId>(base_->node_count()); }

  std::size_t node_count() const override { return base_->node_count() + 1; }
  std::size_t edge_count() const override {
    return base_->edge_count() + base_->node_count();
  }
  Capabilities capabilities() const override { return base_->capabilities(); }
  QueryStats stats() const override { return base_->stats() + own_; }
  const QueryStats& virtual_stats() const { return own_; }

  std::size_t deg_in(NodeId v) override;
  std::size_t deg_out(NodeId u) override;
  NodeId in(NodeId v, std::size_t i) override;
  NodeId out(NodeId u, std::size_t i) override;
  NodeId in_sorted(NodeId v, std::size_t i) override;
  bool adj(NodeId u, NodeId v) override;
  NodeId jump() override { return base_->jump(); }
  NodeId sample_out_neighbor(NodeId u, std::size_t degree, Rng& rng) override;

 private:
  bool is_virtual(NodeId v) const { return v == source(); }
  void check(NodeId v) const;
  bool past_real_end(NodeId v, std::size_t i);

  GraphOracle* base_;
  QueryStats own_;
  std::unordered_map<NodeId, std::size_t> real_in_degree_;
};

// Augmented graph materialized, for checks against the exact oracle.
DirectedGraph with_super_source(const DirectedGraph& g);

struct AdaptiveResult {
  double estimate = 0.0;
  double final_delta = 1.0;
  std::size_t rounds = 0;
};

// Halving delta from 1; stops when the estimate exceeds (1+eps)*delta or the
// floor alpha/(2n) is reached, in which case the last estimate is returned.
AdaptiveResult single_node_adaptive_detailed(GraphOracle& o, NodeId t,
                                             double alpha, double eps,
                                             double p_f, Rng& rng);
double single_node_adaptive(GraphOracle& o, NodeId t, double alpha,
                            double eps, double p_f, Rng& rng);

// BiPPR from s' on the view at delta = alpha/(2n), rescaled by 1/(1-alpha).
double single_node_avg_jump(GraphOracle& o, NodeId t, double alpha,
                            double eps, double p_f, Rng& rng,
                            double walk_constant = 16.0);

// The bidirectional randomized estimator from s' on the view.
double single_node_avg_full(GraphOracle& o, NodeId t, double alpha,
                            double eps, double p_f, Rng& rng,
                            const Multipliers& mult = {});

}  // namespace pprq

#endif  // PPRQ_SINGLE_NODE_H_
