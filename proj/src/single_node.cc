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

#include "pprq/single_node.h"

#include <cmath>

#include "pprq/classic.h"
#include "pprq/errors.h"

namespace pprq {

void SuperSourceView::check(NodeId v) const {
  if (v > base_->node_count()) throw NodeIdOutOfRange(v);
}

bool SuperSourceView::past_real_end(NodeId v, std::size_t i) {
  // Callers normally learn the degree through deg_in first; the cached
  // real degree places s' last without billing another query.
  auto it = real_in_degree_.find(v);
  if (it == real_in_degree_.end()) {
    it = real_in_degree_.emplace(v, base_->deg_in(v)).first;
  }
  if (i > it->second) throw IndexOutOfRange(v, i);
  return i == it->second;
}

std::size_t SuperSourceView::deg_in(NodeId v) {
  check(v);
  if (is_virtual(v)) {
    ++own_.deg_in;
    return 0;
  }
  const std::size_t d = base_->deg_in(v);
  real_in_degree_[v] = d;
  return d + 1;
}

std::size_t SuperSourceView::deg_out(NodeId u) {
  check(u);
  if (is_virtual(u)) {
    ++own_.deg_out;
    return base_->node_count();
  }
  return base_->deg_out(u);
}

NodeId SuperSourceView::in(NodeId v, std::size_t i) {
  check(v);
  if (is_virtual(v)) throw IndexOutOfRange(v, i);
  if (past_real_end(v, i)) {
    ++own_.in;
    return source();
  }
  return base_->in(v, i);
}

NodeId SuperSourceView::in_sorted(NodeId v, std::size_t i) {
  require_capabilities(*base_, {false, true, false});
  check(v);
  if (is_virtual(v)) throw IndexOutOfRange(v, i);
  if (past_real_end(v, i)) {
    ++own_.in_sorted;
    return source();
  }
  return base_->in_sorted(v, i);
}

NodeId SuperSourceView::out(NodeId u, std::size_t i) {
  check(u);
  if (is_virtual(u)) {
    if (i >= base_->node_count()) throw IndexOutOfRange(u, i);
    ++own_.out;
    return static_cast<NodeId>(i);
  }
  return base_->out(u, i);
}

bool SuperSourceView::adj(NodeId u, NodeId v) {
  require_capabilities(*base_, {false, false, true});
  check(u);
  check(v);
  if (is_virtual(u) || is_virtual(v)) {
    ++own_.adj;
    return is_virtual(u) && !is_virtual(v);
  }
  return base_->adj(u, v);
}

NodeId SuperSourceView::sample_out_neighbor(NodeId u, std::size_t degree,
                                            Rng& rng) {
  if (is_virtual(u)) return base_->jump();
  return base_->out(u, rng.below(degree));
}

DirectedGraph with_super_source(const DirectedGraph& g) {
  auto edges = g.edges();
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId v = 0; v < n; ++v) edges.emplace_back(n, v);
  return build_graph(edges, g.node_count() + 1);
}

AdaptiveResult single_node_adaptive_detailed(GraphOracle& o, NodeId t,
                                             double alpha, double eps,
                                             double p_f, Rng& rng) {
  require_capabilities(o, {false, true, false});
  if (t >= o.node_count()) throw NodeIdOutOfRange(t);
  const double n = static_cast<double>(o.node_count());
  const double floor_delta = alpha / (2.0 * n);
  const double rounds_max = std::ceil(std::log2(2.0 * n / alpha));
  const double pf_round = p_f / std::max(1.0, rounds_max);
  AdaptiveResult res;
  double delta = 1.0;
  while (true) {
    // delta bounds pi(t) itself here, so no union over sources is needed.
    const double theta = rbs_theta(alpha, delta, eps, pf_round, 1);
    const auto est = rbs_single_target(o, t, alpha, theta,
                                       rbs_levels(alpha, delta, eps), rng);
    double sum = 0.0;
    for (double x : est) sum += x;
    res.estimate = sum / n;
    res.final_delta = delta;
    ++res.rounds;
    if (res.estimate > (1.0 + eps) * delta || delta <= floor_delta) break;
    delta /= 2.0;
  }
  return res;
}

double single_node_adaptive(GraphOracle& o, NodeId t, double alpha,
                            double eps, double p_f, Rng& rng) {
  return single_node_adaptive_detailed(o, t, alpha, eps, p_f, rng).estimate;
}

double single_node_avg_jump(GraphOracle& o, NodeId t, double alpha,
                            double eps, double p_f, Rng& rng,
                            double walk_constant) {
  require_capabilities(o, {true, false, false});
  SuperSourceView view(o);
  const double delta = alpha / (2.0 * static_cast<double>(o.node_count()));
  const double r_max = bippr_default_r_max(view.average_degree(), delta);
  const auto est = bippr_pair(view, view.source(), t, alpha, delta, eps, p_f,
                              r_max, rng, walk_constant);
  return est.estimate / (1.0 - alpha);
}

double single_node_avg_full(GraphOracle& o, NodeId t, double alpha,
                            double eps, double p_f, Rng& rng,
                            const Multipliers& mult) {
  require_capabilities(o, Capabilities::all());
  SuperSourceView view(o);
  const double delta = alpha / (2.0 * static_cast<double>(o.node_count()));
  const auto params =
      derive_params(alpha, delta, eps, p_f, view.node_count(), mult);
  return single_pair_ppr(view, view.source(), t, params, rng) / (1.0 - alpha);
}

}  // namespace pprq
