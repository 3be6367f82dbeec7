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

#include "pprq/classic.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "pprq/errors.h"

namespace pprq {
namespace {

void check_unit(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(std::string(name) + " must be in (0,1)");
  }
}

void check_pair_args(double alpha, double delta, double eps, double p_f) {
  check_unit(alpha, "alpha");
  if (!(delta > 0.0 && delta <= 1.0)) throw Error("delta must be in (0,1]");
  check_unit(eps, "eps");
  check_unit(p_f, "p_f");
}

std::uint64_t ceil_count(double x) {
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(x)));
}

// Sparse level vector with deterministic (ascending id) iteration.
using Level = std::map<NodeId, double>;

}  // namespace

PushFrontier::PushFrontier(std::size_t n, NodeId t, double r_max_in)
    : p(n, 0.0), r(n, 0.0), r_max(r_max_in), queued(n, 0) {
  r[t] = 1.0;
  if (r[t] >= r_max) {
    active.push_back(t);
    queued[t] = 1;
  }
}

WalkRecord sample_walk(GraphOracle& o, NodeId s, double alpha, Rng& rng) {
  WalkRecord w{s, s, 0};
  while (!rng.bernoulli(alpha)) {
    w.terminal = o.random_out_neighbor(w.terminal, rng);
    ++w.length;
  }
  return w;
}

std::uint64_t monte_carlo_walk_count(double delta, double eps, double p_f,
                                     double c) {
  return ceil_count(c * std::log(1.0 / p_f) / (eps * eps * delta));
}

PairEstimate monte_carlo_pair(GraphOracle& o, NodeId s, NodeId t,
                              double alpha, double delta, double eps,
                              double p_f, Rng& rng, double c) {
  check_pair_args(alpha, delta, eps, p_f);
  const std::uint64_t walks = monte_carlo_walk_count(delta, eps, p_f, c);
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < walks; ++k) {
    if (sample_walk(o, s, alpha, rng).terminal == t) ++hits;
  }
  return {static_cast<double>(hits) / static_cast<double>(walks), walks};
}

std::vector<double> monte_carlo_single_source(GraphOracle& o, NodeId s,
                                              double alpha, double delta,
                                              double eps, double p_f,
                                              Rng& rng, double c) {
  check_pair_args(alpha, delta, eps, p_f);
  const std::uint64_t walks = monte_carlo_walk_count(delta, eps, p_f, c);
  std::vector<double> est(o.node_count(), 0.0);
  const double w = 1.0 / static_cast<double>(walks);
  for (std::uint64_t k = 0; k < walks; ++k) {
    est[sample_walk(o, s, alpha, rng).terminal] += w;
  }
  return est;
}

void push_back(GraphOracle& o, NodeId v, PushFrontier& state, double alpha) {
  const double amount = state.r[v];
  state.r[v] = 0.0;
  state.p[v] += alpha * amount;
  ++state.pushes;
  const std::size_t din = o.deg_in(v);
  for (std::size_t j = 0; j < din; ++j) {
    const NodeId u = o.in(v, j);
    const std::size_t dout = o.deg_out(u);
    state.r[u] += (1.0 - alpha) * amount / static_cast<double>(dout);
    if (state.r[u] >= state.r_max && !state.queued[u]) {
      state.queued[u] = 1;
      state.active.push_back(u);
    }
  }
}

PushFrontier approx_contributions(GraphOracle& o, NodeId t, double alpha,
                                  double r_max) {
  check_unit(alpha, "alpha");
  if (!(r_max > 0.0)) throw Error("r_max must be positive");
  if (t >= o.node_count()) throw NodeIdOutOfRange(t);
  PushFrontier state(o.node_count(), t, r_max);
  while (!state.active.empty()) {
    const NodeId v = state.active.front();
    state.active.pop_front();
    state.queued[v] = 0;
    if (state.r[v] >= r_max) push_back(o, v, state, alpha);
  }
  return state;
}

std::vector<double> power_iteration_target(GraphOracle& o, NodeId t,
                                           double alpha, std::size_t L) {
  check_unit(alpha, "alpha");
  if (L < 1) throw Error("L must be >= 1");
  if (t >= o.node_count()) throw NodeIdOutOfRange(t);
  std::vector<double> p(o.node_count(), 0.0);
  Level cur{{t, 1.0}};
  for (std::size_t i = 0; i < L; ++i) {
    Level next;
    for (const auto& [v, r] : cur) {
      p[v] += alpha * r;
      const std::size_t din = o.deg_in(v);
      for (std::size_t j = 0; j < din; ++j) {
        const NodeId u = o.in(v, j);
        next[u] += (1.0 - alpha) * r / static_cast<double>(o.deg_out(u));
      }
    }
    cur.swap(next);
  }
  for (const auto& [v, r] : cur) p[v] += alpha * r;
  return p;
}

std::size_t power_iteration_levels(double alpha, double delta, double eps) {
  const double rounds = std::ceil(std::log(eps * delta) / std::log(1.0 - alpha));
  return static_cast<std::size_t>(std::max(1.0, rounds - 1.0));
}

double bippr_default_r_max(double avg_degree, double delta) {
  return std::sqrt(avg_degree * delta);
}

std::uint64_t bippr_walk_count(double r_max, double delta, double eps,
                               double p_f, double c) {
  return ceil_count(c * r_max * std::log(1.0 / p_f) / (eps * eps * delta));
}

PairEstimate bippr_pair(GraphOracle& o, NodeId s, NodeId t, double alpha,
                        double delta, double eps, double p_f, double r_max,
                        Rng& rng, double c) {
  check_pair_args(alpha, delta, eps, p_f);
  if (s >= o.node_count()) throw NodeIdOutOfRange(s);
  const PushFrontier fr = approx_contributions(o, t, alpha, r_max);
  const std::uint64_t walks = bippr_walk_count(r_max, delta, eps, p_f, c);
  double sum = 0.0;
  for (std::uint64_t k = 0; k < walks; ++k) {
    sum += fr.r[sample_walk(o, s, alpha, rng).terminal];
  }
  return {fr.p[s] + sum / static_cast<double>(walks), walks};
}

std::vector<double> rbs_single_target(GraphOracle& o, NodeId t, double alpha,
                                      double theta, std::size_t L, Rng& rng) {
  check_unit(alpha, "alpha");
  if (!(theta > 0.0)) throw Error("theta must be positive");
  require_capabilities(o, {false, true, false});
  if (t >= o.node_count()) throw NodeIdOutOfRange(t);
  std::vector<double> p(o.node_count(), 0.0);
  Level cur{{t, 1.0}};
  for (std::size_t i = 0; i < L; ++i) {
    Level next;
    for (const auto& [v, r] : cur) {
      p[v] += alpha * r;
      const std::size_t din = o.deg_in(v);
      const double threshold = theta * rng.uniform();
      for (std::size_t j = 0; j < din; ++j) {
        const NodeId u = o.in_sorted(v, j);
        const double chi =
            (1.0 - alpha) * r / static_cast<double>(o.deg_out(u));
        if (chi >= theta) {
          next[u] += chi;
        } else if (chi > threshold) {
          next[u] += theta;
        } else {
          break;
        }
      }
    }
    cur.swap(next);
  }
  for (const auto& [v, r] : cur) p[v] += alpha * r;
  return p;
}

std::size_t rbs_levels(double alpha, double delta, double eps) {
  return power_iteration_levels(alpha, delta, eps / 4.0);
}

double rbs_theta(double alpha, double delta, double eps, double p_f,
                 std::size_t union_size) {
  // Bernstein with variance <= theta * pi / alpha and increments <= theta,
  // applied with 3/4 of the error budget (the rest covers truncation).
  const double e = 0.75 * eps;
  const double logterm =
      std::log(2.0 * static_cast<double>(std::max<std::size_t>(1, union_size)) /
               p_f);
  return alpha * e * e * delta / (2.5 * logterm);
}

std::vector<double> rbs_single_target_auto(GraphOracle& o, NodeId t,
                                           double alpha, double delta,
                                           double eps, double p_f, Rng& rng) {
  check_pair_args(alpha, delta, eps, p_f);
  return rbs_single_target(o, t, alpha,
                           rbs_theta(alpha, delta, eps, p_f, o.node_count()),
                           rbs_levels(alpha, delta, eps), rng);
}

std::vector<NodeId> cover_by_jumps(GraphOracle& o) {
  const std::size_t n = o.node_count();
  std::vector<char> seen(n, 0);
  std::vector<NodeId> order;
  order.reserve(n);
  while (order.size() < n) {
    const NodeId v = o.jump();
    if (!seen[v]) {
      seen[v] = 1;
      order.push_back(v);
    }
  }
  return order;
}

std::vector<double> single_target_jump_mc(GraphOracle& o, NodeId t,
                                          double alpha, double delta,
                                          double eps, double p_f, Rng& rng,
                                          double c) {
  check_pair_args(alpha, delta, eps, p_f);
  require_capabilities(o, {true, false, false});
  if (t >= o.node_count()) throw NodeIdOutOfRange(t);
  std::vector<double> est(o.node_count(), 0.0);
  for (NodeId s : cover_by_jumps(o)) {
    est[s] = monte_carlo_pair(o, s, t, alpha, delta, eps, p_f, rng, c).estimate;
  }
  return est;
}

std::vector<double> single_target_bidir_jump(GraphOracle& o, NodeId t,
                                             double alpha, double delta,
                                             double eps, double p_f, Rng& rng,
                                             double c) {
  check_pair_args(alpha, delta, eps, p_f);
  require_capabilities(o, {true, false, false});
  const double n = static_cast<double>(o.node_count());
  const double r_max = std::sqrt(o.average_degree() * delta / n);
  const PushFrontier fr = approx_contributions(o, t, alpha, r_max);
  const std::uint64_t walks = bippr_walk_count(r_max, delta, eps, p_f, c);
  std::vector<double> est(o.node_count(), 0.0);
  for (NodeId s : cover_by_jumps(o)) {
    double sum = 0.0;
    for (std::uint64_t k = 0; k < walks; ++k) {
      sum += fr.r[sample_walk(o, s, alpha, rng).terminal];
    }
    est[s] = fr.p[s] + sum / static_cast<double>(walks);
  }
  return est;
}

}  // namespace pprq
