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

#include "pprq/bidir.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "pprq/classic.h"
#include "pprq/errors.h"

namespace pprq {
namespace {

double safe_log(double x) { return x > 1.0 ? std::log(x) : 0.0; }

}  // namespace

double LevelSchedule::theta_sum() const {
  double s = 0.0;
  for (double x : theta) s += x;
  return s;
}

double LevelSchedule::theta_floor() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < theta.size(); ++i) m = std::min(m, grain(i));
  return m;
}

LevelSchedule LevelSchedule::uniform(std::size_t L, double theta,
                                     double gamma) {
  LevelSchedule s;
  s.L = L;
  s.theta.assign(L + 1, theta);
  s.gamma.assign(L + 1, gamma);
  return s;
}

bool NewAlgoParams::all_satisfied() const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [](const ConstraintCheck& c) { return c.satisfied; });
}

NewAlgoParams derive_params(double alpha, double delta, double eps,
                            double p_f, std::size_t n, const Multipliers& mult,
                            bool strict) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConstraintViolation("alpha must be in (0,1)");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw ConstraintViolation("delta must be in (0,1]");
  }
  if (!(eps > 0.0 && eps < 1.0)) throw ConstraintViolation("eps must be in (0,1)");
  if (!(p_f > 0.0 && p_f < 1.0)) throw ConstraintViolation("p_f must be in (0,1)");
  if (n < 1) throw ConstraintViolation("n must be >= 1");
  for (double c : {mult.c_theta, mult.c_L, mult.c_gamma, mult.c_nr, mult.c_ns,
                   mult.c_tau}) {
    if (!(c > 0.0)) throw ConstraintViolation("multipliers must be positive");
  }

  NewAlgoParams p;
  p.alpha = alpha;
  p.delta = delta;
  p.eps = eps;
  p.p_f = p_f;
  p.mult = mult;

  const double theta = mult.c_theta * std::pow(delta, 2.0 / 3.0);
  const double log_inv_theta = safe_log(1.0 / theta);
  const auto L = static_cast<std::size_t>(
      std::max(1.0, std::ceil(mult.c_L * log_inv_theta / alpha)));
  const double log_inv_delta = safe_log(1.0 / delta);
  const double log_nl = safe_log(static_cast<double>(n) * static_cast<double>(L));
  double gamma = 1.0;
  if (log_inv_delta > 0.0 && log_nl > 0.0) {
    gamma = std::min(1.0, mult.c_gamma * eps * eps * alpha * alpha /
                              (log_inv_delta * log_inv_delta * log_nl));
  }
  p.schedule = LevelSchedule::uniform(L, theta, gamma);

  const double log_inv_pf = std::log(1.0 / p_f);
  const double cbrt_delta = std::cbrt(delta);
  p.n_r = static_cast<std::uint64_t>(std::max(
      1.0, std::ceil(mult.c_nr * log_inv_delta * log_inv_pf /
                     (cbrt_delta * eps * alpha))));
  p.n_s = static_cast<std::uint64_t>(
      std::max(1.0, std::ceil(mult.c_ns / cbrt_delta)));
  p.tau = mult.c_tau * static_cast<double>(p.n_r) *
          static_cast<double>(p.n_s) * alpha * eps * delta / log_inv_pf;
  if (!(p.tau > 0.0)) throw ConstraintViolation("tau must be positive");

  const LevelSchedule& s = p.schedule;
  const double inf = std::numeric_limits<double>::infinity();
  auto add = [&p](const char* name, double lhs, double rhs, bool ok) {
    p.constraints.push_back({name, lhs, rhs, ok});
  };
  // 1. every level's granularity is at least the floor
  add("granularity_floor", s.theta_floor(), s.theta_floor(),
      s.theta_floor() > 0.0);
  // 2. gamma_i <= eps^2 / (L^2 log(nL))
  const double gamma_rhs =
      log_nl > 0.0 ? eps * eps / (static_cast<double>(L * L) * log_nl) : inf;
  const double gamma_max = *std::max_element(s.gamma.begin(), s.gamma.end());
  add("gamma_bound", gamma_max, gamma_rhs, gamma_max <= gamma_rhs);
  // 3. L >= log(1/theta_L) / alpha
  const double l_rhs = safe_log(1.0 / s.theta.back()) / alpha;
  add("level_count", static_cast<double>(L), l_rhs,
      static_cast<double>(L) >= l_rhs);
  // 4. n_r >= theta * log(1/p_f) / (eps * delta)
  const double nr_rhs = s.theta_sum() * log_inv_pf / (eps * delta);
  add("walk_count", static_cast<double>(p.n_r), nr_rhs,
      static_cast<double>(p.n_r) >= nr_rhs);
  // 5. n_r * n_s / tau >= log(1/p_f) / (alpha * eps * delta)
  const double bal_lhs =
      static_cast<double>(p.n_r) * static_cast<double>(p.n_s) / p.tau;
  const double bal_rhs = log_inv_pf / (alpha * eps * delta);
  add("heavy_balance", bal_lhs, bal_rhs, bal_lhs >= bal_rhs * (1.0 - 1e-9));

  if (strict) {
    for (const auto& c : p.constraints) {
      if (!c.satisfied) {
        throw ConstraintViolation("constraint " + c.name + " failed: " +
                                  std::to_string(c.lhs) + " vs " +
                                  std::to_string(c.rhs));
      }
    }
  }
  return p;
}

RandPushState::RandPushState(NodeId t, double a, std::size_t levels)
    : target(t),
      alpha(a),
      L(levels),
      r_hat(levels + 1),
      r_hat_prime(levels + 1),
      pushes_per_level(levels + 1, 0) {
  r_hat[0][t] = 1.0;
  r_hat_prime[0][t] = 1.0;
}

double RandPushState::reserve(NodeId v) const {
  auto it = p_hat.find(v);
  return it == p_hat.end() ? 0.0 : it->second;
}

bool RandPushState::pushed(NodeId v, std::size_t level) const {
  auto it = pushes.find(v);
  if (it == pushes.end()) return false;
  for (const auto& rec : it->second) {
    if (rec.level == level) return true;
  }
  return false;
}

double RandPushState::residual(NodeId u) const {
  double sum = 0.0;
  for (std::size_t i = 0; i <= L; ++i) {
    auto it = r_hat[i].find(u);
    if (it != r_hat[i].end() && indicator(u, i)) sum += it->second;
  }
  return sum;
}

double RandPushState::chi_sum(NodeId u, NodeId v, std::size_t d_out_u) const {
  auto it = pushes.find(v);
  if (it == pushes.end()) return 0.0;
  double sum = 0.0;
  for (const auto& rec : it->second) {
    if (indicator(u, rec.level + 1)) sum += rec.amount;
  }
  return (1.0 - alpha) * sum / static_cast<double>(d_out_u);
}

void rand_push_threshold(GraphOracle& o, NodeId v, std::size_t level,
                         RandPushState& state, const LevelSchedule& schedule,
                         Rng& rng) {
  if (level >= state.L) throw Error("cannot push from the last level");
  require_capabilities(o, {false, true, false});
  double amount = 0.0;
  if (auto it = state.r_hat[level].find(v); it != state.r_hat[level].end()) {
    amount = it->second;
    it->second = 0.0;
  }
  if (auto it = state.r_hat_prime[level].find(v);
      it != state.r_hat_prime[level].end()) {
    it->second = 0.0;
  }
  state.pushes[v].push_back({static_cast<std::uint32_t>(level), amount});
  ++state.pushes_per_level[level];
  state.p_hat[v] += state.alpha * amount;
  if (amount <= 0.0) return;

  const std::size_t next = level + 1;
  const double grain = schedule.grain(next);
  auto& r_next = state.r_hat[next];
  auto& rp_next = state.r_hat_prime[next];
  // Independent thresholds for the two copies; one traversal covers the
  // union of both scan prefixes.
  const double thr1 = grain * rng.uniform();
  const double thr2 = grain * rng.uniform();
  const double stop = std::min(thr1, thr2);
  const double base = (1.0 - state.alpha) * amount;
  const std::size_t din = o.deg_in(v);
  for (std::size_t j = 0; j < din; ++j) {
    const NodeId u = o.in_sorted(v, j);
    const double chi = base / static_cast<double>(o.deg_out(u));
    if (chi >= grain) {
      r_next[u] += chi;
      rp_next[u] += chi;
      continue;
    }
    if (chi <= stop) break;
    if (chi > thr1) r_next[u] += grain;
    if (chi > thr2) rp_next[u] += grain;
  }
}

RandPushState backward_phase(GraphOracle& o, NodeId t,
                             const NewAlgoParams& params, Rng& rng) {
  require_capabilities(o, {false, true, false});
  if (t >= o.node_count()) throw NodeIdOutOfRange(t);
  const LevelSchedule& sched = params.schedule;
  RandPushState state(t, params.alpha, sched.L);
  std::vector<NodeId> eligible;
  for (std::size_t i = 0; i < sched.L; ++i) {
    eligible.clear();
    for (const auto& [v, rp] : state.r_hat_prime[i]) {
      if (rp > sched.theta[i]) eligible.push_back(v);
    }
    std::sort(eligible.begin(), eligible.end());
    for (NodeId v : eligible) rand_push_threshold(o, v, i, state, sched, rng);
  }
  for (const auto& [v, p] : state.p_hat) {
    if (p > params.tau) state.heavy_list.push_back(v);
  }
  std::sort(state.heavy_list.begin(), state.heavy_list.end());
  state.heavy.insert(state.heavy_list.begin(), state.heavy_list.end());
  return state;
}

double compute_R(const RandPushState& state, const DirectedGraph& g,
                 NodeId u) {
  double sum = state.level0_term(u);
  const auto outs = g.out_list(u);
  for (NodeId v : outs) sum += state.chi_sum(u, v, outs.size());
  return sum;
}

double estimate_R_hat(GraphOracle& o, const RandPushState& state, NodeId u_k,
                      const NewAlgoParams& params, Rng& rng) {
  require_capabilities(o, {false, false, true});
  const std::size_t d = o.deg_out(u_k);
  double total = state.level0_term(u_k);

  std::size_t heavy_adjacent = 0;
  for (NodeId v : state.heavy_list) {
    if (o.adj(u_k, v)) {
      ++heavy_adjacent;
      total += state.chi_sum(u_k, v, d);
    }
  }
  const std::size_t light = d - heavy_adjacent;
  if (light == 0) return total;

  const std::uint64_t ns = params.n_s;
  const double scale = static_cast<double>(light) / static_cast<double>(ns);
  double sampled = 0.0;
  if (d >= 2 * state.heavy_list.size()) {
    // Rejection: at least half of the out-list is light.
    for (std::uint64_t k = 0; k < ns; ++k) {
      NodeId v;
      do {
        v = o.sample_out_neighbor(u_k, d, rng);
      } while (state.heavy.count(v) != 0);
      sampled += state.chi_sum(u_k, v, d);
    }
  } else {
    std::vector<NodeId> pool;
    pool.reserve(light);
    for (std::size_t j = 0; j < d; ++j) {
      const NodeId v = o.out(u_k, j);
      if (state.heavy.count(v) == 0) pool.push_back(v);
    }
    for (std::uint64_t k = 0; k < ns; ++k) {
      sampled += state.chi_sum(u_k, pool[rng.below(pool.size())], d);
    }
  }
  return total + scale * sampled;
}

BidirResult single_pair_ppr_detailed(GraphOracle& o, NodeId s, NodeId t,
                                     const NewAlgoParams& params, Rng& rng) {
  require_capabilities(o, {false, true, true});
  if (s >= o.node_count()) throw NodeIdOutOfRange(s);
  const RandPushState state = backward_phase(o, t, params, rng);
  double sum = 0.0;
  for (std::uint64_t k = 0; k < params.n_r; ++k) {
    const NodeId u = sample_walk(o, s, params.alpha, rng).terminal;
    sum += estimate_R_hat(o, state, u, params, rng);
  }
  BidirResult res;
  res.estimate = state.reserve(s) + sum / static_cast<double>(params.n_r);
  res.walks = params.n_r;
  res.heavy_size = state.heavy_list.size();
  res.pushes_per_level = state.pushes_per_level;
  return res;
}

double single_pair_ppr(GraphOracle& o, NodeId s, NodeId t,
                       const NewAlgoParams& params, Rng& rng) {
  return single_pair_ppr_detailed(o, s, t, params, rng).estimate;
}

std::string diagnostics_json(const NewAlgoParams& params,
                             const BidirResult& result,
                             const QueryStats& stats) {
  using nlohmann::json;
  json j;
  const auto& s = params.schedule;
  j["schedule"] = {{"L", s.L},
                   {"theta", s.theta},
                   {"gamma", s.gamma},
                   {"theta_sum", s.theta_sum()},
                   {"theta_floor", s.theta_floor()}};
  j["params"] = {{"alpha", params.alpha}, {"delta", params.delta},
                 {"eps", params.eps},     {"p_f", params.p_f},
                 {"n_r", params.n_r},     {"n_s", params.n_s},
                 {"tau", params.tau}};
  json cons = json::array();
  for (const auto& c : params.constraints) {
    cons.push_back({{"name", c.name},
                    {"lhs", c.lhs},
                    {"rhs", c.rhs},
                    {"satisfied", c.satisfied}});
  }
  j["constraints"] = cons;
  j["pushes_per_level"] = result.pushes_per_level;
  j["heavy_size"] = result.heavy_size;
  j["queries"] = {{"deg_in", stats.deg_in},   {"deg_out", stats.deg_out},
                  {"in", stats.in},           {"out", stats.out},
                  {"in_sorted", stats.in_sorted}, {"adj", stats.adj},
                  {"jump", stats.jump},       {"total", stats.total()}};
  j["estimate"] = result.estimate;
  return j.dump(2);
}

}  // namespace pprq
