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

#include "pprq/exact.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "pprq/errors.h"

namespace pprq {
namespace {

void check_args(const DirectedGraph& g, NodeId anchor, double alpha,
                double tol) {
  if (anchor >= g.node_count()) throw NodeIdOutOfRange(anchor);
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must be in (0,1)");
  if (!(tol > 0.0)) throw Error("tol must be positive");
}

// Forward iteration from an initial distribution x0:
// result = sum_k alpha (1-alpha)^k x0 P^k.
std::vector<double> forward(const DirectedGraph& g, std::vector<double> mass,
                            double alpha, double tol) {
  const std::size_t n = g.node_count();
  std::vector<double> acc(n, 0.0), next(n);
  const std::size_t rounds = exact_iterations(alpha, tol);
  for (std::size_t k = 0; k <= rounds; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId u = 0; u < n; ++u) {
      const double m = mass[u];
      if (m == 0.0) continue;
      acc[u] += alpha * m;
      const auto outs = g.out_list(u);
      const double share = (1.0 - alpha) * m / static_cast<double>(outs.size());
      for (NodeId v : outs) next[v] += share;
    }
    mass.swap(next);
  }
  return acc;
}

}  // namespace

std::size_t exact_iterations(double alpha, double tol) {
  return static_cast<std::size_t>(
      std::ceil(std::log(tol) / std::log(1.0 - alpha)));
}

PprVector exact_single_source(const DirectedGraph& g, NodeId s, double alpha,
                              double tol) {
  check_args(g, s, alpha, tol);
  std::vector<double> x0(g.node_count(), 0.0);
  x0[s] = 1.0;
  return {forward(g, std::move(x0), alpha, tol), s, PprDirection::kSource,
          tol};
}

PprVector exact_single_target(const DirectedGraph& g, NodeId t, double alpha,
                              double tol) {
  check_args(g, t, alpha, tol);
  const std::size_t n = g.node_count();
  // y_k(u) = probability a non-stopping k-step walk from u sits at t, times
  // (1-alpha)^k. pi(u,t) = sum_k alpha y_k(u).
  std::vector<double> y(n, 0.0), next(n), acc(n, 0.0);
  y[t] = 1.0;
  const std::size_t rounds = exact_iterations(alpha, tol);
  for (std::size_t k = 0; k <= rounds; ++k) {
    for (NodeId u = 0; u < n; ++u) acc[u] += alpha * y[u];
    for (NodeId u = 0; u < n; ++u) {
      double sum = 0.0;
      const auto outs = g.out_list(u);
      for (NodeId v : outs) sum += y[v];
      next[u] = (1.0 - alpha) * sum / static_cast<double>(outs.size());
    }
    y.swap(next);
  }
  return {std::move(acc), t, PprDirection::kTarget, tol};
}

PprVector exact_pagerank(const DirectedGraph& g, double alpha, double tol) {
  check_args(g, 0, alpha, tol);
  const std::size_t n = g.node_count();
  std::vector<double> x0(n, 1.0 / static_cast<double>(n));
  return {forward(g, std::move(x0), alpha, tol), 0, PprDirection::kPageRank,
          tol};
}

double brute_force_pair(const DirectedGraph& g, NodeId s, NodeId t,
                        double alpha, std::size_t horizon) {
  const std::size_t n = g.node_count();
  if (n > 64) throw ExplosionGuard("brute_force_pair limited to n <= 64");
  if (s >= n) throw NodeIdOutOfRange(s);
  if (t >= n) throw NodeIdOutOfRange(t);
  if (horizon < 1) throw Error("horizon must be >= 1");
  // P dense, row-stochastic; power = P^k.
  std::vector<double> p(n * n, 0.0), power(n * n, 0.0), tmp(n * n);
  for (NodeId u = 0; u < n; ++u) {
    const auto outs = g.out_list(u);
    for (NodeId v : outs) p[u * n + v] = 1.0 / static_cast<double>(outs.size());
    power[u * n + u] = 1.0;
  }
  double total = 0.0;
  double weight = alpha;
  for (std::size_t k = 0; k <= horizon; ++k) {
    total += weight * power[s * n + t];
    weight *= 1.0 - alpha;
    if (k == horizon) break;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) acc += power[i * n + l] * p[l * n + j];
        tmp[i * n + j] = acc;
      }
    }
    power.swap(tmp);
  }
  return total;
}

std::string format_ppr_csv(const PprVector& v) {
  std::string out = "node,value\n";
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    out += fmt::format("{},{:.17g}\n", i, v.values[i]);
  }
  return out;
}

void write_ppr_csv(const PprVector& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << format_ppr_csv(v);
}

}  // namespace pprq
