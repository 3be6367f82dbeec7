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

#ifndef PPRQ_EXACT_H_
#define PPRQ_EXACT_H_

#include <string>
#include <vector>

#include "pprq/graph.h"

namespace pprq {

enum class PprDirection { kSource, kTarget, kPageRank };

// Dense ground-truth vector. anchor is s, t, or unused for PageRank.
struct PprVector {
  std::vector<double> values;
  NodeId anchor = 0;
  PprDirection direction = PprDirection::kSource;
  double tolerance = 0.0;

  double operator[](NodeId v) const { return values[v]; }
};

inline constexpr double kDefaultExactTol = 1e-12;

// Number of fixed-point rounds so the geometric tail is below tol.
std::size_t exact_iterations(double alpha, double tol);

// pi(s, .)
PprVector exact_single_source(const DirectedGraph& g, NodeId s, double alpha,
                              double tol = kDefaultExactTol);
// pi(., t)
PprVector exact_single_target(const DirectedGraph& g, NodeId t, double alpha,
                              double tol = kDefaultExactTol);
// pi(t) = mean over s of pi(s, t)
PprVector exact_pagerank(const DirectedGraph& g, double alpha,
                         double tol = kDefaultExactTol);

// Dense transition-matrix powers; independent of the iterations above.
// Throws ExplosionGuard when n > 64.
double brute_force_pair(const DirectedGraph& g, NodeId s, NodeId t,
                        double alpha, std::size_t horizon);

// "node,value" rows with a header line.
std::string format_ppr_csv(const PprVector& v);
void write_ppr_csv(const PprVector& v, const std::string& path);

}  // namespace pprq

#endif  // PPRQ_EXACT_H_
