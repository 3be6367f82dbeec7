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

#ifndef PPRQ_INSTANCES_H_
#define PPRQ_INSTANCES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pprq/graph.h"

namespace pprq {

// Lower-bound constructions. Names follow the problem they target:
// sp = single pair, st = single target, sn = single node; worst/avg is the
// case, and the suffix names the query model the construction defeats.
enum class Family {
  kFolklorePair,
  kSpWorst,
  kSpAvg,
  kStWorstAdj,
  kStWorstFull,
  kStAvgAdj,
  kStAvgJump,
  kStAvgFull,
  kSnAvgAdj,
  kSnAvgInsorted,
  kSnWorstFull,
  kSnAvgXor,
  kSnAvgFull,
  kOutputSizeSt,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
std::vector<Family> all_families();

// Indices into the family's two swap candidate lists (taken modulo their
// sizes is NOT done: out-of-range indices are rejected).
struct SwapChoice {
  std::uint64_t e1 = 0;
  std::uint64_t e2 = 0;
  bool operator==(const SwapChoice&) const = default;
};

// Size parameters. n sizes the large layers and m sets the background
// degree d = max(1, m / n) and the padding edge count. L is the group size
// (and |U1| where the construction has one); D the upper-layer degree.
struct InstanceSpec {
  Family family = Family::kSpWorst;
  std::uint64_t n = 16;
  std::uint64_t m = 64;
  std::uint64_t L = 2;
  std::uint64_t D = 2;
  double alpha = 0.2;
  std::optional<SwapChoice> swap;
  bool padding = false;
  // Exchange |U1| and |V1| (the ADJ-without-IN-SORTED variant).
  bool adj_only_layout = false;
  // output_size_st: g-centred layout with D disjoint copies.
  bool average_layout = false;

  std::uint64_t background_degree() const;
  bool operator==(const InstanceSpec&) const = default;
};

struct Layer {
  std::string name;
  NodeId begin = 0;
  NodeId end = 0;  // exclusive
  bool contains(NodeId v) const { return v >= begin && v < end; }
  std::size_t size() const { return end - begin; }
};

struct InstanceMeta {
  // Designated pair (single-pair / single-target families) or target.
  NodeId source = 0;
  NodeId target = 0;
  bool has_source = true;
  // Nodes sharing the target's closed-form value (the target's group).
  Layer target_group;
  std::vector<Layer> layers;
  std::optional<Edge> e1, e2;  // as generated, before any swap
  std::optional<double> pi_pre;
  std::optional<double> pi_post;

  const Layer& layer(const std::string& name) const;
  std::string role(NodeId v) const;
};

struct Instance {
  DirectedGraph graph;
  InstanceMeta meta;
};

// Throws SpecConstraintViolation naming the violated inequality.
Instance generate(const InstanceSpec& spec);

// Designated pi(s,t) for pair families, pi(t) for node families. Families
// with only an asymptotic statement throw NoClosedForm carrying a band.
double closed_form_pi(const InstanceSpec& spec);

// Parameter choice per the construction's case analysis. partial_model
// selects the weaker-model cases where a family has two analyses (sp_avg).
InstanceSpec parameter_presets(Family family, std::uint64_t n,
                               std::uint64_t m, double delta, double alpha,
                               bool partial_model = false);

std::string spec_to_json(const InstanceSpec& spec);
InstanceSpec spec_from_json(const std::string& text);

// Random graph without dangling nodes or duplicate edges; out-degrees are
// uniform on [1, 2*avg_degree - 1]. Self-loops allowed.
DirectedGraph random_digraph(std::size_t n, double avg_degree,
                             std::uint64_t seed);

// Small sanity graphs: "singleton" (one self-loop), "chain" (0 -> 1 -> ...,
// last node self-loop), "star" (hub 0 <-> each leaf), "cycle".
DirectedGraph trivial_graph(const std::string& kind, std::size_t n);

}  // namespace pprq

#endif  // PPRQ_INSTANCES_H_
