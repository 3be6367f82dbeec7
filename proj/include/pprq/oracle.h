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

#ifndef PPRQ_ORACLE_H_
#define PPRQ_ORACLE_H_

#include <cstdint>
#include <string>

#include "pprq/graph.h"
#include "pprq/rng.h"

namespace pprq {

// Optional query kinds. Degree and neighbor queries are always on.
struct Capabilities {
  bool jump = false;
  bool in_sorted = false;
  bool adj = false;

  static Capabilities none() { return {}; }
  static Capabilities all() { return {true, true, true}; }
  bool covers(const Capabilities& need) const {
    return (jump || !need.jump) && (in_sorted || !need.in_sorted) &&
           (adj || !need.adj);
  }
  // "jump,in_sorted,adj" style; empty string for none.
  std::string to_string() const;
  static Capabilities parse(const std::string& text);
  bool operator==(const Capabilities&) const = default;
};

struct QueryStats {
  std::uint64_t deg_in = 0;
  std::uint64_t deg_out = 0;
  std::uint64_t in = 0;
  std::uint64_t out = 0;
  std::uint64_t in_sorted = 0;
  std::uint64_t adj = 0;
  std::uint64_t jump = 0;

  std::uint64_t total() const {
    return deg_in + deg_out + in + out + in_sorted + adj + jump;
  }
  QueryStats& operator+=(const QueryStats& o);
  friend QueryStats operator+(QueryStats a, const QueryStats& b) {
    return a += b;
  }
  friend QueryStats operator-(const QueryStats& a, const QueryStats& b);
  bool operator==(const QueryStats&) const = default;
};

// Metered access to a graph. Every call below is one query.
class GraphOracle {
 public:
  virtual ~GraphOracle() = default;

  // Known to the algorithm up front; not metered.
  virtual std::size_t node_count() const = 0;
  virtual std::size_t edge_count() const = 0;
  virtual Capabilities capabilities() const = 0;
  virtual QueryStats stats() const = 0;

  virtual std::size_t deg_in(NodeId v) = 0;
  virtual std::size_t deg_out(NodeId u) = 0;
  virtual NodeId in(NodeId v, std::size_t i) = 0;
  virtual NodeId out(NodeId u, std::size_t i) = 0;
  virtual NodeId in_sorted(NodeId v, std::size_t i) = 0;
  virtual bool adj(NodeId u, NodeId v) = 0;
  virtual NodeId jump() = 0;

  // Uniform out-neighbor of u once d_out(u) is known: one OUT query.
  virtual NodeId sample_out_neighbor(NodeId u, std::size_t degree, Rng& rng) {
    return out(u, rng.below(degree));
  }

  // Uniform out-neighbor: DEG-OUT then OUT, unless overridden.
  NodeId random_out_neighbor(NodeId u, Rng& rng) {
    return sample_out_neighbor(u, deg_out(u), rng);
  }

  double average_degree() const {
    return static_cast<double>(edge_count()) /
           static_cast<double>(node_count());
  }
};

// Direct oracle over a DirectedGraph. Single owner; the graph may be shared.
class OracleHandle final : public GraphOracle {
 public:
  OracleHandle(const DirectedGraph& g, Capabilities caps,
               std::uint64_t jump_seed = 0)
      : g_(&g), caps_(caps), jump_rng_(jump_seed) {}

  std::size_t node_count() const override { return g_->node_count(); }
  std::size_t edge_count() const override { return g_->edge_count(); }
  Capabilities capabilities() const override { return caps_; }
  QueryStats stats() const override { return stats_; }
  const DirectedGraph& graph() const { return *g_; }

  std::size_t deg_in(NodeId v) override;
  std::size_t deg_out(NodeId u) override;
  NodeId in(NodeId v, std::size_t i) override;
  NodeId out(NodeId u, std::size_t i) override;
  NodeId in_sorted(NodeId v, std::size_t i) override;
  bool adj(NodeId u, NodeId v) override;
  NodeId jump() override;

 private:
  void check(NodeId v) const;

  const DirectedGraph* g_;
  Capabilities caps_;
  QueryStats stats_;
  Rng jump_rng_;
};

enum class Direction { kIn, kOut };

std::size_t query_degree(GraphOracle& o, NodeId node, Direction dir);
NodeId query_neighbor(GraphOracle& o, NodeId node, std::size_t index,
                      Direction dir);
NodeId query_in_sorted(GraphOracle& o, NodeId node, std::size_t index);
bool query_adj(GraphOracle& o, NodeId u, NodeId v);
NodeId query_jump(GraphOracle& o);

// Throws CapabilityDisabled naming the first missing capability.
void require_capabilities(const GraphOracle& o, const Capabilities& need);

}  // namespace pprq

#endif  // PPRQ_ORACLE_H_
