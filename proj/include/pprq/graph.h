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

#ifndef PPRQ_GRAPH_H_
#define PPRQ_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pprq {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable directed graph in CSR form. Out-lists keep the order edges were
// supplied in; in-lists keep edge-list order as well. in_sorted lists are
// ordered by (out-degree, id).
class DirectedGraph {
 public:
  DirectedGraph() = default;

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return out_targets_.size(); }
  double average_degree() const {
    return static_cast<double>(edge_count()) / static_cast<double>(n_);
  }

  std::size_t out_degree(NodeId u) const {
    return out_offsets_[u + 1] - out_offsets_[u];
  }
  std::size_t in_degree(NodeId v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }

  std::span<const NodeId> out_list(NodeId u) const {
    return {out_targets_.data() + out_offsets_[u], out_degree(u)};
  }
  std::span<const NodeId> in_list(NodeId v) const {
    return {in_sources_.data() + in_offsets_[v], in_degree(v)};
  }
  std::span<const NodeId> in_sorted_list(NodeId v) const {
    return {in_sorted_.data() + in_offsets_[v], in_degree(v)};
  }

  bool has_edge(NodeId u, NodeId v) const;

  // Edges in out-list order (u ascending, then list position).
  std::vector<Edge> edges() const;

  std::vector<std::size_t> out_degrees() const;
  std::vector<std::size_t> in_degrees() const;

  friend DirectedGraph build_graph(const std::vector<Edge>& edges,
                                   std::size_t node_count);

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_;
  std::vector<NodeId> out_targets_;
  std::vector<NodeId> out_sorted_;  // per-node ascending copy for has_edge
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeId> in_sources_;
  std::vector<NodeId> in_sorted_;
};

// Throws NodeIdOutOfRange, DuplicateEdge, DanglingNode.
DirectedGraph build_graph(const std::vector<Edge>& edges,
                          std::size_t node_count);

// Edge-list text: optional "n m" header, then one "u v" per line. Lines
// starting with '#' and blank lines are skipped. The first line is taken as
// a header when its second number equals the count of remaining edge lines.
DirectedGraph read_edge_list(const std::string& path);
DirectedGraph parse_edge_list(const std::string& text);
void write_edge_list(const DirectedGraph& g, const std::string& path);
std::string format_edge_list(const DirectedGraph& g);

}  // namespace pprq

#endif  // PPRQ_GRAPH_H_
