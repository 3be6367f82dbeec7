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

#include "pprq/graph.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pprq/errors.h"

namespace pprq {

bool DirectedGraph::has_edge(NodeId u, NodeId v) const {
  auto first = out_sorted_.begin() + out_offsets_[u];
  auto last = out_sorted_.begin() + out_offsets_[u + 1];
  return std::binary_search(first, last, v);
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < n_; ++u) {
    for (NodeId v : out_list(u)) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::size_t> DirectedGraph::out_degrees() const {
  std::vector<std::size_t> d(n_);
  for (NodeId u = 0; u < n_; ++u) d[u] = out_degree(u);
  return d;
}

std::vector<std::size_t> DirectedGraph::in_degrees() const {
  std::vector<std::size_t> d(n_);
  for (NodeId v = 0; v < n_; ++v) d[v] = in_degree(v);
  return d;
}

DirectedGraph build_graph(const std::vector<Edge>& edges,
                          std::size_t node_count) {
  if (node_count == 0) throw NodeIdOutOfRange(0);
  DirectedGraph g;
  g.n_ = node_count;
  std::vector<std::size_t> out_count(node_count + 1, 0);
  std::vector<std::size_t> in_count(node_count + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= node_count) throw NodeIdOutOfRange(u);
    if (v >= node_count) throw NodeIdOutOfRange(v);
    ++out_count[u + 1];
    ++in_count[v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    out_count[i + 1] += out_count[i];
    in_count[i + 1] += in_count[i];
  }
  g.out_offsets_ = out_count;
  g.in_offsets_ = in_count;
  g.out_targets_.resize(edges.size());
  g.in_sources_.resize(edges.size());
  std::vector<std::size_t> out_pos(out_count.begin(), out_count.end() - 1);
  std::vector<std::size_t> in_pos(in_count.begin(), in_count.end() - 1);
  for (const auto& [u, v] : edges) {
    g.out_targets_[out_pos[u]++] = v;
    g.in_sources_[in_pos[v]++] = u;
  }

  g.out_sorted_ = g.out_targets_;
  for (std::size_t u = 0; u < node_count; ++u) {
    auto first = g.out_sorted_.begin() + g.out_offsets_[u];
    auto last = g.out_sorted_.begin() + g.out_offsets_[u + 1];
    if (first == last) throw DanglingNode(u);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) throw DuplicateEdge(u, *dup);
  }

  g.in_sorted_ = g.in_sources_;
  for (std::size_t v = 0; v < node_count; ++v) {
    std::sort(g.in_sorted_.begin() + g.in_offsets_[v],
              g.in_sorted_.begin() + g.in_offsets_[v + 1],
              [&g](NodeId a, NodeId b) {
                const auto da = g.out_degree(a);
                const auto db = g.out_degree(b);
                return da != db ? da < db : a < b;
              });
  }
  return g;
}

DirectedGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::uint64_t a, b;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw InstanceLoadError("malformed edge-list line " +
                              std::to_string(lineno));
    }
    rows.emplace_back(a, b);
  }
  if (rows.empty()) throw InstanceLoadError("empty edge list");

  std::size_t start = 0;
  std::uint64_t n = 0;
  // "n m" header: m matches the remaining rows and every id fits below n.
  if (rows.front().second == rows.size() - 1) {
    const std::uint64_t hn = rows.front().first;
    bool fits = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      fits &= rows[i].first < hn && rows[i].second < hn;
    }
    if (fits) {
      n = hn;
      start = 1;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(rows.size() - start);
  std::uint64_t max_id = 0;
  for (std::size_t i = start; i < rows.size(); ++i) {
    max_id = std::max({max_id, rows[i].first, rows[i].second});
    if (rows[i].first > UINT32_MAX || rows[i].second > UINT32_MAX) {
      throw NodeIdOutOfRange(std::max(rows[i].first, rows[i].second));
    }
    edges.emplace_back(static_cast<NodeId>(rows[i].first),
                       static_cast<NodeId>(rows[i].second));
  }
  if (start == 0) n = edges.empty() ? 0 : max_id + 1;
  return build_graph(edges, n);
}

DirectedGraph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

std::string format_edge_list(const DirectedGraph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void write_edge_list(const DirectedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << format_edge_list(g);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace pprq
