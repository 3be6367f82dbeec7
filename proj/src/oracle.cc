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

#include "pprq/oracle.h"

#include <sstream>

#include "pprq/errors.h"

namespace pprq {

std::string Capabilities::to_string() const {
  std::string s;
  auto add = [&s](const char* name) {
    if (!s.empty()) s += ',';
    s += name;
  };
  if (jump) add("jump");
  if (in_sorted) add("in_sorted");
  if (adj) add("adj");
  return s;
}

Capabilities Capabilities::parse(const std::string& text) {
  Capabilities c;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok == "none") continue;
    if (tok == "jump") {
      c.jump = true;
    } else if (tok == "in_sorted") {
      c.in_sorted = true;
    } else if (tok == "adj") {
      c.adj = true;
    } else if (tok == "all") {
      c = all();
    } else {
      throw CapabilityMismatch("unknown capability '" + tok + "'");
    }
  }
  return c;
}

QueryStats& QueryStats::operator+=(const QueryStats& o) {
  deg_in += o.deg_in;
  deg_out += o.deg_out;
  in += o.in;
  out += o.out;
  in_sorted += o.in_sorted;
  adj += o.adj;
  jump += o.jump;
  return *this;
}

QueryStats operator-(const QueryStats& a, const QueryStats& b) {
  QueryStats d;
  d.deg_in = a.deg_in - b.deg_in;
  d.deg_out = a.deg_out - b.deg_out;
  d.in = a.in - b.in;
  d.out = a.out - b.out;
  d.in_sorted = a.in_sorted - b.in_sorted;
  d.adj = a.adj - b.adj;
  d.jump = a.jump - b.jump;
  return d;
}

void OracleHandle::check(NodeId v) const {
  if (v >= g_->node_count()) throw NodeIdOutOfRange(v);
}

std::size_t OracleHandle::deg_in(NodeId v) {
  check(v);
  ++stats_.deg_in;
  return g_->in_degree(v);
}

std::size_t OracleHandle::deg_out(NodeId u) {
  check(u);
  ++stats_.deg_out;
  return g_->out_degree(u);
}

NodeId OracleHandle::in(NodeId v, std::size_t i) {
  check(v);
  if (i >= g_->in_degree(v)) throw IndexOutOfRange(v, i);
  ++stats_.in;
  return g_->in_list(v)[i];
}

NodeId OracleHandle::out(NodeId u, std::size_t i) {
  check(u);
  if (i >= g_->out_degree(u)) throw IndexOutOfRange(u, i);
  ++stats_.out;
  return g_->out_list(u)[i];
}

NodeId OracleHandle::in_sorted(NodeId v, std::size_t i) {
  if (!caps_.in_sorted) throw CapabilityDisabled("in_sorted");
  check(v);
  if (i >= g_->in_degree(v)) throw IndexOutOfRange(v, i);
  ++stats_.in_sorted;
  return g_->in_sorted_list(v)[i];
}

bool OracleHandle::adj(NodeId u, NodeId v) {
  if (!caps_.adj) throw CapabilityDisabled("adj");
  check(u);
  check(v);
  ++stats_.adj;
  return g_->has_edge(u, v);
}

NodeId OracleHandle::jump() {
  if (!caps_.jump) throw CapabilityDisabled("jump");
  ++stats_.jump;
  return static_cast<NodeId>(jump_rng_.below(g_->node_count()));
}

std::size_t query_degree(GraphOracle& o, NodeId node, Direction dir) {
  return dir == Direction::kIn ? o.deg_in(node) : o.deg_out(node);
}

NodeId query_neighbor(GraphOracle& o, NodeId node, std::size_t index,
                      Direction dir) {
  return dir == Direction::kIn ? o.in(node, index) : o.out(node, index);
}

NodeId query_in_sorted(GraphOracle& o, NodeId node, std::size_t index) {
  return o.in_sorted(node, index);
}

bool query_adj(GraphOracle& o, NodeId u, NodeId v) { return o.adj(u, v); }

NodeId query_jump(GraphOracle& o) { return o.jump(); }

void require_capabilities(const GraphOracle& o, const Capabilities& need) {
  const Capabilities have = o.capabilities();
  if (need.jump && !have.jump) throw CapabilityDisabled("jump");
  if (need.in_sorted && !have.in_sorted) throw CapabilityDisabled("in_sorted");
  if (need.adj && !have.adj) throw CapabilityDisabled("adj");
}

}  // namespace pprq
