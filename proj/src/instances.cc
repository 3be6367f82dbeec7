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

#include "pprq/instances.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <json.hpp>

#include "pprq/errors.h"
#include "pprq/rng.h"

namespace pprq {
namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kNames[] = {
    {Family::kFolklorePair, "folklore_pair"},
    {Family::kSpWorst, "sp_worst"},
    {Family::kSpAvg, "sp_avg"},
    {Family::kStWorstAdj, "st_worst_adj"},
    {Family::kStWorstFull, "st_worst_full"},
    {Family::kStAvgAdj, "st_avg_adj"},
    {Family::kStAvgJump, "st_avg_jump"},
    {Family::kStAvgFull, "st_avg_full"},
    {Family::kSnAvgAdj, "sn_avg_adj"},
    {Family::kSnAvgInsorted, "sn_avg_insorted"},
    {Family::kSnWorstFull, "sn_worst_full"},
    {Family::kSnAvgXor, "sn_avg_xor"},
    {Family::kSnAvgFull, "sn_avg_full"},
    {Family::kOutputSizeSt, "output_size_st"},
};

void require(bool ok, const std::string& inequality) {
  if (!ok) throw SpecConstraintViolation("violated: " + inequality);
}

class Builder {
 public:
  Layer add(const std::string& name, std::uint64_t count) {
    require(next_ + count < UINT32_MAX, "node count < 2^32");
    Layer l{name, static_cast<NodeId>(next_), static_cast<NodeId>(next_ + count)};
    next_ += count;
    layers_.push_back(l);
    return l;
  }

  std::size_t edge(NodeId u, NodeId v) {
    edges_.emplace_back(u, v);
    return edges_.size() - 1;
  }

  void self_loops(const Layer& l) {
    for (NodeId v = l.begin; v < l.end; ++v) edge(v, v);
  }

  void fan_out(NodeId u, const Layer& to) {
    for (NodeId v = to.begin; v < to.end; ++v) edge(u, v);
  }

  void fan_in(const Layer& from, NodeId v) {
    for (NodeId u = from.begin; u < from.end; ++u) edge(u, v);
  }

  std::vector<std::size_t> complete(const Layer& a, const Layer& b) {
    std::vector<std::size_t> ids;
    for (NodeId u = a.begin; u < a.end; ++u) {
      for (NodeId v = b.begin; v < b.end; ++v) ids.push_back(edge(u, v));
    }
    return ids;
  }

  // N_in(V(i)) = {U(i), ..., U(i+deg-1 mod N)}. Returns edge ids grouped by
  // head, head ascending.
  std::vector<std::size_t> circulant(const Layer& u, const Layer& v,
                                     std::uint64_t deg) {
    const std::uint64_t n = u.size();
    std::vector<std::size_t> ids;
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t k = 0; k < deg; ++k) {
        ids.push_back(edge(static_cast<NodeId>(u.begin + (i + k) % n),
                           static_cast<NodeId>(v.begin + i)));
      }
    }
    return ids;
  }

  // V(i) -> X(i / L); X(g) -> every node of W's group g; W self-loops.
  void groups(const Layer& v, const Layer& x, const Layer& w,
              std::uint64_t size) {
    for (NodeId i = 0; i < v.size(); ++i) edge(v.begin + i, x.begin + i / size);
    for (NodeId g = 0; g < x.size(); ++g) {
      const NodeId lo = w.begin + g * size;
      const NodeId hi = std::min<NodeId>(w.end, lo + size);
      for (NodeId j = lo; j < hi; ++j) edge(x.begin + g, j);
    }
    self_loops(w);
  }

  std::vector<Edge>& edges() { return edges_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::uint64_t node_count() const { return next_; }

 private:
  std::uint64_t next_ = 0;
  std::vector<Edge> edges_;
  std::vector<Layer> layers_;
};

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

// Edges into the first group of V2 (heads V2[0..L)).
std::vector<std::size_t> into_first_group(const std::vector<std::size_t>& ids,
                                          const std::vector<Edge>& edges,
                                          const Layer& v2, std::uint64_t size) {
  std::vector<std::size_t> out;
  for (std::size_t id : ids) {
    if (edges[id].second < v2.begin + size) out.push_back(id);
  }
  return out;
}

Layer group_of(const Layer& w, std::uint64_t size) {
  return {"target_group", w.begin,
          static_cast<NodeId>(std::min<std::uint64_t>(w.end, w.begin + size))};
}

double pow1m(double alpha, int k) { return std::pow(1.0 - alpha, k); }

// Closed form for the pair families after the swap; 0 before.
std::optional<double> pair_closed_form(const InstanceSpec& s) {
  const double a = s.alpha;
  const double L = static_cast<double>(s.L);
  const double D = static_cast<double>(s.D);
  switch (s.family) {
    case Family::kFolklorePair:
      // a in A keeps its self-loop next to the extra edge: the walk leaves
      // toward B with probability (1-a)/2 per step.
      return pow1m(a, 3) / ((1.0 + a) * L);
    case Family::kSpWorst:
      return pow1m(a, 3) / (L * D);
    case Family::kSpAvg:
      return pow1m(a, 4) / (L * L * D);
    case Family::kStWorstAdj:
      return pow1m(a, 2);
    case Family::kStWorstFull:
      return pow1m(a, 2) / D;
    case Family::kStAvgAdj:
      return pow1m(a, 3) / L;
    case Family::kStAvgJump:
    case Family::kStAvgFull:
      return pow1m(a, 3) / (L * D);
    default:
      return std::nullopt;
  }
}

void validate(const InstanceSpec& s) {
  require(s.n >= 1, "n >= 1");
  require(s.L >= 1, "L >= 1");
  require(s.D >= 1, "D >= 1");
  require(s.alpha > 0.0 && s.alpha < 1.0, "0 < alpha < 1");
  const std::uint64_t d = s.background_degree();
  switch (s.family) {
    case Family::kSpAvg:
      require(s.L <= s.n, "L <= n");
      require(s.D <= s.n, "D <= n");
      break;
    case Family::kStWorstAdj:
    case Family::kSnAvgAdj:
      require(d <= s.n, "m/n <= n");
      break;
    case Family::kStWorstFull:
      require(s.D <= s.n, "D <= n");
      break;
    case Family::kStAvgAdj:
      require(s.L <= s.n, "L <= n");
      require(d <= s.n, "m/n <= n");
      break;
    case Family::kStAvgJump:
      require(s.L <= s.n, "L <= n");
      require(s.D <= s.n, "D <= n");
      require(d <= s.n, "m/n <= n");
      break;
    case Family::kStAvgFull:
    case Family::kSnAvgFull:
      require(s.L <= s.n, "L <= n");
      require(s.D <= s.n, "D <= n");
      break;
    case Family::kSnWorstFull:
      require(s.L <= s.D, "L <= sqrt(m) (D)");
      break;
    case Family::kSnAvgXor:
      require(s.L <= s.n, "L <= n");
      require(d <= s.n, "m/n <= n");
      break;
    default:
      break;
  }
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& e : kNames) {
    if (e.family == f) return e.name;
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (const auto& e : kNames) {
    if (name == e.name) return e.family;
  }
  throw InstanceLoadError("unknown family '" + name + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& e : kNames) out.push_back(e.family);
  return out;
}

std::uint64_t InstanceSpec::background_degree() const {
  return std::max<std::uint64_t>(1, m / std::max<std::uint64_t>(1, n));
}

const Layer& InstanceMeta::layer(const std::string& name) const {
  for (const auto& l : layers) {
    if (l.name == name) return l;
  }
  throw Error("no layer named " + name);
}

std::string InstanceMeta::role(NodeId v) const {
  for (const auto& l : layers) {
    if (l.contains(v)) return l.name;
  }
  return "";
}

Instance generate(const InstanceSpec& spec) {
  validate(spec);
  Builder b;
  InstanceMeta meta;
  std::vector<std::size_t> e1_ids, e2_ids;
  bool source_is_e1_tail = false;
  const std::uint64_t n = spec.n;
  const std::uint64_t L = spec.L;
  const std::uint64_t D = spec.D;
  const std::uint64_t d = spec.background_degree();

  switch (spec.family) {
    case Family::kFolklorePair: {
      const Layer s = b.add("s", 1);
      const Layer a = b.add("A", L);
      const Layer bl = b.add("B", L);
      const Layer t = b.add("t", 1);
      b.fan_out(s.begin, a);
      b.self_loops(a);
      b.fan_in(bl, t.begin);
      b.edge(t.begin, t.begin);
      if (spec.swap) {
        require(spec.swap->e1 < L && spec.swap->e2 < L,
                "extra-edge endpoints < L");
        b.edge(a.begin + static_cast<NodeId>(spec.swap->e1),
               bl.begin + static_cast<NodeId>(spec.swap->e2));
      }
      meta.source = s.begin;
      meta.target = t.begin;
      meta.target_group = {"target_group", t.begin, t.end};
      break;
    }
    case Family::kSpWorst: {
      const Layer s = b.add("s", 1);
      const Layer u1 = b.add("U1", L);
      const Layer v1 = b.add("V1", D);
      const Layer u2 = b.add("U2", L);
      const Layer v2 = b.add("V2", D);
      const Layer t = b.add("t", 1);
      b.fan_out(s.begin, u1);
      e1_ids = b.complete(u1, v1);
      b.self_loops(v1);
      e2_ids = b.complete(u2, v2);
      b.fan_in(v2, t.begin);
      b.edge(t.begin, t.begin);
      meta.source = s.begin;
      meta.target = t.begin;
      meta.target_group = {"target_group", t.begin, t.end};
      break;
    }
    case Family::kSpAvg: {
      const Layer s = b.add("s", 1);
      const Layer u1 = b.add("U1", spec.adj_only_layout ? D : L);
      const Layer v1 = b.add("V1", spec.adj_only_layout ? L : D);
      const Layer u2 = b.add("U2", n);
      const Layer v2 = b.add("V2", n);
      const Layer x = b.add("X", ceil_div(n, L));
      const Layer w2 = b.add("W2", n);
      b.fan_out(s.begin, u1);
      e1_ids = b.complete(u1, v1);
      b.self_loops(v1);
      const auto lower = b.circulant(u2, v2, D);
      e2_ids = into_first_group(lower, b.edges(), v2, L);
      b.groups(v2, x, w2, L);
      meta.source = s.begin;
      meta.target = w2.begin;
      meta.target_group = group_of(w2, L);
      break;
    }
    case Family::kStWorstAdj: {
      const Layer u = b.add("u", 1);
      const Layer u2 = b.add("U2", n);
      const Layer v2 = b.add("V2", n);
      const Layer t = b.add("t", 1);
      e1_ids.push_back(b.edge(u.begin, u.begin));
      e2_ids = b.circulant(u2, v2, d);
      b.fan_in(v2, t.begin);
      b.edge(t.begin, t.begin);
      meta.source = u.begin;
      meta.target = t.begin;
      meta.target_group = {"target_group", t.begin, t.end};
      break;
    }
    case Family::kStWorstFull: {
      const Layer u1 = b.add("U1", n);
      const Layer v1 = b.add("V1", n);
      const Layer u2 = b.add("U2", n);
      const Layer v2 = b.add("V2", n);
      const Layer t = b.add("t", 1);
      e1_ids = b.circulant(u1, v1, D);
      b.self_loops(v1);
      e2_ids = b.circulant(u2, v2, D);
      b.fan_in(v2, t.begin);
      b.edge(t.begin, t.begin);
      source_is_e1_tail = true;
      meta.target = t.begin;
      meta.target_group = {"target_group", t.begin, t.end};
      break;
    }
    case Family::kStAvgAdj: {
      const Layer u = b.add("u", 1);
      const Layer u2 = b.add("U2", n);
      const Layer v2 = b.add("V2", n);
      const Layer x = b.add("X", ceil_div(n, L));
      const Layer w2 = b.add("W2", n);
      e1_ids.push_back(b.edge(u.begin, u.begin));
      const auto lower = b.circulant(u2, v2, d);
      e2_ids = into_first_group(lower, b.edges(), v2, L);
      b.groups(v2, x, w2, L);
      meta.source = u.begin;
      meta.target = w2.begin;
      meta.target_group = group_of(w2, L);
      break;
    }
    case Family::kStAvgJump:
    case Family::kStAvgFull: {
      const Layer u1 = b.add("U1", n);
      const Layer v1 = b.add("V1", n);
      const Layer u2 = b.add("U2", n);
      const Layer v2 = b.add("V2", n);
      const Layer x = b.add("X", ceil_div(n, L));
      const Layer w2 = b.add("W2", n);
      e1_ids = b.circulant(u1, v1, D);
      b.self_loops(v1);
      const auto lower =
          b.circulant(u2, v2, spec.family == Family::kStAvgFull ? D : d);
      e2_ids = into_first_group(lower, b.edges(), v2, L);
      b.groups(v2, x, w2, L);
      source_is_e1_tail = true;
      meta.target = w2.begin;
      meta.target_group = group_of(w2, L);
      break;
    }
    case Family::kSnAvgAdj: {
      const Layer u1 = b.add("U1", n);
      const Layer u = b.add("u", 1);
      const Layer u2 = b.add("U2", n);
      const Layer v2 = b.add("V2", n);
      const Layer x = b.add("x", 1);
      const Layer w2 = b.add("W2", n);
      b.fan_in(u1, u.begin);
      e1_ids.push_back(b.edge(u.begin, u.begin));
      e2_ids = b.circulant(u2, v2, d);
      b.fan_in(v2, x.begin);
      b.fan_out(x.begin, w2);
      b.self_loops(w2);
      meta.has_source = false;
      meta.target = w2.begin;
      meta.target_group = {"target_group", w2.begin, w2.end};
      break;
    }
    case Family::kSnAvgInsorted: {
      const Layer u1 = b.add("U1", n);
      const Layer u = b.add("u", 1);
      const Layer v2 = b.add("V2", n);
      const Layer x = b.add("x", 1);
      const Layer w2 = b.add("W2", n);
      b.fan_in(u1, u.begin);
      e1_ids.push_back(b.edge(u.begin, u.begin));
      for (NodeId v = v2.begin; v < v2.end; ++v) {
        e2_ids.push_back(b.edge(v, x.begin));
      }
      b.fan_out(x.begin, w2);
      b.self_loops(w2);
      meta.has_source = false;
      meta.target = w2.begin;
      meta.target_group = {"target_group", w2.begin, w2.end};
      break;
    }
    case Family::kSnWorstFull: {
      const Layer xs = b.add("X", n);
      const Layer x = b.add("x", 1);
      const Layer u1 = b.add("U1", L);
      const Layer v1 = b.add("V1", D);
      const Layer u2 = b.add("U2", D);
      const Layer v2 = b.add("V2", L);
      const Layer tl = b.add("T", D - L);
      const Layer t = b.add("t", 1);
      b.fan_in(xs, x.begin);
      b.fan_out(x.begin, u1);
      e1_ids = b.complete(u1, v1);
      b.self_loops(v1);
      for (NodeId u = u2.begin; u < u2.end; ++u) {
        for (NodeId v = v2.begin; v < v2.end; ++v) e2_ids.push_back(b.edge(u, v));
        b.fan_out(u, tl);
      }
      b.self_loops(tl);
      b.fan_in(v2, t.begin);
      b.edge(t.begin, t.begin);
      meta.has_source = false;
      meta.target = t.begin;
      meta.target_group = {"target_group", t.begin, t.end};
      break;
    }
    case Family::kSnAvgXor:
    case Family::kSnAvgFull: {
      const std::uint64_t deg = spec.family == Family::kSnAvgFull ? D : d;
      const Layer w1 = b.add("W1", n);
      const Layer u = b.add("u", 1);
      const Layer u1 = b.add("U1", spec.adj_only_layout ? deg : L);
      const Layer v1 = b.add("V1", spec.adj_only_layout ? L : deg);
      const Layer u2 = b.add("U2", n);
      const Layer v2 = b.add("V2", n);
      const Layer x = b.add("X", ceil_div(n, L));
      const Layer w2 = b.add("W2", n);
      b.fan_in(w1, u.begin);
      b.fan_out(u.begin, u1);
      e1_ids = b.complete(u1, v1);
      b.self_loops(v1);
      const auto lower = b.circulant(u2, v2, deg);
      e2_ids = into_first_group(lower, b.edges(), v2, L);
      b.groups(v2, x, w2, L);
      meta.has_source = false;
      meta.target = w2.begin;
      meta.target_group = group_of(w2, L);
      break;
    }
    case Family::kOutputSizeSt: {
      if (!spec.average_layout) {
        const Layer in = b.add("In", n);
        const Layer t = b.add("t", 1);
        b.fan_in(in, t.begin);
        b.edge(t.begin, t.begin);
        meta.target = t.begin;
        meta.source = in.begin;
        meta.target_group = {"target_group", t.begin, t.end};
      } else {
        for (std::uint64_t c = 0; c < D; ++c) {
          const std::string suffix = "_" + std::to_string(c);
          const Layer in = b.add("In" + suffix, n);
          const Layer g = b.add("g" + suffix, 1);
          const Layer out = b.add("Out" + suffix, L);
          b.fan_in(in, g.begin);
          b.fan_out(g.begin, out);
          b.self_loops(out);
          if (c == 0) {
            meta.source = in.begin;
            meta.target = out.begin;
            meta.target_group = {"target_group", out.begin, out.end};
          }
        }
      }
      meta.has_source = false;
      break;
    }
  }

  if (spec.padding) {
    const Layer p = b.add("padding", n);
    const std::uint64_t dp = std::min<std::uint64_t>(
        n, std::max<std::uint64_t>(1, spec.m / n));
    for (std::uint64_t j = 0; j < n; ++j) {
      for (std::uint64_t k = 0; k < dp; ++k) {
        b.edge(static_cast<NodeId>(p.begin + j),
               static_cast<NodeId>(p.begin + (j + k) % n));
      }
    }
  }

  auto& edges = b.edges();
  if (!e1_ids.empty()) {
    const SwapChoice choice = spec.swap.value_or(SwapChoice{});
    require(choice.e1 < e1_ids.size(), "swap e1 index < |E1|");
    require(choice.e2 < e2_ids.size(), "swap e2 index < |E2|");
    const std::size_t i1 = e1_ids[choice.e1];
    const std::size_t i2 = e2_ids[choice.e2];
    meta.e1 = edges[i1];
    meta.e2 = edges[i2];
    if (source_is_e1_tail) meta.source = edges[i1].first;
    if (spec.swap) {
      const auto [a1, b1] = edges[i1];
      const auto [a2, b2] = edges[i2];
      edges[i1] = {a1, b2};
      edges[i2] = {a2, b1};
    }
  }

  const auto closed = pair_closed_form(spec);
  if (closed) {
    meta.pi_pre = 0.0;
    meta.pi_post = *closed;
  }
  meta.layers = b.layers();
  return {build_graph(edges, b.node_count()), std::move(meta)};
}

double closed_form_pi(const InstanceSpec& spec) {
  validate(spec);
  if (auto v = pair_closed_form(spec)) return spec.swap ? *v : 0.0;
  // Node families: pi(t) = Theta(k / N) with N the total node count.
  const Instance inst = generate(spec);
  const double total = static_cast<double>(inst.graph.node_count());
  const double a = spec.alpha;
  switch (spec.family) {
    case Family::kSnWorstFull: {
      const double L = static_cast<double>(spec.L);
      throw NoClosedForm("pi(t) = Theta(L/n)", (1.0 - a) * L / total,
                         (2.0 + 3.0 * L) / total);
    }
    case Family::kOutputSizeSt:
      throw NoClosedForm("output-size family", a / total, 1.0);
    default:
      throw NoClosedForm("pi(t) = Theta(1/n)", a / total, 8.0 / total);
  }
}

InstanceSpec parameter_presets(Family family, std::uint64_t n,
                               std::uint64_t m, double delta, double alpha,
                               bool partial_model) {
  if (!(n >= 1 && n <= m && static_cast<double>(m) <=
                                    static_cast<double>(n) * static_cast<double>(n))) {
    throw RegimeUndefined("need n <= m <= n^2");
  }
  if (!(delta > 0.0 && delta <= 1.0)) throw RegimeUndefined("delta in (0,1]");
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  const double d = mm / nn;
  const double dd = std::floor(d);
  auto floor_pos = [](double x, const char* what) {
    if (!(x >= 1.0)) throw RegimeUndefined(std::string(what) + " < 1");
    return static_cast<std::uint64_t>(std::floor(x + 1e-9));
  };
  InstanceSpec s;
  s.family = family;
  s.n = n;
  s.m = m;
  s.alpha = alpha;
  s.swap = SwapChoice{};
  switch (family) {
    case Family::kFolklorePair:
      s.L = floor_pos(std::min(nn, 1.0 / delta), "min(n,1/delta)");
      s.D = 1;
      break;
    case Family::kSpWorst: {
      const double c = std::pow(1.0 - alpha, 3);
      s.L = s.D = floor_pos(std::sqrt(c * std::min(mm, 1.0 / delta)), "L");
      break;
    }
    case Family::kSpAvg: {
      const double c = std::pow(1.0 - alpha, 4);
      if (delta > c) throw RegimeUndefined("delta > (1-alpha)^4");
      if (delta <= 1.0 / (nn * mm)) {
        s.L = floor_pos(c * nn, "cn");
        s.D = floor_pos(dd, "d");
      } else if (partial_model ? delta <= c / d : delta <= c / (d * d * d)) {
        s.L = floor_pos(std::sqrt(c / (d * delta)), "L");
        s.D = floor_pos(dd, "d");
      } else if (partial_model) {
        s.L = 1;
        s.D = floor_pos(c / delta, "D");
      } else {
        s.L = s.D = floor_pos(std::cbrt(c / delta), "L");
      }
      s.L = std::min(s.L, n);
      s.D = std::min(s.D, n);
      s.adj_only_layout = false;
      break;
    }
    case Family::kStWorstAdj:
      s.L = 1;
      s.D = floor_pos(dd, "d");
      break;
    case Family::kStWorstFull: {
      const double c = std::pow(1.0 - alpha, 2);
      if (delta > c) throw RegimeUndefined("delta > (1-alpha)^2");
      s.L = 1;
      s.D = delta <= c / d ? floor_pos(dd, "d") : floor_pos(c / delta, "D");
      s.D = std::min(s.D, n);
      break;
    }
    case Family::kStAvgAdj: {
      const double c = std::pow(1.0 - alpha, 3);
      if (delta > c) throw RegimeUndefined("delta > (1-alpha)^3");
      s.L = delta <= 1.0 / nn ? floor_pos(c * nn, "cn")
                              : floor_pos(c / delta, "L");
      s.L = std::min(s.L, n);
      s.D = 1;
      break;
    }
    case Family::kStAvgJump: {
      const double c = std::pow(1.0 - alpha, 3);
      if (delta > c) throw RegimeUndefined("delta > (1-alpha)^3");
      if (delta <= 1.0 / mm) {
        s.L = floor_pos(c * nn, "cn");
        s.D = floor_pos(dd, "d");
      } else if (delta <= d * c / nn) {
        s.L = floor_pos(std::sqrt(nn * c / (d * delta)), "L");
        s.D = floor_pos(std::sqrt(d * c / (nn * delta)), "D");
      } else {
        s.L = floor_pos(c / delta, "L");
        s.D = 1;
      }
      s.L = std::min(s.L, n);
      s.D = std::min(s.D, n);
      break;
    }
    case Family::kStAvgFull: {
      const double c = std::pow(1.0 - alpha, 3);
      if (delta > c) throw RegimeUndefined("delta > (1-alpha)^3");
      if (delta <= 1.0 / mm) {
        s.L = floor_pos(c * nn, "cn");
        s.D = floor_pos(dd, "d");
      } else if (delta <= c / d) {
        s.L = floor_pos(c / (d * delta), "L");
        s.D = floor_pos(dd, "d");
      } else {
        s.L = 1;
        s.D = floor_pos(c / delta, "D");
      }
      s.L = std::min(s.L, n);
      s.D = std::min(s.D, n);
      break;
    }
    case Family::kSnAvgAdj:
    case Family::kSnAvgInsorted:
      s.L = 1;
      s.D = 1;
      break;
    case Family::kSnWorstFull:
      s.D = floor_pos(std::sqrt(mm), "sqrt(m)");
      s.L = std::min(s.D, floor_pos(std::sqrt(nn) / std::pow(mm, 0.25), "L"));
      break;
    case Family::kSnAvgXor:
      s.L = std::min(n, floor_pos(std::sqrt(nn / d), "L"));
      s.D = 1;
      break;
    case Family::kSnAvgFull:
      s.L = std::min(n, floor_pos(std::cbrt(nn), "L"));
      s.D = std::min(n, floor_pos(std::sqrt(mm) / std::cbrt(nn), "D"));
      break;
    case Family::kOutputSizeSt:
      s.L = floor_pos(std::min(nn, 1.0 / delta), "min(n,1/delta)");
      s.D = floor_pos(std::max(1.0, nn * delta), "copies");
      s.swap.reset();
      break;
  }
  return s;
}

std::string spec_to_json(const InstanceSpec& spec) {
  nlohmann::json j;
  j["family"] = family_name(spec.family);
  j["n"] = spec.n;
  j["m"] = spec.m;
  j["L"] = spec.L;
  j["D"] = spec.D;
  j["alpha"] = spec.alpha;
  if (spec.swap) {
    j["swap"] = {{"e1", spec.swap->e1}, {"e2", spec.swap->e2}};
  } else {
    j["swap"] = nullptr;
  }
  j["padding"] = spec.padding;
  j["adj_only_layout"] = spec.adj_only_layout;
  j["average_layout"] = spec.average_layout;
  return j.dump(2);
}

InstanceSpec spec_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    InstanceSpec s;
    s.family = parse_family(j.at("family").get<std::string>());
    s.n = j.value("n", s.n);
    s.m = j.value("m", s.m);
    s.L = j.value("L", s.L);
    s.D = j.value("D", s.D);
    s.alpha = j.value("alpha", s.alpha);
    if (j.contains("swap") && !j["swap"].is_null()) {
      s.swap = SwapChoice{j["swap"].value("e1", std::uint64_t{0}),
                          j["swap"].value("e2", std::uint64_t{0})};
    }
    s.padding = j.value("padding", false);
    s.adj_only_layout = j.value("adj_only_layout", false);
    s.average_layout = j.value("average_layout", false);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InstanceLoadError(std::string("bad instance spec: ") + e.what());
  }
}

DirectedGraph random_digraph(std::size_t n, double avg_degree,
                             std::uint64_t seed) {
  if (n == 0) throw NodeIdOutOfRange(0);
  Rng rng(seed);
  const auto max_deg = static_cast<std::uint64_t>(
      std::max(1.0, std::round(2.0 * avg_degree - 1.0)));
  std::vector<Edge> edges;
  std::unordered_set<NodeId> seen;
  for (NodeId u = 0; u < n; ++u) {
    const std::uint64_t k =
        std::min<std::uint64_t>(n, 1 + rng.below(max_deg));
    seen.clear();
    while (seen.size() < k) {
      const auto v = static_cast<NodeId>(rng.below(n));
      if (seen.insert(v).second) edges.emplace_back(u, v);
    }
  }
  return build_graph(edges, n);
}

DirectedGraph trivial_graph(const std::string& kind, std::size_t n) {
  std::vector<Edge> edges;
  if (kind == "singleton") {
    n = 1;
    edges.emplace_back(0, 0);
  } else if (n == 0) {
    throw InstanceLoadError("trivial graph needs n >= 1");
  } else if (kind == "chain") {
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, n - 1);
  } else if (kind == "star") {
    if (n == 1) edges.emplace_back(0, 0);
    for (NodeId i = 1; i < n; ++i) {
      edges.emplace_back(0, i);
      edges.emplace_back(i, 0);
    }
  } else if (kind == "cycle") {
    for (NodeId i = 0; i < n; ++i) {
      edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
    }
  } else {
    throw InstanceLoadError("unknown trivial graph '" + kind + "'");
  }
  return build_graph(edges, n);
}

}  // namespace pprq
