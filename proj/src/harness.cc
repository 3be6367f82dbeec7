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

#include "pprq/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "pprq/classic.h"
#include "pprq/errors.h"
#include "pprq/exact.h"
#include "pprq/rng.h"
#include "pprq/single_node.h"

namespace pprq {
namespace {

using nlohmann::json;

constexpr std::uint64_t kJumpStream = 0x4a554d50;

struct Cell {
  std::uint64_t index = 0;
  double delta = 0.0;
  const DirectedGraph* graph = nullptr;
  NodeId source = 0;
  NodeId target = 0;
  std::optional<PprVector> exact;
};

struct Estimate {
  double scalar = 0.0;
  std::vector<double> vec;  // source/target variants
};

Estimate run_algorithm(const ExperimentConfig& cfg, const Cell& cell,
                       GraphOracle& o, Rng& rng) {
  const double a = cfg.alpha;
  const double d = cell.delta;
  const double e = cfg.eps;
  const double pf = cfg.p_f;
  const double c = cfg.walk_constant;
  const NodeId s = cell.source;
  const NodeId t = cell.target;
  const std::string& id = cfg.algorithm;
  Estimate out;
  if (id == "monte_carlo") {
    out.scalar = monte_carlo_pair(o, s, t, a, d, e, pf, rng, c).estimate;
  } else if (id == "monte_carlo_source") {
    out.vec = monte_carlo_single_source(o, s, a, d, e, pf, rng, c);
  } else if (id == "bippr") {
    const double r_max = bippr_default_r_max(o.average_degree(), d);
    out.scalar = bippr_pair(o, s, t, a, d, e, pf, r_max, rng, c).estimate;
  } else if (id == "bidir_randomized") {
    const auto params = derive_params(a, d, e, pf, o.node_count(), cfg.mult);
    out.scalar = single_pair_ppr(o, s, t, params, rng);
  } else if (id == "power_iteration") {
    out.vec = power_iteration_target(o, t, a, power_iteration_levels(a, d, e));
  } else if (id == "approx_contributions") {
    out.vec = approx_contributions(o, t, a, e * d).p;
  } else if (id == "rbs") {
    out.vec = rbs_single_target_auto(o, t, a, d, e, pf, rng);
  } else if (id == "st_jump_mc") {
    out.vec = single_target_jump_mc(o, t, a, d, e, pf, rng, c);
  } else if (id == "st_bidir_jump") {
    out.vec = single_target_bidir_jump(o, t, a, d, e, pf, rng, c);
  } else if (id == "sn_adaptive") {
    out.scalar = single_node_adaptive(o, t, a, e, pf, rng);
  } else if (id == "sn_avg_jump") {
    out.scalar = single_node_avg_jump(o, t, a, e, pf, rng, c);
  } else if (id == "sn_avg_full") {
    out.scalar = single_node_avg_full(o, t, a, e, pf, rng, cfg.mult);
  } else {
    throw Error("unknown algorithm " + id);
  }
  return out;
}

void score(const ExperimentConfig& cfg, Variant variant, const Cell& cell,
           const Estimate& est, TrialResult& row) {
  switch (variant) {
    case Variant::kPair:
    case Variant::kNode:
      row.estimate = est.scalar;
      break;
    case Variant::kSource:
      row.estimate = est.vec.at(cell.target);
      break;
    case Variant::kTarget:
      row.estimate = est.vec.at(cell.source);
      break;
  }
  if (!cell.exact) return;
  const auto& pi = cell.exact->values;
  if (variant == Variant::kPair || variant == Variant::kNode) {
    const double truth =
        variant == Variant::kPair ? pi[cell.source] : pi[cell.target];
    const double err = std::abs(est.scalar - truth);
    const double scale =
        variant == Variant::kPair ? std::max(truth, cell.delta) : truth;
    row.exact = truth;
    row.abs_error = err;
    row.rel_error = err / scale;
    row.success = variant == Variant::kPair
                      ? pair_success(est.scalar, truth, cfg.eps, cell.delta)
                      : node_success(est.scalar, truth, cfg.eps);
    return;
  }
  row.exact = variant == Variant::kSource ? pi[cell.target] : pi[cell.source];
  double max_abs = 0.0;
  double max_rel = 0.0;
  std::size_t passed = 0;
  for (std::size_t v = 0; v < pi.size(); ++v) {
    const double err = std::abs(est.vec[v] - pi[v]);
    max_abs = std::max(max_abs, err);
    max_rel = std::max(max_rel, err / std::max(pi[v], cell.delta));
    passed += pair_success(est.vec[v], pi[v], cfg.eps, cell.delta);
  }
  row.abs_error = max_abs;
  row.rel_error = max_rel;
  row.success = passed == pi.size();
  row.entry_success =
      static_cast<double>(passed) / static_cast<double>(pi.size());
}

json source_to_json(const InstanceSource& src) {
  using K = InstanceSource::Kind;
  switch (src.kind) {
    case K::kFile:
      return {{"file", src.path}};
    case K::kGenerator:
      return {{"generator", json::parse(spec_to_json(src.spec))}};
    case K::kPreset:
      return {{"preset",
               {{"family", family_name(src.family)},
                {"n", src.n},
                {"m", src.m},
                {"partial_model", src.partial_model},
                {"padding", src.padding}}}};
    case K::kRandom:
      return {{"random",
               {{"n", src.n},
                {"avg_degree", src.avg_degree},
                {"seed", src.graph_seed}}}};
    case K::kTrivial:
      return {{"trivial", {{"kind", src.trivial}, {"n", src.n}}}};
  }
  return {};
}

InstanceSource source_from_json(const json& j) {
  InstanceSource src;
  using K = InstanceSource::Kind;
  if (j.contains("file")) {
    src.kind = K::kFile;
    src.path = j["file"].get<std::string>();
  } else if (j.contains("generator")) {
    src.kind = K::kGenerator;
    src.spec = spec_from_json(j["generator"].dump());
  } else if (j.contains("preset")) {
    const auto& p = j["preset"];
    src.kind = K::kPreset;
    src.family = parse_family(p.at("family").get<std::string>());
    src.n = p.at("n").get<std::uint64_t>();
    src.m = p.at("m").get<std::uint64_t>();
    src.partial_model = p.value("partial_model", false);
    src.padding = p.value("padding", false);
  } else if (j.contains("random")) {
    const auto& r = j["random"];
    src.kind = K::kRandom;
    src.n = r.at("n").get<std::uint64_t>();
    src.avg_degree = r.value("avg_degree", 4.0);
    src.graph_seed = r.value("seed", std::uint64_t{0});
  } else if (j.contains("trivial")) {
    const auto& t = j["trivial"];
    src.kind = K::kTrivial;
    src.trivial = t.at("kind").get<std::string>();
    src.n = t.value("n", std::uint64_t{1});
  } else {
    throw InstanceLoadError("instance needs one of file, generator, preset, "
                            "random, trivial");
  }
  return src;
}

std::string fmt_double(double x) { return fmt::format("{}", x); }

const char* const kColumns[] = {
    "algorithm", "variant",  "cell",      "delta",     "eps",     "p_f",
    "alpha",     "n",        "m",         "source",    "target",  "trial",
    "estimate",  "exact",    "abs_error", "rel_error", "success",
    "entry_success", "deg_in", "deg_out", "in", "out", "in_sorted", "adj",
    "jump", "total"};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

std::optional<double> opt_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

std::uint64_t counter(const TrialResult& r, const std::string& y) {
  const QueryStats& q = r.queries;
  if (y == "total") return q.total();
  if (y == "deg_in") return q.deg_in;
  if (y == "deg_out") return q.deg_out;
  if (y == "in") return q.in;
  if (y == "out") return q.out;
  if (y == "in_sorted") return q.in_sorted;
  if (y == "adj") return q.adj;
  if (y == "jump") return q.jump;
  throw Error("unknown counter " + y);
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kPair:
      return "pair";
    case Variant::kSource:
      return "source";
    case Variant::kTarget:
      return "target";
    case Variant::kNode:
      return "node";
  }
  return "pair";
}

Variant parse_variant(const std::string& s) {
  if (s == "pair") return Variant::kPair;
  if (s == "source") return Variant::kSource;
  if (s == "target") return Variant::kTarget;
  if (s == "node") return Variant::kNode;
  throw Error("unknown variant " + s);
}

const std::vector<AlgorithmInfo>& algorithms() {
  static const std::vector<AlgorithmInfo> kAll = {
      {"monte_carlo", Variant::kPair, Capabilities::none()},
      {"monte_carlo_source", Variant::kSource, Capabilities::none()},
      {"bippr", Variant::kPair, Capabilities::none()},
      {"bidir_randomized", Variant::kPair, Capabilities::all()},
      {"power_iteration", Variant::kTarget, Capabilities::none()},
      {"approx_contributions", Variant::kTarget, Capabilities::none()},
      {"rbs", Variant::kTarget, {false, true, false}},
      {"st_jump_mc", Variant::kTarget, {true, false, false}},
      {"st_bidir_jump", Variant::kTarget, {true, false, false}},
      {"sn_adaptive", Variant::kNode, {false, true, false}},
      {"sn_avg_jump", Variant::kNode, {true, false, false}},
      {"sn_avg_full", Variant::kNode, Capabilities::all()},
  };
  return kAll;
}

const AlgorithmInfo& algorithm_info(const std::string& id) {
  for (const auto& a : algorithms()) {
    if (a.id == id) return a;
  }
  throw Error("unknown algorithm " + id);
}

ExperimentConfig config_from_json(const std::string& text) {
  ExperimentConfig cfg;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InstanceLoadError(std::string("bad config: ") + e.what());
  }
  try {
    cfg.algorithm = j.value("algorithm", cfg.algorithm);
    algorithm_info(cfg.algorithm);
    if (j.contains("variant")) {
      cfg.variant = parse_variant(j["variant"].get<std::string>());
    }
    cfg.instance = source_from_json(j.at("instance"));
    if (j.contains("capabilities")) {
      cfg.capabilities =
          Capabilities::parse(j["capabilities"].get<std::string>());
    }
    const json grid = j.value("grid", json::object());
    if (grid.contains("delta")) {
      cfg.deltas = grid["delta"].get<std::vector<double>>();
    }
    cfg.eps = grid.value("eps", cfg.eps);
    cfg.p_f = grid.value("p_f", cfg.p_f);
    cfg.alpha = grid.value("alpha", cfg.alpha);
    cfg.walk_constant = grid.value("walk_constant", cfg.walk_constant);
    if (grid.contains("multipliers")) {
      const auto& m = grid["multipliers"];
      cfg.mult.c_theta = m.value("c_theta", 1.0);
      cfg.mult.c_L = m.value("c_L", 1.0);
      cfg.mult.c_gamma = m.value("c_gamma", 1.0);
      cfg.mult.c_nr = m.value("c_nr", 1.0);
      cfg.mult.c_ns = m.value("c_ns", 1.0);
      cfg.mult.c_tau = m.value("c_tau", 1.0);
    }
    if (j.contains("source")) cfg.source = j["source"].get<NodeId>();
    if (j.contains("target")) cfg.target = j["target"].get<NodeId>();
    cfg.trials = j.value("trials", cfg.trials);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.exact_cap = j.value("exact_cap", cfg.exact_cap);
    cfg.threads = j.value("threads", cfg.threads);
  } catch (const json::exception& e) {
    throw InstanceLoadError(std::string("bad config: ") + e.what());
  }
  if (cfg.trials < 1) throw Error("trials must be >= 1");
  if (cfg.deltas.empty()) throw Error("grid.delta must be non-empty");
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["algorithm"] = cfg.algorithm;
  if (cfg.variant) j["variant"] = variant_name(*cfg.variant);
  j["instance"] = source_to_json(cfg.instance);
  j["capabilities"] = cfg.capabilities.to_string();
  j["grid"] = {{"delta", cfg.deltas},
               {"eps", cfg.eps},
               {"p_f", cfg.p_f},
               {"alpha", cfg.alpha},
               {"walk_constant", cfg.walk_constant},
               {"multipliers",
                {{"c_theta", cfg.mult.c_theta},
                 {"c_L", cfg.mult.c_L},
                 {"c_gamma", cfg.mult.c_gamma},
                 {"c_nr", cfg.mult.c_nr},
                 {"c_ns", cfg.mult.c_ns},
                 {"c_tau", cfg.mult.c_tau}}}};
  if (cfg.source) j["source"] = *cfg.source;
  if (cfg.target) j["target"] = *cfg.target;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["exact_cap"] = cfg.exact_cap;
  j["threads"] = cfg.threads;
  return j.dump(2);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

bool TrialResult::operator==(const TrialResult& o) const {
  // wall_ms is excluded: it is the only non-reproducible field.
  return algorithm == o.algorithm && variant == o.variant && cell == o.cell &&
         delta == o.delta && eps == o.eps && p_f == o.p_f &&
         alpha == o.alpha && n == o.n && m == o.m && source == o.source &&
         target == o.target && trial == o.trial && estimate == o.estimate &&
         exact == o.exact && abs_error == o.abs_error &&
         rel_error == o.rel_error && success == o.success &&
         entry_success == o.entry_success &&
         queries.deg_in == o.queries.deg_in &&
         queries.deg_out == o.queries.deg_out && queries.in == o.queries.in &&
         queries.out == o.queries.out &&
         queries.in_sorted == o.queries.in_sorted &&
         queries.adj == o.queries.adj && queries.jump == o.queries.jump;
}

bool pair_success(double estimate, double exact, double eps, double delta) {
  return std::abs(estimate - exact) < eps * std::max(exact, delta);
}

bool node_success(double estimate, double exact, double eps) {
  return std::abs(estimate - exact) < eps * exact;
}

std::vector<TrialResult> run_experiment(const ExperimentConfig& cfg) {
  const AlgorithmInfo& info = algorithm_info(cfg.algorithm);
  if (cfg.variant && *cfg.variant != info.variant) {
    throw CapabilityMismatch(cfg.algorithm + " solves the " +
                             variant_name(info.variant) + " variant");
  }
  if (!cfg.capabilities.covers(info.needs)) {
    throw CapabilityMismatch(cfg.algorithm + " needs {" +
                             info.needs.to_string() + "}, config grants {" +
                             cfg.capabilities.to_string() + "}");
  }
  if (cfg.trials < 1) throw Error("trials must be >= 1");

  // One graph per cell for presets, otherwise one shared graph.
  std::vector<Instance> graphs;
  std::vector<Cell> cells;
  using K = InstanceSource::Kind;
  const InstanceSource& src = cfg.instance;
  auto add_graph = [&](DirectedGraph g, std::optional<InstanceMeta> meta) {
    Instance inst{std::move(g), meta.value_or(InstanceMeta{})};
    if (!meta) {
      inst.meta.source = 0;
      inst.meta.target =
          static_cast<NodeId>(inst.graph.node_count() > 0
                                  ? inst.graph.node_count() - 1
                                  : 0);
    }
    graphs.push_back(std::move(inst));
  };
  try {
    if (src.kind == K::kPreset) {
      graphs.reserve(cfg.deltas.size());
      for (double delta : cfg.deltas) {
        auto spec = parameter_presets(src.family, src.n, src.m, delta,
                                      cfg.alpha, src.partial_model);
        spec.padding = src.padding;
        auto inst = generate(spec);
        add_graph(std::move(inst.graph), std::move(inst.meta));
      }
    } else if (src.kind == K::kGenerator) {
      auto inst = generate(src.spec);
      add_graph(std::move(inst.graph), std::move(inst.meta));
    } else if (src.kind == K::kFile) {
      add_graph(read_edge_list(src.path), std::nullopt);
    } else if (src.kind == K::kRandom) {
      add_graph(random_digraph(src.n, src.avg_degree, src.graph_seed),
                std::nullopt);
    } else {
      add_graph(trivial_graph(src.trivial, src.n), std::nullopt);
    }
  } catch (const InstanceLoadError&) {
    throw;
  } catch (const Error& e) {
    throw InstanceLoadError(e.what());
  }

  for (std::size_t i = 0; i < cfg.deltas.size(); ++i) {
    const Instance& inst = graphs[graphs.size() == 1 ? 0 : i];
    Cell c;
    c.index = i;
    c.delta = cfg.deltas[i];
    c.graph = &inst.graph;
    c.source = cfg.source.value_or(inst.meta.source);
    c.target = cfg.target.value_or(inst.meta.target);
    const std::size_t n = inst.graph.node_count();
    if (c.source >= n || c.target >= n) {
      throw InstanceLoadError("designated node outside the graph");
    }
    if (n <= cfg.exact_cap) {
      const bool shared = graphs.size() == 1 && i > 0;
      if (shared && (info.variant != Variant::kSource ||
                     cells.front().source == c.source)) {
        c.exact = cells.front().exact;
      } else if (info.variant == Variant::kSource) {
        c.exact = exact_single_source(inst.graph, c.source, cfg.alpha);
      } else if (info.variant == Variant::kNode) {
        c.exact = exact_pagerank(inst.graph, cfg.alpha);
      } else {
        c.exact = exact_single_target(inst.graph, c.target, cfg.alpha);
      }
    }
    cells.push_back(std::move(c));
  }

  const std::size_t total = cells.size() * cfg.trials;
  std::vector<TrialResult> rows(total);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(total);

  auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= total) return;
      const Cell& cell = cells[k / cfg.trials];
      const std::uint64_t trial = k % cfg.trials;
      try {
        const std::uint64_t seed = derive_seed(cfg.seed, cell.index, trial);
        OracleHandle o(*cell.graph, cfg.capabilities,
                       derive_seed(seed, kJumpStream));
        Rng rng(seed);
        const auto t0 = std::chrono::steady_clock::now();
        const Estimate est = run_algorithm(cfg, cell, o, rng);
        const auto t1 = std::chrono::steady_clock::now();
        TrialResult& row = rows[k];
        row.algorithm = cfg.algorithm;
        row.variant = variant_name(info.variant);
        row.cell = cell.index;
        row.delta = cell.delta;
        row.eps = cfg.eps;
        row.p_f = cfg.p_f;
        row.alpha = cfg.alpha;
        row.n = cell.graph->node_count();
        row.m = cell.graph->edge_count();
        row.source = cell.source;
        row.target = cell.target;
        row.trial = trial;
        row.queries = o.stats();
        row.wall_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        score(cfg, info.variant, cell, est, row);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min(cfg.threads, total));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_csv(const std::vector<TrialResult>& rows) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  out += '\n';
  auto opt = [](const std::optional<double>& x) {
    return x ? fmt_double(*x) : std::string();
  };
  for (const auto& r : rows) {
    const QueryStats& q = r.queries;
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},"
        "{},{},{}\n",
        r.algorithm, r.variant, r.cell, fmt_double(r.delta), fmt_double(r.eps),
        fmt_double(r.p_f), fmt_double(r.alpha), r.n, r.m, r.source, r.target,
        r.trial, fmt_double(r.estimate), opt(r.exact), opt(r.abs_error),
        opt(r.rel_error), r.success ? (*r.success ? "1" : "0") : "",
        opt(r.entry_success),
        q.deg_in, q.deg_out, q.in, q.out, q.in_sorted, q.adj, q.jump,
        q.total());
  }
  return out;
}

std::string format_json(const std::vector<TrialResult>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["algorithm"] = r.algorithm;
    j["variant"] = r.variant;
    j["cell"] = r.cell;
    j["delta"] = r.delta;
    j["eps"] = r.eps;
    j["p_f"] = r.p_f;
    j["alpha"] = r.alpha;
    j["n"] = r.n;
    j["m"] = r.m;
    j["source"] = r.source;
    j["target"] = r.target;
    j["trial"] = r.trial;
    j["estimate"] = r.estimate;
    j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    j["abs_error"] = r.abs_error ? json(*r.abs_error) : json(nullptr);
    j["rel_error"] = r.rel_error ? json(*r.rel_error) : json(nullptr);
    j["success"] = r.success ? json(*r.success) : json(nullptr);
    j["entry_success"] =
        r.entry_success ? json(*r.entry_success) : json(nullptr);
    j["queries"] = {{"deg_in", r.queries.deg_in},
                    {"deg_out", r.queries.deg_out},
                    {"in", r.queries.in},
                    {"out", r.queries.out},
                    {"in_sorted", r.queries.in_sorted},
                    {"adj", r.queries.adj},
                    {"jump", r.queries.jump},
                    {"total", r.queries.total()}};
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<TrialResult> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty results file");
  const auto header = split(line, ',');
  if (header.size() != std::size(kColumns)) {
    throw IoError("unexpected results header");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != kColumns[i]) throw IoError("unexpected column " + header[i]);
  }
  std::vector<TrialResult> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != std::size(kColumns)) throw IoError("short row: " + line);
    try {
      TrialResult r;
      r.algorithm = f[0];
      r.variant = f[1];
      r.cell = std::stoull(f[2]);
      r.delta = std::stod(f[3]);
      r.eps = std::stod(f[4]);
      r.p_f = std::stod(f[5]);
      r.alpha = std::stod(f[6]);
      r.n = std::stoull(f[7]);
      r.m = std::stoull(f[8]);
      r.source = std::stoull(f[9]);
      r.target = std::stoull(f[10]);
      r.trial = std::stoull(f[11]);
      r.estimate = std::stod(f[12]);
      r.exact = opt_double(f[13]);
      r.abs_error = opt_double(f[14]);
      r.rel_error = opt_double(f[15]);
      if (!f[16].empty()) r.success = f[16] == "1";
      r.entry_success = opt_double(f[17]);
      r.queries.deg_in = std::stoull(f[18]);
      r.queries.deg_out = std::stoull(f[19]);
      r.queries.in = std::stoull(f[20]);
      r.queries.out = std::stoull(f[21]);
      r.queries.in_sorted = std::stoull(f[22]);
      r.queries.adj = std::stoull(f[23]);
      r.queries.jump = std::stoull(f[24]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw IoError("malformed row: " + line);
    }
  }
  return rows;
}

void emit(const std::vector<TrialResult>& rows, const std::string& format,
          const std::string& path) {
  std::string body;
  if (format == "csv") {
    body = format_csv(rows);
  } else if (format == "json") {
    body = format_json(rows);
  } else {
    throw IoError("unknown format " + format);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << body;
  if (!out) throw IoError("write failed: " + path);
}

std::vector<TrialResult> load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

ScalingFit fit_loglog(const std::vector<double>& x,
                      const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error("x and y differ in length");
  if (x.size() < 4) {
    throw InsufficientPoints(fmt::format("need >= 4 points, got {}", x.size()));
  }
  const std::size_t k = x.size();
  std::vector<double> lx(k), ly(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error("log of non-positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw InsufficientPoints("all x values equal");
  ScalingFit fit;
  fit.points = k;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    sse += r * r;
  }
  fit.stderr_slope = std::sqrt(sse / static_cast<double>(k - 2) / sxx);
  return fit;
}

ScalingFit fit_scaling(const std::vector<TrialResult>& rows,
                       const std::string& x, const std::string& y) {
  std::map<double, std::pair<double, std::size_t>> groups;
  for (const auto& r : rows) {
    double key;
    if (x == "delta") {
      key = r.delta;
    } else if (x == "n") {
      key = static_cast<double>(r.n);
    } else if (x == "m") {
      key = static_cast<double>(r.m);
    } else {
      throw Error("unknown x parameter " + x);
    }
    auto& g = groups[key];
    g.first += static_cast<double>(counter(r, y));
    ++g.second;
  }
  std::vector<double> xs, ys;
  for (const auto& [key, g] : groups) {
    xs.push_back(key);
    ys.push_back(g.first / static_cast<double>(g.second));
  }
  return fit_loglog(xs, ys);
}

}  // namespace pprq
