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

// pprq generate | exact | run | fit

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pprq/errors.h"
#include "pprq/exact.h"
#include "pprq/harness.h"
#include "pprq/instances.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pprq::IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pprq::IoError("cannot write " + path);
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-counted personalized PageRank estimators and lower-bound "
               "instances"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Build an instance, write its edge list");
  std::string gen_config, gen_family, gen_out, gen_meta;
  std::uint64_t gen_n = 0, gen_m = 0;
  double gen_delta = 0.0, gen_alpha = 0.2;
  bool gen_partial = false, gen_no_swap = false, gen_padding = false;
  gen->add_option("--config", gen_config, "Instance spec JSON");
  gen->add_option("--family", gen_family, "Use parameter presets for this family");
  gen->add_option("--n", gen_n, "Preset n");
  gen->add_option("--m", gen_m, "Preset m");
  gen->add_option("--delta", gen_delta, "Preset delta");
  gen->add_option("--alpha", gen_alpha, "Teleport probability")->capture_default_str();
  gen->add_flag("--partial-model", gen_partial, "Weaker-model preset cases");
  gen->add_flag("--no-swap", gen_no_swap, "Emit the unswapped graph");
  gen->add_flag("--padding", gen_padding, "Append the padding component");
  gen->add_option("--out", gen_out, "Edge-list path (stdout if omitted)");
  gen->add_option("--meta", gen_meta, "Also write the resolved spec JSON here");
  gen->callback([&]() {
    pprq::InstanceSpec spec;
    if (!gen_config.empty()) {
      spec = pprq::spec_from_json(slurp(gen_config));
    } else if (!gen_family.empty()) {
      spec = pprq::parameter_presets(pprq::parse_family(gen_family), gen_n,
                                     gen_m, gen_delta, gen_alpha, gen_partial);
    } else {
      throw CLI::ValidationError("generate", "need --config or --family");
    }
    if (gen_no_swap) spec.swap.reset();
    if (gen_padding) spec.padding = true;
    const auto inst = pprq::generate(spec);
    write_text(gen_out, pprq::format_edge_list(inst.graph));
    if (!gen_meta.empty()) write_text(gen_meta, pprq::spec_to_json(spec) + "\n");
    std::cerr << fmt::format("{}: n={} m={} source={} target={}\n",
                             pprq::family_name(spec.family),
                             inst.graph.node_count(), inst.graph.edge_count(),
                             inst.meta.source, inst.meta.target);
  });

  // exact
  auto* ex = app.add_subcommand("exact", "Exact PPR / PageRank vectors");
  std::string ex_graph, ex_out, ex_mode = "pagerank";
  std::uint32_t ex_node = 0;
  double ex_alpha = 0.2;
  ex->add_option("--graph", ex_graph, "Edge-list file")->required();
  ex->add_option("--mode", ex_mode, "source | target | pagerank")
      ->check(CLI::IsMember({"source", "target", "pagerank"}))
      ->capture_default_str();
  ex->add_option("--node", ex_node, "Anchor node for source/target");
  ex->add_option("--alpha", ex_alpha, "Teleport probability")->capture_default_str();
  ex->add_option("--out", ex_out, "CSV path (stdout if omitted)");
  ex->callback([&]() {
    const auto g = pprq::read_edge_list(ex_graph);
    pprq::PprVector v;
    if (ex_mode == "source") {
      v = pprq::exact_single_source(g, ex_node, ex_alpha);
    } else if (ex_mode == "target") {
      v = pprq::exact_single_target(g, ex_node, ex_alpha);
    } else {
      v = pprq::exact_pagerank(g, ex_alpha);
    }
    write_text(ex_out, pprq::format_ppr_csv(v));
  });

  // run
  auto* run = app.add_subcommand("run", "Run an experiment config");
  std::string run_config, run_out, run_format = "csv";
  std::uint64_t run_seed = 0;
  std::size_t run_threads = 0;
  run->add_option("--config", run_config, "Experiment JSON")->required();
  auto* seed_opt = run->add_option("--seed", run_seed, "Master seed (overrides config)");
  run->add_option("--out", run_out, "Results path (stdout if omitted)");
  run->add_option("--format", run_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  auto* threads_opt = run->add_option("--threads", run_threads, "Worker threads");
  run->callback([&]() {
    auto cfg = pprq::load_config(run_config);
    if (seed_opt->count()) cfg.seed = run_seed;
    if (threads_opt->count()) cfg.threads = run_threads;
    const auto rows = pprq::run_experiment(cfg);
    if (run_out.empty() || run_out == "-") {
      std::cout << (run_format == "csv" ? pprq::format_csv(rows)
                                        : pprq::format_json(rows));
    } else {
      pprq::emit(rows, run_format, run_out);
    }
  });

  // fit
  auto* fit = app.add_subcommand("fit", "Log-log slope of mean query counts");
  std::string fit_in, fit_x = "delta", fit_y = "total";
  fit->add_option("--in", fit_in, "Results CSV")->required();
  fit->add_option("--x", fit_x, "delta | n | m")->capture_default_str();
  fit->add_option("--y", fit_y, "total or a counter name")->capture_default_str();
  fit->callback([&]() {
    const auto f = pprq::fit_scaling(pprq::load_csv(fit_in), fit_x, fit_y);
    std::cout << fmt::format("slope {:.6f} +- {:.6f} (intercept {:.6f}, {} points)\n",
                             f.slope, f.stderr_slope, f.intercept, f.points);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const pprq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
