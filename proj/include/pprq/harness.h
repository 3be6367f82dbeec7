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

#ifndef PPRQ_HARNESS_H_
#define PPRQ_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pprq/bidir.h"
#include "pprq/instances.h"
#include "pprq/oracle.h"

namespace pprq {

enum class Variant { kPair, kSource, kTarget, kNode };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Algorithm ids accepted in configs, with the variant each solves and the
// capabilities it needs.
struct AlgorithmInfo {
  std::string id;
  Variant variant;
  Capabilities needs;
};
const std::vector<AlgorithmInfo>& algorithms();
const AlgorithmInfo& algorithm_info(const std::string& id);

// Where the graph comes from. Exactly one kind per config.
struct InstanceSource {
  enum class Kind { kFile, kGenerator, kPreset, kRandom, kTrivial };
  Kind kind = Kind::kTrivial;
  std::string path;            // kFile
  InstanceSpec spec;           // kGenerator
  Family family = Family::kSpAvg;  // kPreset
  std::uint64_t n = 1;         // kPreset, kRandom, kTrivial
  std::uint64_t m = 1;         // kPreset
  bool partial_model = false;  // kPreset
  bool padding = false;        // kPreset: append the padding component
  double avg_degree = 4.0;     // kRandom
  std::uint64_t graph_seed = 0;  // kRandom
  std::string trivial = "singleton";  // chain | star | cycle | singleton
};

struct ExperimentConfig {
  std::string algorithm = "monte_carlo";
  std::optional<Variant> variant;  // must agree with the algorithm if set
  InstanceSource instance;
  Capabilities capabilities = Capabilities::all();
  std::vector<double> deltas{0.1};
  double eps = 0.2;
  double p_f = 0.1;
  double alpha = 0.2;
  Multipliers mult;
  double walk_constant = 16.0;
  // Override the instance's designated nodes.
  std::optional<NodeId> source;
  std::optional<NodeId> target;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t exact_cap = 20000;
  std::size_t threads = 1;
};

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);

struct TrialResult {
  std::string algorithm;
  std::string variant;
  std::uint64_t cell = 0;
  double delta = 0.0;
  double eps = 0.0;
  double p_f = 0.0;
  double alpha = 0.0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t source = 0;
  std::uint64_t target = 0;
  std::uint64_t trial = 0;
  // Entry at the designated node (t for source vectors, s for target
  // vectors).
  double estimate = 0.0;
  std::optional<double> exact;
  // For vectors the maxima over all entries. rel_error is the ratio the
  // success predicate compares against eps.
  std::optional<double> abs_error;
  std::optional<double> rel_error;
  // Vectors: every entry passes. entry_success is the passing fraction.
  std::optional<bool> success;
  std::optional<double> entry_success;
  QueryStats queries;
  double wall_ms = 0.0;  // not serialized

  bool operator==(const TrialResult& o) const;
};

// |est - pi| < eps * max(pi, delta).
bool pair_success(double estimate, double exact, double eps, double delta);
// |est - pi| < eps * pi.
bool node_success(double estimate, double exact, double eps);

// Runs every (delta cell, trial). Deterministic given the config and seed
// regardless of thread count. Throws CapabilityMismatch, InstanceLoadError.
std::vector<TrialResult> run_experiment(const ExperimentConfig& cfg);

std::string format_csv(const std::vector<TrialResult>& rows);
std::string format_json(const std::vector<TrialResult>& rows);
std::vector<TrialResult> parse_csv(const std::string& text);
// format is "csv" or "json"; throws IoError.
void emit(const std::vector<TrialResult>& rows, const std::string& format,
          const std::string& path);
std::vector<TrialResult> load_csv(const std::string& path);

struct ScalingFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

// Least squares of log y on log x. Throws InsufficientPoints below 4.
ScalingFit fit_loglog(const std::vector<double>& x,
                      const std::vector<double>& y);

// Groups rows by x ("delta", "n" or "m"), averages y ("total" or a counter
// name such as "out") per group, then fits.
ScalingFit fit_scaling(const std::vector<TrialResult>& rows,
                       const std::string& x = "delta",
                       const std::string& y = "total");

}  // namespace pprq

#endif  // PPRQ_HARNESS_H_
