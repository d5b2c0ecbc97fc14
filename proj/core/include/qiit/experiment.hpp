// Copyright 2026 The qiit authors
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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qiit/phi.hpp"

namespace qiit {

inline constexpr const char* engine_version = "0.1.0";

/// Largest Hilbert-space dimension accepted without --force-large.
inline constexpr long desk_dimension_limit = 4096;

/// A declarative experiment: a network, a state, a dynamics, and a task.
/// Parsed from a keyed text file ("key = value" lines, '#' comments).
struct ExperimentConfig {
  std::string task = "phi";
  int n_sites = 2;
  int local_dim = 2;
  std::string geometry = "none";           // none | ring
  std::string state = "uniform:0";         // product:..., uniform:..., bloch:..., bell, file:...
  std::string dynamics = "unitary:identity";
  double time = 0.0;
  std::string sign;                        // "+" or "-"; empty = per-kind default
  double action = 2.5;                     // constant-action prescription value
  std::string prescription = "fixed-t";    // fixed-t | constant-action | argmax-t
  double sweep_start = 0.0;
  double sweep_stop = 1.5707963267948966;
  int sweep_points = 128;
  std::vector<int> sizes;                  // scaling task
  bool fit_vs_log_size = false;
  int k = 1;                               // phi-k task
  std::uint64_t seed = 0;
  int samples = 100;
  std::uint32_t mechanism_mask = 1;        // lr-scan mechanism
  int workers = 1;
  std::string out_dir = "out";
  bool cross_check = false;
  bool force_large = false;

  std::string raw_text;  // normalized key=value lines, hashed into run records
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

Network build_network(const ExperimentConfig& cfg);
/// The channel named by the config; `time_override` replaces cfg.time for
/// sweeps and prescriptions.
Channel build_channel(const ExperimentConfig& cfg,
                      std::optional<double> time_override = std::nullopt,
                      std::optional<int> n_override = std::nullopt,
                      std::optional<std::uint64_t> seed_override = std::nullopt);
System build_system(const ExperimentConfig& cfg);

struct RunRecord {
  std::string config_hash;
  std::string engine_version;
  double elapsed_seconds = 0.0;
  std::vector<std::string> emitted_files;
  std::map<std::string, double> summary;
};

/// Execute the configured task, write its CSV outputs, print a summary.
RunRecord run(const ExperimentConfig& cfg);

/// Canned data-series reproductions with the prescriptions baked in.
/// Known ids: fig2-solid, fig2-gue, fig3a, fig3b, fig5, fig5-inset.
RunRecord reproduce(const std::string& figure_id, const std::string& out_dir, int workers = 1);

struct GoldenItem {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double delta = 0.0;
  bool pass = false;
};

struct GoldenReport {
  std::vector<GoldenItem> items;
  int failures = 0;
};

/// Regression corpus of published worked-example values; reports per-item
/// deltas at 1e-9.
GoldenReport goldens();

std::string config_hash(const std::string& text);

}  // namespace qiit
