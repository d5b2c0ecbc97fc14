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

#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qiit/experiment.hpp"
#include "qiit/matrix_io.hpp"

namespace {

struct CommonFlags {
  std::optional<int> workers;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  bool cross_check = false;
  bool force_large = false;

  void apply(qiit::ExperimentConfig& cfg) const {
    if (workers) cfg.workers = *workers;
    if (seed) cfg.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;
    if (cross_check) cfg.cross_check = true;
    if (force_large) cfg.force_large = true;
  }

  void attach(CLI::App* app) {
    app->add_option("--workers", workers, "Worker threads for the partition search");
    app->add_option("--seed", seed, "Base seed for stochastic tasks");
    app->add_option("--out-dir", out_dir, "Output directory for CSV files");
    app->add_flag("--cross-check", cross_check,
                  "Validate the factorized partition path against brute force");
    app->add_flag("--force-large", force_large,
                  "Allow Hilbert-space dimensions beyond the desk limit");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrated-information analysis of qudit networks"};
  app.require_subcommand(1);

  std::string config_path;
  CommonFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute a config-driven experiment");
  run_cmd->add_option("--config", config_path, "Experiment config file")->required();
  run_flags.attach(run_cmd);

  std::string figure_id;
  CommonFlags repro_flags;
  CLI::App* repro_cmd = app.add_subcommand("reproduce", "Emit a published data series");
  repro_cmd
      ->add_option("--id", figure_id,
                   "One of fig2-solid, fig2-gue, fig3a, fig3b, fig5, fig5-inset")
      ->required();
  repro_flags.attach(repro_cmd);

  CLI::App* goldens_cmd = app.add_subcommand("goldens", "Run the golden-value regression corpus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      qiit::ExperimentConfig cfg = qiit::parse_config_file(config_path);
      run_flags.apply(cfg);
      qiit::run(cfg);
      return 0;
    }
    if (repro_cmd->parsed()) {
      const std::string out = repro_flags.out_dir.value_or("out");
      const qiit::RunRecord record =
          qiit::reproduce(figure_id, out, repro_flags.workers.value_or(1));
      std::cout << "reproduce " << figure_id << " done in " << record.elapsed_seconds << " s\n";
      for (const auto& [key, value] : record.summary)
        std::cout << "  " << key << " = " << qiit::format_double(value) << "\n";
      for (const auto& f : record.emitted_files) std::cout << "  wrote " << f << "\n";
      return 0;
    }
    if (goldens_cmd->parsed()) {
      const qiit::GoldenReport report = qiit::goldens();
      for (const auto& item : report.items)
        std::printf("%-40s expected %-22.17g got %-22.17g delta %-12.3g %s\n",
                    item.name.c_str(), item.expected, item.computed, item.delta,
                    item.pass ? "ok" : "FAIL");
      std::printf("%zu golden values, %d failures\n", report.items.size(), report.failures);
      return report.failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
