// Copyright 2026 The hpsim Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "hpsim/metrics.hpp"
#include "hpsim/optimize.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpsim {

enum class ExperimentKind { Dho, JcTrotter, JcSynth, CzBenchmark };

std::string experiment_kind_name(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

/// Uniform grid of `points` samples over [0, periods * T0].
struct TimeGrid {
    int points = 21;
    double periods = 2.0;
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Dho;
    std::uint64_t seed = 1;
    int shots = 0;  // 0 = kind default (4096 oscillator, 2000 JC)
    std::string calibration_path = "none";
    std::string out_dir = "out";
    int threads = 0;
    TimeGrid grid;

    // oscillator
    double delta = 1.0;
    double drive = 0.75;
    std::vector<int> qubit_counts = {6};
    int max_excitation = 2;

    // JC
    double omega0 = 1.0;
    double omegaz = 1.0;
    double g = 0.1;
    std::vector<int> trotter_steps = {1, 2, 3, 4, 5, 6, 7};
    bool merge_half_steps = true;

    // synthesized-unitary runs
    std::string layout_pool = "all";  // all | six | four
    int synth_time_points = 11;
    int restarts = 20;
    double target_cost = 1e-10;
    int max_iterations = 2000;

    // CZ benchmark
    int cz_per_block = 6;
    std::vector<int> repetitions = {1, 2, 3, 4, 5, 6, 7};

    int effective_shots() const;
    bool has_noise() const { return calibration_path != "none"; }
    OptimizerSettings optimizer_settings(std::uint64_t sub_seed) const;
};

ExperimentConfig default_config(ExperimentKind kind);
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin = "<string>");

/// Apply one key=value override (same keys as the config file).
void apply_config_override(ExperimentConfig& config, const std::string& key,
                           const std::string& value);

struct ExperimentOutputs {
    std::vector<std::string> files;
};

/// Run the configured experiment and emit its CSV files under out_dir.
/// Deterministic: identical config plus seed gives byte-identical files.
ExperimentOutputs run_experiment(const ExperimentConfig& config);

/// Read one value column of an emitted CSV back as a series ("t" is the
/// time column).
ProbabilitySeries read_series_csv(const std::string& path,
                                  const std::string& column);

/// Emit a gnuplot script referencing the CSVs of a finished experiment.
std::string write_plot_script(ExperimentKind kind, const std::string& data_dir,
                              const std::string& output_path);

/// FNV-1a digest used in output headers.
std::uint64_t fnv1a_digest(const std::string& bytes);

}  // namespace hpsim
