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
#include "hpsim/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

struct CommonFlags {
    std::string config_path;
    std::string seed;
    std::string shots;
    std::string calibration;
    std::string out;
    std::string threads;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "experiment config file");
    cmd->add_option("--seed", flags.seed, "master seed (overrides config)");
    cmd->add_option("--shots", flags.shots, "shot count (overrides config)");
    cmd->add_option("--calibration", flags.calibration,
                    "calibration CSV or 'none' (overrides config)");
    cmd->add_option("--out", flags.out, "output directory (overrides config)");
    cmd->add_option("--threads", flags.threads,
                    "trajectory worker threads, 0 = auto");
}

hpsim::ExperimentConfig build_config(hpsim::ExperimentKind kind,
                                     const CommonFlags& flags) {
    hpsim::ExperimentConfig config = flags.config_path.empty()
                                         ? hpsim::default_config(kind)
                                         : hpsim::parse_config(flags.config_path);
    config.kind = kind;
    if (!flags.seed.empty()) {
        hpsim::apply_config_override(config, "seed", flags.seed);
    }
    if (!flags.shots.empty()) {
        hpsim::apply_config_override(config, "shots", flags.shots);
    }
    if (!flags.calibration.empty()) {
        hpsim::apply_config_override(config, "calibration", flags.calibration);
    }
    if (!flags.out.empty()) {
        hpsim::apply_config_override(config, "out", flags.out);
    }
    if (!flags.threads.empty()) {
        hpsim::apply_config_override(config, "threads", flags.threads);
    }
    return config;
}

int run_kind(hpsim::ExperimentKind kind, const CommonFlags& flags) {
    const hpsim::ExperimentConfig config = build_config(kind, flags);
    const hpsim::ExperimentOutputs outputs = hpsim::run_experiment(config);
    for (const auto& file : outputs.files) {
        std::cout << file << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubit-ensemble simulation of driven-oscillator and"
                 " Jaynes-Cummings dynamics"};
    app.require_subcommand(1);

    CommonFlags dho_flags, trotter_flags, synth_flags, bench_flags;
    auto* dho = app.add_subcommand("dho", "driven harmonic oscillator run");
    add_common_flags(dho, dho_flags);
    auto* trotter =
        app.add_subcommand("jc-trotter", "JC product-formula sweep");
    add_common_flags(trotter, trotter_flags);
    auto* synth =
        app.add_subcommand("jc-synth", "JC synthesized-unitary sweep");
    add_common_flags(synth, synth_flags);
    auto* bench =
        app.add_subcommand("cz-benchmark", "CZ-only benchmarking circuits");
    add_common_flags(bench, bench_flags);

    std::string metrics_a, metrics_b, column_a = "", column_b = "";
    auto* metrics = app.add_subcommand(
        "metrics", "averaged |difference| between two CSV series");
    metrics->add_option("a", metrics_a, "first CSV")->required();
    metrics->add_option("b", metrics_b, "second CSV")->required();
    metrics->add_option("--column-a", column_a, "value column in the first CSV")
        ->required();
    metrics->add_option("--column-b", column_b,
                        "value column in the second CSV (defaults to"
                        " --column-a)");

    std::string plot_kind = "dho", plot_data = "out", plot_out = "plot.gp";
    auto* plot = app.add_subcommand("plot-script",
                                    "emit a gnuplot script for emitted CSVs");
    plot->add_option("--kind", plot_kind,
                     "dho | jc-trotter | jc-synth | cz-benchmark");
    plot->add_option("--data", plot_data, "experiment output directory");
    plot->add_option("--out", plot_out, "script path to write");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dho->parsed()) {
            return run_kind(hpsim::ExperimentKind::Dho, dho_flags);
        }
        if (trotter->parsed()) {
            return run_kind(hpsim::ExperimentKind::JcTrotter, trotter_flags);
        }
        if (synth->parsed()) {
            return run_kind(hpsim::ExperimentKind::JcSynth, synth_flags);
        }
        if (bench->parsed()) {
            return run_kind(hpsim::ExperimentKind::CzBenchmark, bench_flags);
        }
        if (metrics->parsed()) {
            if (column_b.empty()) {
                column_b = column_a;
            }
            const auto a = hpsim::read_series_csv(metrics_a, column_a);
            const auto b = hpsim::read_series_csv(metrics_b, column_b);
            std::cout << hpsim::mean_abs_difference(a, b) << "\n";
            return kExitOk;
        }
        if (plot->parsed()) {
            const auto kind = hpsim::parse_experiment_kind(plot_kind);
            std::cout << hpsim::write_plot_script(kind, plot_data, plot_out)
                      << "\n";
            return kExitOk;
        }
    } catch (const hpsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitOk;
}
