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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpsim/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hpsim;

namespace {

ProbabilitySeries series_of(std::initializer_list<double> values) {
    ProbabilitySeries s;
    double t = 0.0;
    for (double v : values) {
        s.append(t, v);
        t += 1.0;
    }
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("averaged probability differences") {
    const auto a = series_of({0.1, 0.5, 0.9});
    CHECK(delta_p_e(a, a) == 0.0);
    const auto b = series_of({0.2, 0.6, 1.0});
    CHECK(delta_p_e(a, b) == doctest::Approx(0.1).epsilon(1e-12));
    SUBCASE("symmetry") {
        CHECK(delta_p_e(a, b) == delta_p_e(b, a));
        CHECK(delta_p_tot(a, b) == delta_p_tot(b, a));
    }
    SUBCASE("triangle inequality through an intermediate series") {
        const auto c = series_of({0.15, 0.4, 0.95});
        CHECK(delta_p_tot(a, b) <=
              mean_abs_difference(a, c) + delta_p_e(c, b) + 1e-15);
    }
    SUBCASE("grid mismatch is rejected") {
        ProbabilitySeries shifted;
        shifted.append(0.5, 0.1);
        shifted.append(1.5, 0.2);
        shifted.append(2.5, 0.3);
        CHECK_THROWS_AS(delta_p_e(a, shifted), std::invalid_argument);
        CHECK_THROWS_AS(delta_p_e(a, series_of({0.1})), std::invalid_argument);
    }
}

TEST_CASE("error summary uses the subtractive algorithmic part") {
    const auto exact = series_of({0.0, 0.0, 0.0});
    const auto ideal = series_of({0.1, 0.1, 0.1});
    const auto noisy = series_of({0.3, 0.3, 0.3});
    const ErrorSummary s = make_error_summary(exact, ideal, noisy);
    CHECK(s.delta_p_e == doctest::Approx(0.2));
    CHECK(s.delta_p_tot == doctest::Approx(0.3));
    CHECK(s.delta_p_a == doctest::Approx(0.1));
    CHECK(s.sample_count == 3);
}

TEST_CASE("series validation") {
    ProbabilitySeries s;
    s.append(0.0, 0.5);
    CHECK_THROWS_AS(s.append(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(s.append(1.0, 1.5), std::invalid_argument);
}

TEST_CASE("least-squares fit") {
    const LinearFit fit = fit_line({1, 2, 3, 4}, {2.1, 4.0, 5.9, 8.2});
    CHECK(fit.slope == doctest::Approx(2.02).epsilon(0.05));
    CHECK(fit.correlation > 0.99);
}

TEST_CASE("config parsing applies documented defaults") {
    const ExperimentConfig dho = parse_config_text("experiment = dho\n");
    CHECK(dho.effective_shots() == 4096);
    CHECK(dho.grid.points == 21);
    CHECK(dho.grid.periods == doctest::Approx(2.0));
    const ExperimentConfig jc = parse_config_text("experiment = jc-trotter\n");
    CHECK(jc.effective_shots() == 2000);
    const ExperimentConfig synth = parse_config_text("experiment = jc-synth\n");
    CHECK(synth.effective_shots() == 2000);
    CHECK(synth.synth_time_points == 11);
    CHECK(synth.restarts == 20);
}

TEST_CASE("config diagnostics carry the line number") {
    CHECK_THROWS_WITH_AS(parse_config_text("experiment = dho\nbogus = 1\n", "c"),
                         doctest::Contains("c:2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("experiment = warp-drive\n", "c"),
                         doctest::Contains("unknown experiment kind"),
                         ConfigError);
    CHECK_THROWS_AS(parse_config_text("shots = 100\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("experiment = dho\nshots = zero\n"),
                    ConfigError);
}

TEST_CASE("integer lists accept commas and ranges") {
    ExperimentConfig c = parse_config_text(
        "experiment = jc-trotter\ntrotter_steps = 1..4\nqubits = 3,6,11\n");
    CHECK(c.trotter_steps == std::vector<int>({1, 2, 3, 4}));
    CHECK(c.qubit_counts == std::vector<int>({3, 6, 11}));
}

TEST_CASE("noiseless oscillator run: sampled column tracks the ideal one") {
    const auto dir = temp_dir("hpsim_test_dho");
    ExperimentConfig config = parse_config_text(
        "experiment = dho\nqubits = 3\ntime_points = 9\nshots = 4096\n"
        "seed = 7\ncalibration = none\n");
    config.out_dir = dir.string();
    run_experiment(config);

    const auto ideal = read_series_csv(dir / "dho_n3.csv", "p_ideal");
    const auto noisy = read_series_csv(dir / "dho_n3.csv", "p_noisy");
    REQUIRE(ideal.size() == noisy.size());
    for (std::size_t j = 0; j < ideal.size(); ++j) {
        const double p = ideal.points[j].second;
        const double sigma = std::sqrt(std::max(p * (1 - p) / 4096.0, 1e-12));
        CHECK(std::abs(noisy.points[j].second - p) <= 5 * sigma + 1e-9);
    }
}

TEST_CASE("runs are byte-identical for a fixed seed") {
    const auto dir_a = temp_dir("hpsim_det_a");
    const auto dir_b = temp_dir("hpsim_det_b");
    const std::string base =
        "experiment = cz-benchmark\nrepetitions = 1..3\nshots = 500\nseed = 5\n"
        "calibration = " +
        std::string(HPSIM_SOURCE_DIR) +
        "/data/calibration/jc_trotter_backend.csv\n";
    ExperimentConfig a = parse_config_text(base);
    a.out_dir = dir_a.string();
    a.threads = 1;
    ExperimentConfig b = parse_config_text(base);
    b.out_dir = dir_b.string();
    b.threads = 4;  // worker count must not change any byte
    run_experiment(a);
    run_experiment(b);
    CHECK(slurp(dir_a / "cz_benchmark.csv") == slurp(dir_b / "cz_benchmark.csv"));
    CHECK(slurp(dir_a / "cz_benchmark_fit.csv") ==
          slurp(dir_b / "cz_benchmark_fit.csv"));
}

TEST_CASE("emitted CSVs re-parse to the printed precision") {
    const auto dir = temp_dir("hpsim_roundtrip");
    ExperimentConfig config = parse_config_text(
        "experiment = jc-trotter\ntrotter_steps = 2\ntime_points = 7\n"
        "shots = 300\nseed = 3\ncalibration = none\n");
    config.out_dir = dir.string();
    run_experiment(config);

    const std::string path = (dir / "jc_trotter_k2.csv").string();
    const auto parsed = read_series_csv(path, "p_ideal");
    // Every parsed value, re-rendered at 12 significant digits, must equal
    // the text in the file.
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> cells;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') {
            continue;
        }
        std::stringstream ss(line);
        std::string token;
        std::vector<std::string> fields;
        while (std::getline(ss, token, ',')) {
            fields.push_back(token);
        }
        cells.push_back(fields[2]);  // p_ideal column
    }
    REQUIRE(cells.size() == parsed.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", parsed.points[j].second);
        CHECK(cells[j] == buf);
    }
}

TEST_CASE("synthesized-unitary run emits per-layout and best files") {
    const auto dir = temp_dir("hpsim_synth");
    // synth_time_points = 3 puts one sample exactly at a full period, the
    // hardest target in the sweep; give the multistart a realistic budget.
    ExperimentConfig config = parse_config_text(
        "experiment = jc-synth\nlayouts = six\nsynth_time_points = 3\n"
        "restarts = 30\nshots = 200\nseed = 2\ncalibration = none\n");
    config.out_dir = dir.string();
    const ExperimentOutputs outputs = run_experiment(config);
    CHECK(outputs.files.size() == 2);
    const auto fidelity = read_series_csv(dir / "jc_synth_six-cz.csv", "fidelity");
    for (const auto& [t, f] : fidelity.points) {
        (void)t;
        CHECK(f > 1.0 - 1e-5);
    }
    CHECK(std::filesystem::exists(dir / "jc_synth_best.csv"));
}

TEST_CASE("reading a missing column fails clearly") {
    const auto dir = temp_dir("hpsim_missing");
    ExperimentConfig config = parse_config_text(
        "experiment = cz-benchmark\nrepetitions = 1\nshots = 100\nseed = 1\n"
        "calibration = none\n");
    config.out_dir = dir.string();
    run_experiment(config);
    CHECK_THROWS_WITH_AS(
        read_series_csv((dir / "cz_benchmark.csv").string(), "nope"),
        doctest::Contains("column"), std::runtime_error);
}

TEST_CASE("plot scripts reference the experiment data") {
    const auto dir = temp_dir("hpsim_plot");
    const std::string path = (dir / "plot.gp").string();
    write_plot_script(ExperimentKind::CzBenchmark, "out/cz", path);
    const std::string text = slurp(path);
    CHECK(text.find("cz_benchmark.csv") != std::string::npos);
    CHECK(text.find("plot") != std::string::npos);
}

TEST_CASE("config digest is stable") {
    CHECK(fnv1a_digest("") == 1469598103934665603ULL);
    CHECK(fnv1a_digest("a") != fnv1a_digest("b"));
}
