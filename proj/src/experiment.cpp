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

#include "hpsim/density_matrix.hpp"
#include "hpsim/dho.hpp"
#include "hpsim/transpile.hpp"
#include "hpsim/trajectory.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hpsim {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return RngStream::derive(seed, (a << 32) | b).next_u64();
}

double parse_double_or(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for '" + key + "': " + value);
    }
}

int parse_int_or(const std::string& value, const std::string& key) {
    const double v = parse_double_or(value, key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("expected integer for '" + key + "': " + value);
    }
    return i;
}

bool parse_bool_or(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigError("expected boolean for '" + key + "': " + value);
}

// Accepts "3", "1,2,5" and "1..7".
std::vector<int> parse_int_list(const std::string& value, const std::string& key) {
    const auto range_pos = value.find("..");
    if (range_pos != std::string::npos) {
        const int lo = parse_int_or(trim(value.substr(0, range_pos)), key);
        const int hi = parse_int_or(trim(value.substr(range_pos + 2)), key);
        if (hi < lo) {
            throw ConfigError("empty range for '" + key + "': " + value);
        }
        std::vector<int> items;
        for (int v = lo; v <= hi; ++v) {
            items.push_back(v);
        }
        return items;
    }
    std::vector<int> items;
    std::stringstream ss(value);
    std::string token;
    while (std::getline(ss, token, ',')) {
        items.push_back(parse_int_or(trim(token), key));
    }
    if (items.empty()) {
        throw ConfigError("empty list for '" + key + "'");
    }
    return items;
}

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& comments,
              const std::vector<std::string>& columns)
        : out_(path) {
        if (!out_) {
            throw std::runtime_error("cannot open output file: " + path);
        }
        for (const auto& c : comments) {
            out_ << "# " << c << "\n";
        }
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        }
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
        }
    }

  private:
    std::ofstream out_;
};

std::string cell(double v) { return format_value(v); }
std::string cell(int v) { return std::to_string(v); }

std::string canonical_config(const ExperimentConfig& c) {
    std::ostringstream ss;
    ss << "experiment=" << experiment_kind_name(c.kind) << ";seed=" << c.seed
       << ";shots=" << c.effective_shots() << ";calibration="
       << c.calibration_path << ";time_points=" << c.grid.points
       << ";periods=" << format_value(c.grid.periods) << ";delta="
       << format_value(c.delta) << ";drive=" << format_value(c.drive)
       << ";qubits=";
    for (int n : c.qubit_counts) {
        ss << n << " ";
    }
    ss << ";max_excitation=" << c.max_excitation << ";omega0="
       << format_value(c.omega0) << ";omegaz=" << format_value(c.omegaz)
       << ";g=" << format_value(c.g) << ";trotter_steps=";
    for (int k : c.trotter_steps) {
        ss << k << " ";
    }
    ss << ";merge=" << c.merge_half_steps << ";layouts=" << c.layout_pool
       << ";synth_time_points=" << c.synth_time_points << ";restarts="
       << c.restarts << ";target_cost=" << format_value(c.target_cost)
       << ";max_iterations=" << c.max_iterations << ";cz_per_block="
       << c.cz_per_block << ";repetitions=";
    for (int r : c.repetitions) {
        ss << r << " ";
    }
    return ss.str();
}

std::vector<std::string> metadata_comments(const ExperimentConfig& c) {
    std::vector<std::string> lines;
    lines.push_back("hpsim " + experiment_kind_name(c.kind));
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(
                      fnv1a_digest(canonical_config(c))));
    lines.push_back(std::string("config_hash=") + hash);
    lines.push_back("seed=" + std::to_string(c.seed));
    std::string calib = "calibration=" + c.calibration_path + " digest=";
    if (c.has_noise()) {
        std::ifstream in(c.calibration_path);
        if (!in) {
            throw std::runtime_error("cannot open calibration file: " +
                                     c.calibration_path);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        char digest[32];
        std::snprintf(digest, sizeof(digest), "%016llx",
                      static_cast<unsigned long long>(fnv1a_digest(buf.str())));
        calib += digest;
    } else {
        calib += "-";
    }
    lines.push_back(calib);
    return lines;
}

std::vector<double> make_time_grid(double t_max, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        grid[static_cast<std::size_t>(j)] =
            t_max * static_cast<double>(j) / static_cast<double>(points - 1);
    }
    return grid;
}

Circuit concatenate(const Circuit& a, const Circuit& b) {
    Circuit out(a.n_qubits);
    out.global_phase = a.global_phase + b.global_phase;
    out.gates = a.gates;
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    return out;
}

double exact_survival(const Circuit& circuit_with_prep) {
    const StateVector psi = simulate(circuit_with_prep);
    return std::norm(psi.amplitudes()[4]);  // cavity 00, tau 1
}

std::vector<SynthLayout> build_pool(const std::string& name) {
    if (name == "six") {
        return {six_cz_layout()};
    }
    if (name == "four") {
        return enumerate_four_cz_layouts();
    }
    if (name == "all") {
        auto pool = enumerate_four_cz_layouts();
        pool.push_back(six_cz_layout());
        return pool;
    }
    throw ConfigError("unknown layout pool '" + name + "' (all|six|four)");
}

}  // namespace

std::uint64_t fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string experiment_kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Dho: return "dho";
        case ExperimentKind::JcTrotter: return "jc-trotter";
        case ExperimentKind::JcSynth: return "jc-synth";
        case ExperimentKind::CzBenchmark: return "cz-benchmark";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
    if (name == "dho") {
        return ExperimentKind::Dho;
    }
    if (name == "jc-trotter") {
        return ExperimentKind::JcTrotter;
    }
    if (name == "jc-synth") {
        return ExperimentKind::JcSynth;
    }
    if (name == "cz-benchmark") {
        return ExperimentKind::CzBenchmark;
    }
    throw ConfigError("unknown experiment kind '" + name + "'");
}

int ExperimentConfig::effective_shots() const {
    if (shots > 0) {
        return shots;
    }
    return kind == ExperimentKind::Dho ? 4096 : 2000;
}

OptimizerSettings ExperimentConfig::optimizer_settings(
    std::uint64_t sub_seed) const {
    OptimizerSettings settings;
    settings.restarts = restarts;
    settings.seed = sub_seed;
    settings.target_cost = target_cost;
    settings.lbfgs.max_iterations = max_iterations;
    return settings;
}

ExperimentConfig default_config(ExperimentKind kind) {
    ExperimentConfig config;
    config.kind = kind;
    return config;
}

void apply_config_override(ExperimentConfig& c, const std::string& key,
                           const std::string& value) {
    if (key == "experiment") {
        c.kind = parse_experiment_kind(value);
    } else if (key == "seed") {
        try {
            std::size_t used = 0;
            c.seed = std::stoull(value, &used);
            if (used != value.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw ConfigError("invalid number for 'seed': " + value);
        }
    } else if (key == "shots") {
        c.shots = parse_int_or(value, key);
        if (c.shots < 1) {
            throw ConfigError("shots must be >= 1");
        }
    } else if (key == "calibration") {
        c.calibration_path = value;
    } else if (key == "out") {
        c.out_dir = value;
    } else if (key == "threads") {
        c.threads = parse_int_or(value, key);
    } else if (key == "time_points") {
        c.grid.points = parse_int_or(value, key);
        if (c.grid.points < 2) {
            throw ConfigError("time_points must be >= 2");
        }
    } else if (key == "periods") {
        c.grid.periods = parse_double_or(value, key);
        if (c.grid.periods <= 0.0) {
            throw ConfigError("periods must be positive");
        }
    } else if (key == "delta") {
        c.delta = parse_double_or(value, key);
    } else if (key == "drive") {
        c.drive = parse_double_or(value, key);
    } else if (key == "qubits") {
        c.qubit_counts = parse_int_list(value, key);
    } else if (key == "max_excitation") {
        c.max_excitation = parse_int_or(value, key);
        if (c.max_excitation < 0) {
            throw ConfigError("max_excitation must be >= 0");
        }
    } else if (key == "omega0") {
        c.omega0 = parse_double_or(value, key);
    } else if (key == "omegaz") {
        c.omegaz = parse_double_or(value, key);
    } else if (key == "g") {
        c.g = parse_double_or(value, key);
    } else if (key == "trotter_steps") {
        c.trotter_steps = parse_int_list(value, key);
    } else if (key == "merge_half_steps") {
        c.merge_half_steps = parse_bool_or(value, key);
    } else if (key == "layouts") {
        c.layout_pool = value;
    } else if (key == "synth_time_points") {
        c.synth_time_points = parse_int_or(value, key);
        if (c.synth_time_points < 2) {
            throw ConfigError("synth_time_points must be >= 2");
        }
    } else if (key == "restarts") {
        c.restarts = parse_int_or(value, key);
        if (c.restarts < 1) {
            throw ConfigError("restarts must be >= 1");
        }
    } else if (key == "target_cost") {
        c.target_cost = parse_double_or(value, key);
    } else if (key == "max_iterations") {
        c.max_iterations = parse_int_or(value, key);
    } else if (key == "cz_per_block") {
        c.cz_per_block = parse_int_or(value, key);
    } else if (key == "repetitions") {
        c.repetitions = parse_int_list(value, key);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin) {
    ExperimentConfig config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_experiment = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            apply_config_override(config, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": " +
                              e.what());
        }
        saw_experiment = saw_experiment || key == "experiment";
    }
    if (!saw_experiment) {
        throw ConfigError(origin + ": missing 'experiment' key");
    }
    return config;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

namespace {

ExperimentOutputs run_dho(const ExperimentConfig& config) {
    ExperimentOutputs outputs;
    const int shots = config.effective_shots();
    CalibrationTable full_table;
    if (config.has_noise()) {
        full_table = CalibrationTable::load(config.calibration_path);
    }

    CsvWriter summary(config.out_dir + "/dho_summary.csv",
                      metadata_comments(config),
                      {"qubits", "n", "delta_p_e", "delta_p_tot", "delta_p_a",
                       "delta_p_alg"});
    outputs.files.push_back(config.out_dir + "/dho_summary.csv");

    for (std::size_t ni = 0; ni < config.qubit_counts.size(); ++ni) {
        const int n_qubits = config.qubit_counts[ni];
        const DhoParams params{config.delta, config.drive, n_qubits};
        const auto grid =
            make_time_grid(config.grid.periods * params.period(),
                           config.grid.points);

        CalibrationTable table;
        std::vector<std::string> comments = metadata_comments(config);
        if (config.has_noise()) {
            table = full_table.select_best_readout(n_qubits);
            std::string physical = "physical_qubits=";
            for (int q = 0; q < table.size(); ++q) {
                physical += (q ? "," : "") + std::to_string(table.qubit(q).index);
            }
            comments.push_back(physical);
        }

        const std::string path =
            config.out_dir + "/dho_n" + std::to_string(n_qubits) + ".csv";
        CsvWriter writer(path, comments,
                         {"t", "n", "p_boson", "p_ideal", "p_noisy"});
        outputs.files.push_back(path);

        const int n_max = std::min(config.max_excitation, n_qubits);
        std::vector<ProbabilitySeries> boson(static_cast<std::size_t>(n_max + 1));
        std::vector<ProbabilitySeries> ideal(static_cast<std::size_t>(n_max + 1));
        std::vector<ProbabilitySeries> noisy(static_cast<std::size_t>(n_max + 1));

        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double t = grid[j];
            const Circuit circuit = build_dho_circuit(params, t);
            CountsHistogram counts;
            const std::uint64_t sub =
                derive_seed(config.seed, static_cast<std::uint64_t>(n_qubits), j);
            if (config.has_noise()) {
                counts = run_noisy(circuit, table, shots, sub, config.threads);
            } else {
                counts = sample_counts(simulate(circuit), shots, sub);
            }
            const auto histogram = excitation_histogram(counts);
            for (int n = 0; n <= n_max; ++n) {
                const double p_b = fock_probability(params, t, n);
                const double p_c = binomial_fock_probability(params, t, n);
                const auto it = histogram.find(n);
                const double p_q = it == histogram.end() ? 0.0 : it->second;
                boson[static_cast<std::size_t>(n)].append(t, p_b);
                ideal[static_cast<std::size_t>(n)].append(t, p_c);
                noisy[static_cast<std::size_t>(n)].append(t, p_q);
                writer.row({cell(t), cell(n), cell(p_b), cell(p_c), cell(p_q)});
            }
        }
        for (int n = 0; n <= n_max; ++n) {
            const auto& b = boson[static_cast<std::size_t>(n)];
            const auto& c = ideal[static_cast<std::size_t>(n)];
            const auto& q = noisy[static_cast<std::size_t>(n)];
            const ErrorSummary s = make_error_summary(b, c, q);
            summary.row({cell(n_qubits), cell(n), cell(s.delta_p_e),
                         cell(s.delta_p_tot), cell(s.delta_p_a),
                         cell(mean_abs_difference(b, c))});
        }
    }
    return outputs;
}

ExperimentOutputs run_jc_trotter(const ExperimentConfig& config) {
    ExperimentOutputs outputs;
    const int shots = config.effective_shots();
    const JcParams params{config.omega0, config.omegaz, config.g, 2};
    const auto grid =
        make_time_grid(config.grid.periods * params.period(), config.grid.points);

    CalibrationTable table;
    if (config.has_noise()) {
        table = CalibrationTable::load(config.calibration_path);
    }

    CsvWriter summary(config.out_dir + "/jc_trotter_summary.csv",
                      metadata_comments(config),
                      {"trotter_steps", "cz_count", "delta_p_e", "delta_p_tot",
                       "delta_p_a"});
    outputs.files.push_back(config.out_dir + "/jc_trotter_summary.csv");

    const Circuit prep = prepare_up_circuit(2);
    for (std::size_t ki = 0; ki < config.trotter_steps.size(); ++ki) {
        const int steps = config.trotter_steps[ki];
        const TrotterPlan plan{steps, config.merge_half_steps};

        const std::string path = config.out_dir + "/jc_trotter_k" +
                                 std::to_string(steps) + ".csv";
        CsvWriter writer(path, metadata_comments(config),
                         {"t", "p_exact", "p_ideal", "p_noisy"});
        outputs.files.push_back(path);

        ProbabilitySeries exact, ideal, noisy;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double t = grid[j];
            const Circuit evolution = build_trotter_circuit(params, t, plan);
            const Circuit full = concatenate(prep, evolution);
            const double p_exact = rabi_probability(params, t);
            const double p_ideal = exact_survival(full);
            const std::uint64_t sub =
                derive_seed(config.seed, static_cast<std::uint64_t>(steps), j);
            double p_noisy;
            if (config.has_noise()) {
                const CountsHistogram counts = run_noisy(
                    transpile_to_native(full), table, shots, sub, config.threads);
                p_noisy = survival_probability(counts);
            } else {
                const CountsHistogram counts =
                    sample_counts(simulate(full), shots, sub);
                p_noisy = survival_probability(counts);
            }
            exact.append(t, p_exact);
            ideal.append(t, p_ideal);
            noisy.append(t, p_noisy);
            writer.row({cell(t), cell(p_exact), cell(p_ideal), cell(p_noisy)});
        }
        const ErrorSummary s = make_error_summary(exact, ideal, noisy);
        summary.row({cell(steps), cell(trotter_cz_count(plan)), cell(s.delta_p_e),
                     cell(s.delta_p_tot), cell(s.delta_p_a)});
    }
    return outputs;
}

ExperimentOutputs run_jc_synth(const ExperimentConfig& config) {
    ExperimentOutputs outputs;
    const int shots = config.effective_shots();
    const JcParams params{config.omega0, config.omegaz, config.g, 2};
    const auto grid = make_time_grid(config.grid.periods * params.period(),
                                     config.synth_time_points);
    const auto pool = build_pool(config.layout_pool);

    CalibrationTable table;
    if (config.has_noise()) {
        table = CalibrationTable::load(config.calibration_path);
    }
    const Circuit prep = prepare_up_circuit(2);

    struct PointResult {
        SynthResult synth;
        double p_exact, p_ideal, p_noisy;
    };
    std::vector<std::vector<PointResult>> results(pool.size());

    for (std::size_t li = 0; li < pool.size(); ++li) {
        const std::string path =
            config.out_dir + "/jc_synth_" + pool[li].label + ".csv";
        CsvWriter writer(path, metadata_comments(config),
                         {"t", "fidelity", "cost", "p_exact", "p_ideal",
                          "p_noisy"});
        outputs.files.push_back(path);

        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double t = grid[j];
            const Matrix target =
                matrix_exponential(build_jc_hamiltonian(params, true), t);
            const OptimizerSettings settings =
                config.optimizer_settings(derive_seed(config.seed, li, j));
            PointResult point;
            point.synth = optimize_layout(pool[li], target, settings);
            const Circuit circuit =
                concatenate(prep, layout_circuit(pool[li], point.synth.angles));
            point.p_exact = rabi_probability(params, t);
            point.p_ideal = exact_survival(circuit);
            const std::uint64_t sub = derive_seed(config.seed, 100 + li, j);
            if (config.has_noise()) {
                const CountsHistogram counts =
                    run_noisy(transpile_to_native(circuit), table, shots, sub,
                              config.threads);
                point.p_noisy = survival_probability(counts);
            } else {
                const CountsHistogram counts =
                    sample_counts(simulate(circuit), shots, sub);
                point.p_noisy = survival_probability(counts);
            }
            writer.row({cell(t), cell(point.synth.fidelity),
                        cell(point.synth.cost), cell(point.p_exact),
                        cell(point.p_ideal), cell(point.p_noisy)});
            results[li].push_back(std::move(point));
        }
    }

    const std::string best_path = config.out_dir + "/jc_synth_best.csv";
    CsvWriter best(best_path, metadata_comments(config),
                   {"t", "layout", "fidelity", "p_exact", "p_ideal", "p_noisy"});
    outputs.files.push_back(best_path);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        std::size_t winner = 0;
        for (std::size_t li = 1; li < pool.size(); ++li) {
            const double f = results[li][j].synth.fidelity;
            const double fw = results[winner][j].synth.fidelity;
            constexpr double kTie = 1e-12;
            if (f > fw + kTie ||
                (std::abs(f - fw) <= kTie &&
                 pool[li].cz_count() < pool[winner].cz_count())) {
                winner = li;
            }
        }
        const PointResult& p = results[winner][j];
        best.row({cell(grid[j]), pool[winner].label, cell(p.synth.fidelity),
                  cell(p.p_exact), cell(p.p_ideal), cell(p.p_noisy)});
    }
    return outputs;
}

ExperimentOutputs run_cz_benchmark(const ExperimentConfig& config) {
    ExperimentOutputs outputs;
    const int shots = config.effective_shots();

    CalibrationTable table = config.has_noise()
                                 ? CalibrationTable::load(config.calibration_path)
                                 : CalibrationTable::zero_noise(3);

    const std::string path = config.out_dir + "/cz_benchmark.csv";
    CsvWriter writer(path, metadata_comments(config),
                     {"repetitions", "cz_total", "survival_ideal",
                      "survival_noisy", "survival_exact_noisy", "delta_p_e"});
    outputs.files.push_back(path);

    const Circuit prep = prepare_up_circuit(2);
    std::vector<double> xs, ys;
    for (std::size_t ri = 0; ri < config.repetitions.size(); ++ri) {
        const int reps = config.repetitions[ri];
        const Circuit full = concatenate(
            prep, build_cz_benchmark_circuit(config.cz_per_block, reps));
        const double ideal = exact_survival(full);
        const std::uint64_t sub =
            derive_seed(config.seed, static_cast<std::uint64_t>(reps), 0);
        const CountsHistogram counts =
            run_noisy(full, table, shots, sub, config.threads);
        const double noisy_mc = survival_probability(counts);
        const std::vector<double> probs = density_matrix_reference(full, table);
        const double noisy_exact = probs[4];
        const double dpe = std::abs(ideal - noisy_exact);
        writer.row({cell(reps), cell(reps * config.cz_per_block), cell(ideal),
                    cell(noisy_mc), cell(noisy_exact), cell(dpe)});
        xs.push_back(static_cast<double>(reps));
        ys.push_back(dpe);
    }

    const std::string fit_path = config.out_dir + "/cz_benchmark_fit.csv";
    CsvWriter fit_writer(fit_path, metadata_comments(config),
                         {"slope", "intercept", "correlation"});
    outputs.files.push_back(fit_path);
    if (xs.size() >= 2) {
        const LinearFit fit = fit_line(xs, ys);
        fit_writer.row({cell(fit.slope), cell(fit.intercept),
                        cell(fit.correlation)});
    }
    return outputs;
}

}  // namespace

ExperimentOutputs run_experiment(const ExperimentConfig& config) {
    std::filesystem::create_directories(config.out_dir);
    switch (config.kind) {
        case ExperimentKind::Dho:
            return run_dho(config);
        case ExperimentKind::JcTrotter:
            return run_jc_trotter(config);
        case ExperimentKind::JcSynth:
            return run_jc_synth(config);
        case ExperimentKind::CzBenchmark:
            return run_cz_benchmark(config);
    }
    throw std::logic_error("unreachable");
}

ProbabilitySeries read_series_csv(const std::string& path,
                                  const std::string& column) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open CSV: " + path);
    }
    std::string line;
    std::vector<std::string> header;
    int value_index = -1;
    ProbabilitySeries series;
    series.label = column;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(stripped);
        std::string token;
        while (std::getline(ss, token, ',')) {
            fields.push_back(trim(token));
        }
        if (header.empty()) {
            header = fields;
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (header[i] == column) {
                    value_index = static_cast<int>(i);
                }
            }
            if (value_index < 0) {
                throw std::runtime_error("column '" + column + "' not in " + path);
            }
            continue;
        }
        if (fields.size() != header.size()) {
            throw std::runtime_error("ragged CSV row in " + path);
        }
        series.points.emplace_back(
            std::stod(fields[0]),
            std::stod(fields[static_cast<std::size_t>(value_index)]));
    }
    if (series.points.empty()) {
        throw std::runtime_error("no data rows in " + path);
    }
    return series;
}

std::string write_plot_script(ExperimentKind kind, const std::string& data_dir,
                              const std::string& output_path) {
    std::ofstream out(output_path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + output_path);
    }
    out << "# gnuplot script generated by hpsim\n";
    out << "set datafile separator ','\n";
    out << "set datafile commentschars '#'\n";
    out << "set key outside\n";
    out << "set xlabel 't'\n";
    out << "set ylabel 'probability'\n";
    switch (kind) {
        case ExperimentKind::Dho:
            out << "# occupation probabilities per excitation number; pick a"
                   " qubit-count file\n";
            out << "plot '" << data_dir
                << "/dho_n6.csv' using 1:($2==0?$3:1/0) with lines title"
                   " 'boson n=0', \\\n";
            out << "     '' using 1:($2==0?$4:1/0) with points title 'ideal"
                   " n=0', \\\n";
            out << "     '' using 1:($2==0?$5:1/0) with points title 'noisy"
                   " n=0'\n";
            break;
        case ExperimentKind::JcTrotter:
            out << "plot '" << data_dir
                << "/jc_trotter_k1.csv' using 1:2 with lines title 'exact', \\\n";
            out << "     '' using 1:3 with linespoints title 'ideal k=1', \\\n";
            out << "     '' using 1:4 with points title 'noisy k=1'\n";
            break;
        case ExperimentKind::JcSynth:
            out << "plot '" << data_dir
                << "/jc_synth_six-cz.csv' using 1:4 with lines title 'exact',"
                   " \\\n";
            out << "     '' using 1:5 with linespoints title 'ideal', \\\n";
            out << "     '' using 1:6 with points title 'noisy'\n";
            break;
        case ExperimentKind::CzBenchmark:
            out << "set xlabel 'repetitions'\n";
            out << "plot '" << data_dir
                << "/cz_benchmark.csv' using 1:6 with linespoints title"
                   " 'delta_p_e'\n";
            break;
    }
    return output_path;
}

}  // namespace hpsim
