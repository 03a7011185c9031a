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
#include "hpsim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hpsim {

namespace {

// Pauli application helpers on a small local state.
void apply_pauli(StateVector& state, int pauli, int q) {
    switch (pauli) {
        case 1:
            state.apply_matrix_1q(q, pauli_x());
            break;
        case 2:
            state.apply_matrix_1q(q, pauli_y());
            break;
        case 3:
            state.apply_matrix_1q(q, pauli_z());
            break;
        default:
            break;
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        parent[static_cast<std::size_t>(find(a))] = find(b);
    }
};

}  // namespace

NoisyExecutionPlan::NoisyExecutionPlan(const Circuit& circuit,
                                       const CalibrationTable& table)
    : n_qubits_(circuit.n_qubits) {
    if (!circuit.is_native()) {
        throw std::invalid_argument(
            "noisy execution requires a native-gate circuit (transpile first)");
    }
    if (table.size() < circuit.n_qubits) {
        throw std::out_of_range("calibration table has fewer rows than qubits");
    }

    // Two-qubit gates merge qubits into one simulation component; everything
    // else stays a single-qubit component, which keeps product circuits
    // (such as the oscillator ensembles) linear in qubit count.
    UnionFind uf(circuit.n_qubits);
    for (const auto& g : circuit.gates) {
        if (g.arity == 2) {
            uf.unite(g.qubits[0], g.qubits[1]);
        }
    }
    std::vector<int> root_to_component(static_cast<std::size_t>(circuit.n_qubits), -1);
    std::vector<int> local_index(static_cast<std::size_t>(circuit.n_qubits), -1);
    for (int q = 0; q < circuit.n_qubits; ++q) {
        const int root = uf.find(q);
        if (root_to_component[static_cast<std::size_t>(root)] < 0) {
            root_to_component[static_cast<std::size_t>(root)] =
                static_cast<int>(components_.size());
            components_.emplace_back();
        }
        auto& comp = components_[static_cast<std::size_t>(
            root_to_component[static_cast<std::size_t>(root)])];
        local_index[static_cast<std::size_t>(q)] =
            static_cast<int>(comp.qubits.size());
        comp.qubits.push_back(q);
    }

    const auto to_local = [&](int q) {
        return local_index[static_cast<std::size_t>(q)];
    };
    for (const auto& g : circuit.gates) {
        auto& comp = components_[static_cast<std::size_t>(
            root_to_component[static_cast<std::size_t>(uf.find(g.qubits[0]))])];
        Step step;
        step.gate = g;
        step.gate.qubits[0] = to_local(g.qubits[0]);
        if (g.arity == 2) {
            step.gate.qubits[1] = to_local(g.qubits[1]);
        }
        for (const auto& ch : gate_error_channels(g, table)) {
            LocalChannel local{ch.kind, ch.parameter, ch.qubits, ch.arity};
            local.qubits[0] = to_local(ch.qubits[0]);
            if (ch.arity == 2) {
                local.qubits[1] = to_local(ch.qubits[1]);
            }
            step.channels.push_back(local);
        }
        comp.steps.push_back(std::move(step));
    }

    readout_error_.reserve(static_cast<std::size_t>(circuit.n_qubits));
    for (int q = 0; q < circuit.n_qubits; ++q) {
        readout_error_.push_back(table.qubit(q).readout_error);
    }
}

void NoisyExecutionPlan::apply_channel(StateVector& state,
                                       const LocalChannel& channel,
                                       RngStream& rng) const {
    switch (channel.kind) {
        case NoiseChannel::Kind::Depolarizing1Q: {
            if (rng.next_double() < channel.parameter) {
                const int pauli = 1 + static_cast<int>(rng.next_below(3));
                apply_pauli(state, pauli, channel.qubits[0]);
            }
            break;
        }
        case NoiseChannel::Kind::Depolarizing2Q: {
            if (rng.next_double() < channel.parameter) {
                // Uniform over the 15 non-identity Pauli pairs; index
                // k+1 = 4*a + b with a on qubits[1] and b on qubits[0],
                // matching the Kraus enumeration.
                const int k = 1 + static_cast<int>(rng.next_below(15));
                apply_pauli(state, k / 4, channel.qubits[1]);
                apply_pauli(state, k % 4, channel.qubits[0]);
            }
            break;
        }
        case NoiseChannel::Kind::AmplitudeDamping: {
            const int q = channel.qubits[0];
            const double excited = state.excited_population(q);
            const double jump_probability = channel.parameter * excited;
            if (rng.next_double() < jump_probability) {
                // K1 ~ |0><1|: move the excited component to ground.
                Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
                k1(0, 1) = 1.0;
                state.apply_matrix_1q(q, k1);
            } else {
                Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
                k0(0, 0) = 1.0;
                k0(1, 1) = std::sqrt(1.0 - channel.parameter);
                state.apply_matrix_1q(q, k0);
            }
            const double norm = state.norm_squared();
            if (norm <= 0.0) {
                throw std::runtime_error("trajectory collapsed to zero norm");
            }
            state.scale(1.0 / std::sqrt(norm));
            break;
        }
        case NoiseChannel::Kind::Dephasing: {
            if (rng.next_double() < channel.parameter) {
                apply_pauli(state, 3, channel.qubits[0]);
            }
            break;
        }
        case NoiseChannel::Kind::ReadoutFlip:
            throw std::logic_error("readout handled at measurement");
    }
}

std::string NoisyExecutionPlan::sample(RngStream& rng) const {
    std::vector<char> bits(static_cast<std::size_t>(n_qubits_), '0');
    for (const auto& comp : components_) {
        StateVector state(static_cast<int>(comp.qubits.size()));
        for (const auto& step : comp.steps) {
            state.apply(step.gate);
            for (const auto& channel : step.channels) {
                apply_channel(state, channel, rng);
            }
        }
        // Born sample of the component outcome.
        const std::vector<double> probs = state.probabilities();
        double u = rng.next_double() * std::accumulate(probs.begin(), probs.end(), 0.0);
        std::uint64_t outcome = probs.size() - 1;
        for (std::uint64_t i = 0; i < probs.size(); ++i) {
            u -= probs[i];
            if (u < 0.0) {
                outcome = i;
                break;
            }
        }
        for (std::size_t local = 0; local < comp.qubits.size(); ++local) {
            if ((outcome >> local) & 1ULL) {
                bits[static_cast<std::size_t>(comp.qubits[local])] = '1';
            }
        }
    }
    // Independent symmetric readout flips.
    for (int q = 0; q < n_qubits_; ++q) {
        if (rng.next_double() < readout_error_[static_cast<std::size_t>(q)]) {
            auto& b = bits[static_cast<std::size_t>(q)];
            b = (b == '0') ? '1' : '0';
        }
    }
    // Render most-significant qubit first.
    std::string out(static_cast<std::size_t>(n_qubits_), '0');
    for (int q = 0; q < n_qubits_; ++q) {
        out[static_cast<std::size_t>(n_qubits_ - 1 - q)] =
            bits[static_cast<std::size_t>(q)];
    }
    return out;
}

std::string sample_noisy_trajectory(const Circuit& circuit,
                                    const CalibrationTable& table,
                                    RngStream& rng) {
    NoisyExecutionPlan plan(circuit, table);
    return plan.sample(rng);
}

CountsHistogram run_noisy(const Circuit& circuit, const CalibrationTable& table,
                          int shots, std::uint64_t seed, int threads) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const NoisyExecutionPlan plan(circuit, table);

    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = static_cast<int>(std::clamp(hw, 1u, 8u));
    }
    threads = std::min(threads, shots);

    std::vector<std::map<std::string, int>> partial(
        static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            const int begin = static_cast<int>(
                static_cast<long long>(shots) * t / threads);
            const int end = static_cast<int>(
                static_cast<long long>(shots) * (t + 1) / threads);
            auto& local = partial[static_cast<std::size_t>(t)];
            for (int s = begin; s < end; ++s) {
                RngStream rng =
                    RngStream::derive(seed, static_cast<std::uint64_t>(s));
                ++local[plan.sample(rng)];
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }

    CountsHistogram histogram;
    histogram.shots = shots;
    for (const auto& local : partial) {
        for (const auto& [bits, count] : local) {
            histogram.counts[bits] += count;
        }
    }
    return histogram;
}

}  // namespace hpsim
