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
#include "hpsim/jc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hpsim {

using std::numbers::pi;

double JcParams::rabi() const {
    const double detuning = omegaz - omega0;
    return std::hypot(g, detuning / 2.0);
}

double JcParams::period() const {
    const double r = rabi();
    if (r == 0.0) {
        throw std::domain_error("zero Rabi frequency has no period");
    }
    return pi / r;
}

double rabi_probability(const JcParams& params, double t) {
    const double r = params.rabi();
    if (r == 0.0) {
        return 1.0;
    }
    const double c = std::cos(r * t);
    const double s = std::sin(r * t);
    const double ratio = (params.omegaz - params.omega0) / (2.0 * r);
    return c * c + s * s * ratio * ratio;
}

Matrix build_jc_hamiltonian(const JcParams& params, bool rotating_frame) {
    if (params.n_qubits < 1 || params.n_qubits > 10) {
        throw std::invalid_argument("cavity ensemble supports 1..10 qubits");
    }
    const int n = params.total_qubits();
    const int tau = params.n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n;
    Matrix h = Matrix::Zero(dim, dim);

    if (!rotating_frame) {
        // Spin-up is |1>, so the physics sigma_z is minus the matrix Z.
        const Eigen::Matrix2cd sz = -pauli_z();
        for (int i = 0; i < params.n_qubits; ++i) {
            h += (params.omega0 / 2.0) * embed_1q(sz, i, n);
        }
        h += (params.omegaz / 2.0) * embed_1q(sz, tau, n);
    }

    const double coupling =
        params.g / (2.0 * std::sqrt(static_cast<double>(params.n_qubits)));
    for (int i = 0; i < params.n_qubits; ++i) {
        h += coupling * (embed_1q(pauli_x(), i, n) * embed_1q(pauli_x(), tau, n) +
                         embed_1q(pauli_y(), i, n) * embed_1q(pauli_y(), tau, n));
    }
    return h;
}

namespace {

/// Exchange exponential e^{-i (g/(2 sqrt N))(XX + YY) theta} between one
/// cavity qubit and tau, as an adjacent RXX/RYY pair.
void add_exchange(Circuit& circuit, const JcParams& params, int cavity_qubit,
                  double theta) {
    const double phi =
        (params.g / std::sqrt(static_cast<double>(params.n_qubits))) * theta;
    const int tau = params.n_qubits;
    circuit.add(Gate::rxx(cavity_qubit, tau, phi));
    circuit.add(Gate::ryy(cavity_qubit, tau, phi));
}

}  // namespace

Circuit build_trotter_circuit(const JcParams& params, double t,
                              const TrotterPlan& plan) {
    if (params.n_qubits != 2) {
        throw std::invalid_argument(
            "product-formula circuit is built for 2 cavity qubits");
    }
    if (t < 0.0) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    if (plan.steps < 1) {
        throw std::invalid_argument("need at least one step");
    }
    const double dt = t / plan.steps;
    Circuit circuit(params.total_qubits());
    if (plan.merge_boundary_half_steps) {
        // half(q1) [full(q0) full(q1)]^{K-1} full(q0) half(q1)
        add_exchange(circuit, params, 1, dt / 2.0);
        for (int k = 0; k < plan.steps; ++k) {
            add_exchange(circuit, params, 0, dt);
            add_exchange(circuit, params, 1, k + 1 < plan.steps ? dt : dt / 2.0);
        }
    } else {
        for (int k = 0; k < plan.steps; ++k) {
            add_exchange(circuit, params, 1, dt / 2.0);
            add_exchange(circuit, params, 0, dt);
            add_exchange(circuit, params, 1, dt / 2.0);
        }
    }
    return circuit;
}

int trotter_cz_count(const TrotterPlan& plan) {
    return plan.merge_boundary_half_steps ? 6 + 4 * (plan.steps - 1)
                                          : 6 * plan.steps;
}

Circuit prepare_up_circuit(int cavity_qubits) {
    Circuit circuit(cavity_qubits + 1);
    circuit.add(Gate::x(cavity_qubits));
    return circuit;
}

Circuit build_cz_benchmark_circuit(int n_cz, int repetitions) {
    if (n_cz < 2 || n_cz % 2 != 0) {
        throw std::invalid_argument("CZ count must be even and positive");
    }
    if (repetitions < 1) {
        throw std::invalid_argument("need at least one repetition");
    }
    // Placement cycle of the six-CZ layout, emitted in self-cancelling
    // adjacent pairs: (q1,q2) (q1,q2) (q0,q2) (q0,q2) (q1,q2) (q1,q2) ...
    static const int kCycle[3] = {1, 0, 1};
    Circuit circuit(3);
    const int total_pairs = repetitions * n_cz / 2;
    for (int j = 0; j < total_pairs; ++j) {
        const int cavity = kCycle[j % 3];
        circuit.add(Gate::cz(cavity, 2));
        circuit.add(Gate::cz(cavity, 2));
    }
    return circuit;
}

double survival_probability(const CountsHistogram& counts) {
    if (counts.shots <= 0) {
        throw std::invalid_argument("empty histogram");
    }
    for (const auto& [bits, count] : counts.counts) {
        (void)count;
        if (bits.size() != 3) {
            throw std::invalid_argument(
                "survival probability expects 3-qubit bitstrings");
        }
    }
    // tau = qubit 2 is the leftmost character.
    return counts.frequency("100");
}

}  // namespace hpsim
