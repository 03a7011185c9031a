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
#include "hpsim/circuit.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hpsim {

Circuit& Circuit::add(const Gate& gate) {
    for (int k = 0; k < gate.arity; ++k) {
        const int q = gate.qubits[static_cast<std::size_t>(k)];
        if (q < 0 || q >= n_qubits) {
            throw std::out_of_range("gate target " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
        }
    }
    if (gate.arity == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw std::invalid_argument("two-qubit gate with duplicate targets");
    }
    gates.push_back(gate);
    return *this;
}

int Circuit::count(GateKind kind) const {
    int n = 0;
    for (const auto& g : gates) {
        n += (g.kind == kind) ? 1 : 0;
    }
    return n;
}

int Circuit::count_on_qubit(GateKind kind, int q) const {
    int n = 0;
    for (const auto& g : gates) {
        if (g.kind != kind) {
            continue;
        }
        for (int k = 0; k < g.arity; ++k) {
            if (g.qubits[static_cast<std::size_t>(k)] == q) {
                ++n;
                break;
            }
        }
    }
    return n;
}

bool Circuit::is_native() const {
    for (const auto& g : gates) {
        if (!g.is_native()) {
            return false;
        }
    }
    return true;
}

StateVector simulate(const Circuit& circuit, StateVector initial) {
    if (initial.n_qubits() != circuit.n_qubits) {
        throw std::invalid_argument("initial state qubit count mismatch");
    }
    for (const auto& g : circuit.gates) {
        initial.apply(g);
    }
    initial.scale(std::exp(std::complex<double>(0.0, circuit.global_phase)));
    return initial;
}

StateVector simulate(const Circuit& circuit) {
    return simulate(circuit, StateVector(circuit.n_qubits));
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

}  // namespace hpsim
