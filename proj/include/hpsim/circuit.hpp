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

#include "hpsim/gates.hpp"
#include "hpsim/state_vector.hpp"

#include <cstdint>
#include <vector>

namespace hpsim {

/// Ordered gate list over a fixed qubit count, with an explicit global
/// phase so that transformations can preserve the unitary exactly instead
/// of only up to phase.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    double global_phase = 0.0;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    Circuit& add(const Gate& gate);

    int count(GateKind kind) const;
    int count_on_qubit(GateKind kind, int q) const;
    bool is_native() const;
};

/// Run the circuit on |0...0> (or the given initial state), including the
/// global phase.
StateVector simulate(const Circuit& circuit);
StateVector simulate(const Circuit& circuit, StateVector initial);

/// Pure-function form: returns the state with one gate applied.
StateVector apply_gate(StateVector state, const Gate& gate);

}  // namespace hpsim
