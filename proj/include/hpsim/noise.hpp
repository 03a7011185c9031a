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

#include "hpsim/calibration.hpp"
#include "hpsim/circuit.hpp"
#include "hpsim/linalg.hpp"

#include <array>
#include <vector>

namespace hpsim {

struct NoiseChannel {
    enum class Kind {
        ReadoutFlip,
        Depolarizing1Q,
        Depolarizing2Q,
        AmplitudeDamping,
        Dephasing,
    };

    Kind kind;
    double parameter = 0.0;
    std::array<int, 2> qubits{-1, -1};
    int arity = 1;

    static NoiseChannel readout_flip(int q, double p);
    static NoiseChannel depolarizing_1q(int q, double p);
    static NoiseChannel depolarizing_2q(int a, int b, double p);
    static NoiseChannel amplitude_damping(int q, double p);
    static NoiseChannel dephasing(int q, double p);

    /// Kraus operators (2x2 for single-qubit kinds, 4x4 for two-qubit);
    /// ReadoutFlip is represented as the equivalent bit-flip channel.
    std::vector<Matrix> kraus_operators() const;
};

/// Average gate error r -> Pauli-form depolarizing probability,
/// p = r (d+1)/d with d = 2^{n_qubits}, clipped to [0, 1].
double depolarizing_probability(double average_error, int n_qubits);

/// p = 1 - e^{-duration/t1}.
double amplitude_damping_probability(double duration_us, double t1_us);

/// Z-flip probability of the pure-dephasing channel over the given
/// duration: rate 1/t2 - 1/(2 t1), clamped at zero.
double dephasing_probability(double duration_us, double t1_us, double t2_us);

/// Channels applied after a native gate. RZ returns no channels (virtual
/// frame update); SX and X get the single-qubit depolarizing plus
/// duration-based decay on the target; CZ gets the two-qubit depolarizing
/// plus decay on both targets. Channels with zero parameter are omitted.
std::vector<NoiseChannel> gate_error_channels(const Gate& gate,
                                              const CalibrationTable& table);

/// Physical-gate execution time of a native circuit: counted SX/X and CZ
/// durations plus one measurement window.
double circuit_runtime_us(const Circuit& circuit,
                          const CalibrationTable& table);

}  // namespace hpsim
