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
#include "hpsim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hpsim {

NoiseChannel NoiseChannel::readout_flip(int q, double p) {
    return NoiseChannel{Kind::ReadoutFlip, p, {q, -1}, 1};
}

NoiseChannel NoiseChannel::depolarizing_1q(int q, double p) {
    return NoiseChannel{Kind::Depolarizing1Q, p, {q, -1}, 1};
}

NoiseChannel NoiseChannel::depolarizing_2q(int a, int b, double p) {
    return NoiseChannel{Kind::Depolarizing2Q, p, {a, b}, 2};
}

NoiseChannel NoiseChannel::amplitude_damping(int q, double p) {
    return NoiseChannel{Kind::AmplitudeDamping, p, {q, -1}, 1};
}

NoiseChannel NoiseChannel::dephasing(int q, double p) {
    return NoiseChannel{Kind::Dephasing, p, {q, -1}, 1};
}

std::vector<Matrix> NoiseChannel::kraus_operators() const {
    const double p = parameter;
    switch (kind) {
        case Kind::ReadoutFlip: {
            return {std::sqrt(1.0 - p) * Matrix(identity_2()),
                    std::sqrt(p) * Matrix(pauli_x())};
        }
        case Kind::Depolarizing1Q: {
            std::vector<Matrix> kraus;
            kraus.push_back(std::sqrt(1.0 - p) * Matrix(identity_2()));
            for (const auto& pauli : {pauli_x(), pauli_y(), pauli_z()}) {
                kraus.push_back(std::sqrt(p / 3.0) * Matrix(pauli));
            }
            return kraus;
        }
        case Kind::Depolarizing2Q: {
            const std::array<Eigen::Matrix2cd, 4> paulis = {
                identity_2(), pauli_x(), pauli_y(), pauli_z()};
            std::vector<Matrix> kraus;
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    const double weight =
                        (a == 0 && b == 0) ? 1.0 - p : p / 15.0;
                    Matrix full = Matrix::Zero(4, 4);
                    // Index convention (bit of qubits[1]) << 1 | bit of
                    // qubits[0]: factor b acts on qubits[0].
                    for (int r1 = 0; r1 < 2; ++r1) {
                        for (int c1 = 0; c1 < 2; ++c1) {
                            for (int r0 = 0; r0 < 2; ++r0) {
                                for (int c0 = 0; c0 < 2; ++c0) {
                                    full(2 * r1 + r0, 2 * c1 + c0) =
                                        paulis[static_cast<std::size_t>(a)](r1, c1) *
                                        paulis[static_cast<std::size_t>(b)](r0, c0);
                                }
                            }
                        }
                    }
                    kraus.push_back(std::sqrt(weight) * full);
                }
            }
            return kraus;
        }
        case Kind::AmplitudeDamping: {
            Matrix k0 = Matrix::Zero(2, 2);
            k0(0, 0) = 1.0;
            k0(1, 1) = std::sqrt(1.0 - p);
            Matrix k1 = Matrix::Zero(2, 2);
            k1(0, 1) = std::sqrt(p);
            return {k0, k1};
        }
        case Kind::Dephasing: {
            return {std::sqrt(1.0 - p) * Matrix(identity_2()),
                    std::sqrt(p) * Matrix(pauli_z())};
        }
    }
    throw std::logic_error("unknown channel kind");
}

double depolarizing_probability(double average_error, int n_qubits) {
    const double d = static_cast<double>(1 << n_qubits);
    return std::clamp(average_error * (d + 1.0) / d, 0.0, 1.0);
}

double amplitude_damping_probability(double duration_us, double t1_us) {
    return 1.0 - std::exp(-duration_us / t1_us);
}

double dephasing_probability(double duration_us, double t1_us, double t2_us) {
    const double rate = std::max(0.0, 1.0 / t2_us - 0.5 / t1_us);
    return 0.5 * (1.0 - std::exp(-duration_us * rate));
}

namespace {

void append_decay(std::vector<NoiseChannel>& channels, int q,
                  const QubitCalibration& cal, double duration_us) {
    const double p_damp = amplitude_damping_probability(duration_us, cal.t1_us);
    if (p_damp > 0.0) {
        channels.push_back(NoiseChannel::amplitude_damping(q, p_damp));
    }
    const double p_phase =
        dephasing_probability(duration_us, cal.t1_us, cal.t2_us);
    if (p_phase > 0.0) {
        channels.push_back(NoiseChannel::dephasing(q, p_phase));
    }
}

}  // namespace

std::vector<NoiseChannel> gate_error_channels(const Gate& gate,
                                              const CalibrationTable& table) {
    if (!gate.is_native()) {
        throw std::invalid_argument("noise model covers native gates only, got " +
                                    gate_name(gate.kind));
    }
    std::vector<NoiseChannel> channels;
    switch (gate.kind) {
        case GateKind::RZ:
            break;  // virtual frame update, no physical operation
        case GateKind::SX:
        case GateKind::X: {
            const int q = gate.qubits[0];
            const auto& cal = table.qubit(q);
            const double p = depolarizing_probability(cal.sx_error, 1);
            if (p > 0.0) {
                channels.push_back(NoiseChannel::depolarizing_1q(q, p));
            }
            append_decay(channels, q, cal, table.durations().sx_us);
            break;
        }
        case GateKind::CZ: {
            const int a = gate.qubits[0];
            const int b = gate.qubits[1];
            const double p =
                depolarizing_probability(table.cz_error_for_pair(a, b), 2);
            if (p > 0.0) {
                channels.push_back(NoiseChannel::depolarizing_2q(a, b, p));
            }
            append_decay(channels, a, table.qubit(a), table.durations().cz_us);
            append_decay(channels, b, table.qubit(b), table.durations().cz_us);
            break;
        }
        default:
            throw std::logic_error("unreachable");
    }
    return channels;
}

double circuit_runtime_us(const Circuit& circuit,
                          const CalibrationTable& table) {
    double total = table.durations().measure_us;
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::SX:
            case GateKind::X:
                total += table.durations().sx_us;
                break;
            case GateKind::CZ:
                total += table.durations().cz_us;
                break;
            case GateKind::RZ:
                break;
            default:
                throw std::invalid_argument(
                    "runtime accounting covers native gates only");
        }
    }
    return total;
}

}  // namespace hpsim
