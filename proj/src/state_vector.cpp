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
#include "hpsim/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace hpsim {

namespace {
constexpr int kMaxQubits = 24;
}

std::string index_to_bitstring(std::uint64_t index, int n_qubits) {
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1ULL) {
            bits[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
        }
    }
    return bits;
}

std::uint64_t bitstring_to_index(const std::string& bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring must contain only 0/1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("state vector supports 1.." +
                                    std::to_string(kMaxQubits) + " qubits");
    }
    amplitudes_.assign(1ULL << n_qubits, Complex(0.0, 0.0));
    amplitudes_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dimension()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

void StateVector::check_target(int q) const {
    if (q < 0 || q >= n_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(q) +
                                " out of range for " +
                                std::to_string(n_qubits_) + " qubits");
    }
}

void StateVector::apply(const Gate& gate) {
    if (gate.arity == 1) {
        apply_matrix_1q(gate.qubits[0], gate_matrix_1q(gate));
    } else {
        if (gate.qubits[0] == gate.qubits[1]) {
            throw std::invalid_argument("two-qubit gate with duplicate targets");
        }
        apply_matrix_2q(gate.qubits[0], gate.qubits[1], gate_matrix_2q(gate));
    }
}

void StateVector::apply_matrix_1q(int q, const Eigen::Matrix2cd& u) {
    check_target(q);
    const std::uint64_t step = 1ULL << q;
    const std::uint64_t dim = dimension();
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::uint64_t base = 0; base < dim; base += 2 * step) {
        for (std::uint64_t i = base; i < base + step; ++i) {
            const Complex a0 = amplitudes_[i];
            const Complex a1 = amplitudes_[i + step];
            amplitudes_[i] = u00 * a0 + u01 * a1;
            amplitudes_[i + step] = u10 * a0 + u11 * a1;
        }
    }
}

void StateVector::apply_matrix_2q(int qa, int qb, const Eigen::Matrix4cd& u) {
    check_target(qa);
    check_target(qb);
    if (qa == qb) {
        throw std::invalid_argument("two-qubit matrix with duplicate targets");
    }
    const std::uint64_t sa = 1ULL << qa;
    const std::uint64_t sb = 1ULL << qb;
    const std::uint64_t dim = dimension();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & sa) || (i & sb)) {
            continue;
        }
        const std::uint64_t i0 = i;
        const std::uint64_t i1 = i | sa;
        const std::uint64_t i2 = i | sb;
        const std::uint64_t i3 = i | sa | sb;
        const Complex a0 = amplitudes_[i0];
        const Complex a1 = amplitudes_[i1];
        const Complex a2 = amplitudes_[i2];
        const Complex a3 = amplitudes_[i3];
        amplitudes_[i0] = u(0, 0) * a0 + u(0, 1) * a1 + u(0, 2) * a2 + u(0, 3) * a3;
        amplitudes_[i1] = u(1, 0) * a0 + u(1, 1) * a1 + u(1, 2) * a2 + u(1, 3) * a3;
        amplitudes_[i2] = u(2, 0) * a0 + u(2, 1) * a1 + u(2, 2) * a2 + u(2, 3) * a3;
        amplitudes_[i3] = u(3, 0) * a0 + u(3, 1) * a1 + u(3, 2) * a2 + u(3, 3) * a3;
    }
}

void StateVector::scale(Complex factor) {
    for (auto& a : amplitudes_) {
        a *= factor;
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::excited_population(int q) const {
    check_target(q);
    const std::uint64_t mask = 1ULL << q;
    double total = 0.0;
    for (std::uint64_t i = 0; i < dimension(); ++i) {
        if (i & mask) {
            total += std::norm(amplitudes_[i]);
        }
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs(dimension());
    for (std::uint64_t i = 0; i < dimension(); ++i) {
        probs[i] = std::norm(amplitudes_[i]);
    }
    return probs;
}

void StateVector::collapse_qubit(int q, int outcome) {
    check_target(q);
    const std::uint64_t mask = 1ULL << q;
    double kept = 0.0;
    for (std::uint64_t i = 0; i < dimension(); ++i) {
        const bool excited = (i & mask) != 0;
        if (excited == (outcome != 0)) {
            kept += std::norm(amplitudes_[i]);
        } else {
            amplitudes_[i] = 0.0;
        }
    }
    if (kept <= 0.0) {
        throw std::runtime_error("collapse onto zero-probability outcome");
    }
    const double inv = 1.0 / std::sqrt(kept);
    for (auto& a : amplitudes_) {
        a *= inv;
    }
}

}  // namespace hpsim
