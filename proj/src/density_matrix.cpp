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
#include "hpsim/density_matrix.hpp"

#include "hpsim/linalg.hpp"
#include "hpsim/noise.hpp"

#include <stdexcept>

namespace hpsim {

namespace {
constexpr int kDensityMatrixMaxQubits = 6;
}

std::vector<double> density_matrix_reference(const Circuit& circuit,
                                             const CalibrationTable& table) {
    if (circuit.n_qubits > kDensityMatrixMaxQubits) {
        throw std::invalid_argument("density-matrix oracle capped at 6 qubits");
    }
    if (!circuit.is_native()) {
        throw std::invalid_argument(
            "density-matrix oracle requires a native-gate circuit");
    }
    const Eigen::Index dim = Eigen::Index(1) << circuit.n_qubits;
    Matrix rho = Matrix::Zero(dim, dim);
    rho(0, 0) = 1.0;

    for (const auto& gate : circuit.gates) {
        const Matrix u = embed_gate(gate, circuit.n_qubits);
        rho = u * rho * u.adjoint();
        for (const auto& channel : gate_error_channels(gate, table)) {
            Matrix next = Matrix::Zero(dim, dim);
            for (const auto& kraus : channel.kraus_operators()) {
                const Matrix full =
                    channel.arity == 1
                        ? embed_1q(Eigen::Matrix2cd(kraus), channel.qubits[0],
                                   circuit.n_qubits)
                        : embed_2q(Eigen::Matrix4cd(kraus), channel.qubits[0],
                                   channel.qubits[1], circuit.n_qubits);
                next += full * rho * full.adjoint();
            }
            rho = std::move(next);
        }
    }

    std::vector<double> probs(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        probs[static_cast<std::size_t>(i)] = rho(i, i).real();
    }
    // Readout confusion: independent symmetric bit flips.
    for (int q = 0; q < circuit.n_qubits; ++q) {
        const double e = table.qubit(q).readout_error;
        if (e <= 0.0) {
            continue;
        }
        const std::uint64_t mask = 1ULL << q;
        std::vector<double> flipped(probs.size());
        for (std::size_t i = 0; i < probs.size(); ++i) {
            flipped[i] = (1.0 - e) * probs[i] + e * probs[i ^ mask];
        }
        probs = std::move(flipped);
    }
    return probs;
}

}  // namespace hpsim
