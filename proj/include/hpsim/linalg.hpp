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

#include "hpsim/circuit.hpp"

#include <Eigen/Dense>

namespace hpsim {

using Matrix = Eigen::MatrixXcd;

bool is_hermitian(const Matrix& m, double tol = 1e-10);
bool is_unitary(const Matrix& m, double tol = 1e-10);

/// e^{-i H t} via eigendecomposition. Throws if H is not Hermitian (1e-10)
/// or its dimension exceeds 2^12.
Matrix matrix_exponential(const Matrix& hamiltonian, double t);

/// Full 2^n matrix of a gate embedded on its target qubits.
Matrix embed_gate(const Gate& gate, int n_qubits);

/// Ordered product of the gate matrices times e^{i global_phase}.
/// Limited to 12 qubits.
Matrix circuit_unitary(const Circuit& circuit);

/// max_ij |a_ij - e^{i phi} b_ij| minimized over the global phase phi.
double distance_up_to_phase(const Matrix& a, const Matrix& b);

/// Pauli matrices and the 2x2 identity.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd identity_2();

/// Full 2^n matrix of a single-qubit operator on qubit q.
Matrix embed_1q(const Eigen::Matrix2cd& op, int q, int n_qubits);

/// Full 2^n matrix of a two-qubit operator; the 4-dim index of op is
/// (bit of qb) << 1 | (bit of qa).
Matrix embed_2q(const Eigen::Matrix4cd& op, int qa, int qb, int n_qubits);

}  // namespace hpsim
