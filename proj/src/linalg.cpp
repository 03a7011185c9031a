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
#include "hpsim/linalg.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hpsim {

namespace {
constexpr int kDenseMatrixMaxQubits = 12;
constexpr Eigen::Index kDenseMatrixMaxDim = 1 << kDenseMatrixMaxQubits;
}  // namespace

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Matrix gram = m.adjoint() * m;
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    return (gram - id).cwiseAbs().maxCoeff() <= tol;
}

Matrix matrix_exponential(const Matrix& hamiltonian, double t) {
    if (hamiltonian.rows() != hamiltonian.cols()) {
        throw std::invalid_argument("matrix_exponential requires a square matrix");
    }
    if (hamiltonian.rows() > kDenseMatrixMaxDim) {
        throw std::invalid_argument("matrix_exponential capped at dimension 4096");
    }
    if (!is_hermitian(hamiltonian, 1e-10)) {
        throw std::invalid_argument("matrix_exponential requires a Hermitian matrix");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const auto& values = solver.eigenvalues();
    const Matrix& vectors = solver.eigenvectors();
    Eigen::VectorXcd phases(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        phases(k) = std::exp(std::complex<double>(0.0, -values(k) * t));
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << std::complex<double>(0, 0), std::complex<double>(0, -1),
         std::complex<double>(0, 1), std::complex<double>(0, 0);
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd identity_2() {
    return Eigen::Matrix2cd::Identity();
}

Matrix embed_1q(const Eigen::Matrix2cd& op, int q, int n_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Matrix full = Matrix::Zero(dim, dim);
    const std::uint64_t step = 1ULL << q;
    for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
        const int bit = static_cast<int>((col >> q) & 1ULL);
        const std::uint64_t base = col & ~step;
        full(static_cast<Eigen::Index>(base), static_cast<Eigen::Index>(col)) +=
            op(0, bit);
        full(static_cast<Eigen::Index>(base | step),
             static_cast<Eigen::Index>(col)) += op(1, bit);
    }
    return full;
}

Matrix embed_2q(const Eigen::Matrix4cd& op, int qa, int qb, int n_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    const std::uint64_t sa = 1ULL << qa;
    const std::uint64_t sb = 1ULL << qb;
    Matrix full = Matrix::Zero(dim, dim);
    for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
        const int sub = static_cast<int>((col & sa) ? 1 : 0) |
                        (static_cast<int>((col & sb) ? 1 : 0) << 1);
        const std::uint64_t base = col & ~(sa | sb);
        for (int row_sub = 0; row_sub < 4; ++row_sub) {
            const std::uint64_t row =
                base | ((row_sub & 1) ? sa : 0) | ((row_sub & 2) ? sb : 0);
            full(static_cast<Eigen::Index>(row),
                 static_cast<Eigen::Index>(col)) += op(row_sub, sub);
        }
    }
    return full;
}

Matrix embed_gate(const Gate& gate, int n_qubits) {
    if (n_qubits > kDenseMatrixMaxQubits) {
        throw std::invalid_argument("dense gate embedding capped at 12 qubits");
    }
    if (gate.arity == 1) {
        return embed_1q(gate_matrix_1q(gate), gate.qubits[0], n_qubits);
    }
    return embed_2q(gate_matrix_2q(gate), gate.qubits[0], gate.qubits[1],
                    n_qubits);
}

Matrix circuit_unitary(const Circuit& circuit) {
    if (circuit.n_qubits > kDenseMatrixMaxQubits) {
        throw std::invalid_argument("circuit_unitary capped at 12 qubits");
    }
    const Eigen::Index dim = Eigen::Index(1) << circuit.n_qubits;
    Matrix u = Matrix::Identity(dim, dim);
    // Apply each gate to every column, reusing the state-vector kernels.
    for (const auto& gate : circuit.gates) {
        if (gate.arity == 1) {
            const Eigen::Matrix2cd g = gate_matrix_1q(gate);
            const std::uint64_t step = 1ULL << gate.qubits[0];
            for (Eigen::Index col = 0; col < dim; ++col) {
                for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(dim);
                     base += 2 * step) {
                    for (std::uint64_t i = base; i < base + step; ++i) {
                        const auto a0 = u(static_cast<Eigen::Index>(i), col);
                        const auto a1 = u(static_cast<Eigen::Index>(i + step), col);
                        u(static_cast<Eigen::Index>(i), col) = g(0, 0) * a0 + g(0, 1) * a1;
                        u(static_cast<Eigen::Index>(i + step), col) =
                            g(1, 0) * a0 + g(1, 1) * a1;
                    }
                }
            }
        } else {
            u = embed_gate(gate, circuit.n_qubits) * u;
        }
    }
    return std::exp(std::complex<double>(0.0, circuit.global_phase)) * u;
}

double distance_up_to_phase(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("dimension mismatch");
    }
    std::complex<double> overlap = (b.adjoint() * a).trace();
    if (std::abs(overlap) < 1e-12) {
        // Orthogonal-ish in trace; align on the largest entry of b instead.
        Eigen::Index r = 0, c = 0;
        b.cwiseAbs().maxCoeff(&r, &c);
        if (std::abs(b(r, c)) < 1e-15) {
            return a.cwiseAbs().maxCoeff();
        }
        overlap = a(r, c) / b(r, c);
    }
    const std::complex<double> phase = overlap / std::abs(overlap);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace hpsim
