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

#include <Eigen/Dense>

#include <array>
#include <string>

namespace hpsim {

/// Gate vocabulary. {RZ, SX, X, CZ} is the native set the transpiler
/// targets; U3, RXX and RYY are composite gates accepted pre-transpilation.
enum class GateKind { RZ, SX, X, U3, CZ, RXX, RYY };

struct Gate {
    GateKind kind;
    std::array<int, 2> qubits{-1, -1};
    int arity = 1;
    // RZ/RXX/RYY use angles[0]; U3 uses (alpha, beta, gamma).
    std::array<double, 3> angles{0.0, 0.0, 0.0};

    static Gate rz(int q, double theta);
    static Gate sx(int q);
    static Gate x(int q);
    static Gate u3(int q, double alpha, double beta, double gamma);
    static Gate cz(int a, int b);
    static Gate rxx(int a, int b, double theta);
    static Gate ryy(int a, int b, double theta);

    bool is_two_qubit() const { return arity == 2; }
    bool is_native() const {
        return kind == GateKind::RZ || kind == GateKind::SX ||
               kind == GateKind::X || kind == GateKind::CZ;
    }
};

std::string gate_name(GateKind kind);

/// Dense matrix of a single-qubit gate.
Eigen::Matrix2cd gate_matrix_1q(const Gate& gate);

/// Dense matrix of a two-qubit gate. The 4-dimensional index is
/// (bit of qubits[1]) << 1 | (bit of qubits[0]).
Eigen::Matrix4cd gate_matrix_2q(const Gate& gate);

/// General single-qubit unitary
///   [[cos(b/2),            -e^{i c} sin(b/2)],
///    [e^{i a} sin(b/2),  e^{i(a+c)} cos(b/2)]].
Eigen::Matrix2cd u3_matrix(double alpha, double beta, double gamma);

/// Partial derivatives of u3_matrix with respect to each angle.
Eigen::Matrix2cd u3_matrix_dalpha(double alpha, double beta, double gamma);
Eigen::Matrix2cd u3_matrix_dbeta(double alpha, double beta, double gamma);
Eigen::Matrix2cd u3_matrix_dgamma(double alpha, double beta, double gamma);

}  // namespace hpsim
