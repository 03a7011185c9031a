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
#include "hpsim/gates.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hpsim {

namespace {
using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};
}  // namespace

Gate Gate::rz(int q, double theta) {
    Gate g{GateKind::RZ};
    g.qubits = {q, -1};
    g.arity = 1;
    g.angles[0] = theta;
    return g;
}

Gate Gate::sx(int q) {
    Gate g{GateKind::SX};
    g.qubits = {q, -1};
    g.arity = 1;
    return g;
}

Gate Gate::x(int q) {
    Gate g{GateKind::X};
    g.qubits = {q, -1};
    g.arity = 1;
    return g;
}

Gate Gate::u3(int q, double alpha, double beta, double gamma) {
    Gate g{GateKind::U3};
    g.qubits = {q, -1};
    g.arity = 1;
    g.angles = {alpha, beta, gamma};
    return g;
}

Gate Gate::cz(int a, int b) {
    Gate g{GateKind::CZ};
    g.qubits = {a, b};
    g.arity = 2;
    return g;
}

Gate Gate::rxx(int a, int b, double theta) {
    Gate g{GateKind::RXX};
    g.qubits = {a, b};
    g.arity = 2;
    g.angles[0] = theta;
    return g;
}

Gate Gate::ryy(int a, int b, double theta) {
    Gate g{GateKind::RYY};
    g.qubits = {a, b};
    g.arity = 2;
    g.angles[0] = theta;
    return g;
}

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::RZ: return "rz";
        case GateKind::SX: return "sx";
        case GateKind::X: return "x";
        case GateKind::U3: return "u3";
        case GateKind::CZ: return "cz";
        case GateKind::RXX: return "rxx";
        case GateKind::RYY: return "ryy";
    }
    return "?";
}

Eigen::Matrix2cd u3_matrix(double alpha, double beta, double gamma) {
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    Eigen::Matrix2cd u;
    u << c, -std::exp(kI * gamma) * s,
         std::exp(kI * alpha) * s, std::exp(kI * (alpha + gamma)) * c;
    return u;
}

Eigen::Matrix2cd u3_matrix_dalpha(double alpha, double beta, double gamma) {
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    Eigen::Matrix2cd d;
    d << 0.0, 0.0,
         kI * std::exp(kI * alpha) * s, kI * std::exp(kI * (alpha + gamma)) * c;
    return d;
}

Eigen::Matrix2cd u3_matrix_dbeta(double alpha, double beta, double gamma) {
    const double c = 0.5 * std::cos(beta / 2.0);
    const double s = 0.5 * std::sin(beta / 2.0);
    Eigen::Matrix2cd d;
    d << -s, -std::exp(kI * gamma) * c,
         std::exp(kI * alpha) * c, -std::exp(kI * (alpha + gamma)) * s;
    return d;
}

Eigen::Matrix2cd u3_matrix_dgamma(double alpha, double beta, double gamma) {
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    Eigen::Matrix2cd d;
    d << 0.0, -kI * std::exp(kI * gamma) * s,
         0.0, kI * std::exp(kI * (alpha + gamma)) * c;
    return d;
}

Eigen::Matrix2cd gate_matrix_1q(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::RZ: {
            const double t = gate.angles[0];
            Eigen::Matrix2cd u;
            u << std::exp(-kI * t / 2.0), 0.0, 0.0, std::exp(kI * t / 2.0);
            return u;
        }
        case GateKind::SX: {
            // sqrt(X) in the convention where SX * SX == X exactly.
            Eigen::Matrix2cd u;
            u << Complex(0.5, 0.5), Complex(0.5, -0.5),
                 Complex(0.5, -0.5), Complex(0.5, 0.5);
            return u;
        }
        case GateKind::X: {
            Eigen::Matrix2cd u;
            u << 0.0, 1.0, 1.0, 0.0;
            return u;
        }
        case GateKind::U3:
            return u3_matrix(gate.angles[0], gate.angles[1], gate.angles[2]);
        default:
            throw std::invalid_argument("not a single-qubit gate: " +
                                        gate_name(gate.kind));
    }
}

Eigen::Matrix4cd gate_matrix_2q(const Gate& gate) {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    switch (gate.kind) {
        case GateKind::CZ:
            u.diagonal() << 1.0, 1.0, 1.0, -1.0;
            return u;
        case GateKind::RXX: {
            const double c = std::cos(gate.angles[0] / 2.0);
            const Complex ms = -kI * std::sin(gate.angles[0] / 2.0);
            u.diagonal().setConstant(c);
            u(0, 3) = ms;
            u(1, 2) = ms;
            u(2, 1) = ms;
            u(3, 0) = ms;
            return u;
        }
        case GateKind::RYY: {
            const double c = std::cos(gate.angles[0] / 2.0);
            const Complex ms = -kI * std::sin(gate.angles[0] / 2.0);
            u.diagonal().setConstant(c);
            u(0, 3) = -ms;
            u(1, 2) = ms;
            u(2, 1) = ms;
            u(3, 0) = -ms;
            return u;
        }
        default:
            throw std::invalid_argument("not a two-qubit gate: " +
                                        gate_name(gate.kind));
    }
}

}  // namespace hpsim
