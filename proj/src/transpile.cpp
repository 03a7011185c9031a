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
#include "hpsim/transpile.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hpsim {

namespace {

using std::numbers::pi;
using Complex = std::complex<double>;

constexpr double kTierTolerance = 1e-12;

struct ZyzAngles {
    double phase;  // U = e^{i phase} RZ(phi) RY(beta) RZ(lambda)
    double phi;
    double beta;
    double lambda;
};

ZyzAngles extract_zyz(const Eigen::Matrix2cd& u) {
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const double delta = 0.5 * std::arg(det);
    const Complex v00 = u(0, 0) * std::exp(Complex(0.0, -delta));
    const Complex v10 = u(1, 0) * std::exp(Complex(0.0, -delta));
    ZyzAngles z;
    z.phase = delta;
    z.beta = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
    const double a00 = std::abs(v00) > 1e-300 ? std::arg(v00) : 0.0;
    const double a10 = std::abs(v10) > 1e-300 ? std::arg(v10) : 0.0;
    z.phi = -a00 + a10;
    z.lambda = -a00 - a10;
    return z;
}

bool rz_is_trivial(double theta) {
    const double m = std::remainder(theta, 2.0 * pi);
    return std::abs(m) < kTierTolerance;
}

// Product of the emitted gates (all on one qubit) in application order.
Eigen::Matrix2cd sequence_matrix(const std::vector<Gate>& gates) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (const auto& g : gates) {
        m = gate_matrix_1q(g) * m;
    }
    return m;
}

NativeSequence finalize_sequence(std::vector<Gate> gates,
                                 const Eigen::Matrix2cd& target) {
    // Drop RZ gates that reduce to a pure phase and recover the exact global
    // phase from the remaining product.
    std::vector<Gate> kept;
    kept.reserve(gates.size());
    for (const auto& g : gates) {
        if (g.kind == GateKind::RZ && rz_is_trivial(g.angles[0])) {
            continue;
        }
        kept.push_back(g);
    }
    const Eigen::Matrix2cd product = sequence_matrix(kept);
    const Complex overlap = (product.adjoint() * target).trace() / 2.0;
    if (std::abs(std::abs(overlap) - 1.0) > 1e-9) {
        throw std::runtime_error("single-qubit synthesis lost unitarity");
    }
    return NativeSequence{std::move(kept), std::arg(overlap)};
}

}  // namespace

NativeSequence synthesize_1q_zxzxz(int q, const Eigen::Matrix2cd& u) {
    const ZyzAngles z = extract_zyz(u);
    std::vector<Gate> gates{
        Gate::rz(q, z.lambda),
        Gate::sx(q),
        Gate::rz(q, z.beta + pi),
        Gate::sx(q),
        Gate::rz(q, z.phi + pi),
    };
    const Eigen::Matrix2cd product = sequence_matrix(gates);
    const Complex overlap = (product.adjoint() * u).trace() / 2.0;
    if (std::abs(std::abs(overlap) - 1.0) > 1e-9) {
        throw std::runtime_error("single-qubit synthesis lost unitarity");
    }
    return NativeSequence{std::move(gates), std::arg(overlap)};
}

NativeSequence synthesize_1q(int q, const Eigen::Matrix2cd& u) {
    const ZyzAngles z = extract_zyz(u);
    std::vector<Gate> gates;
    if (std::abs(z.beta) < kTierTolerance) {
        gates = {Gate::rz(q, z.phi + z.lambda)};
    } else if (std::abs(z.beta - pi / 2.0) < kTierTolerance) {
        gates = {Gate::rz(q, z.lambda - pi / 2.0), Gate::sx(q),
                 Gate::rz(q, z.phi + pi / 2.0)};
    } else if (std::abs(z.beta - pi) < kTierTolerance) {
        gates = {Gate::rz(q, z.lambda - pi / 2.0), Gate::x(q),
                 Gate::rz(q, z.phi + pi / 2.0)};
    } else {
        gates = {Gate::rz(q, z.lambda), Gate::sx(q), Gate::rz(q, z.beta + pi),
                 Gate::sx(q), Gate::rz(q, z.phi + pi)};
    }
    return finalize_sequence(std::move(gates), u);
}

namespace {

void emit_single(Circuit& out, int q, const Eigen::Matrix2cd& u) {
    NativeSequence seq = synthesize_1q(q, u);
    for (const auto& g : seq.gates) {
        out.add(g);
    }
    out.global_phase += seq.phase;
}

Eigen::Matrix2cd rx_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const Complex ms(0.0, -std::sin(theta / 2.0));
    Eigen::Matrix2cd m;
    m << c, ms, ms, c;
    return m;
}

Eigen::Matrix2cd hadamard_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    m << s, s, s, -s;
    return m;
}

// RYY(theta_yy) . RXX(theta_xx) on a qubit pair as two CZ plus singles:
//   (V (x) V H) . CZ . (RX(a) (x) RX(b)) . CZ . (V^dag (x) H V^dag)
// with V = RX(pi/2), a = theta_xx, b = theta_yy. The first tensor factor
// sits on qa, the second on qb.
void emit_xy_block(Circuit& out, int qa, int qb, double theta_xx,
                   double theta_yy) {
    const Eigen::Matrix2cd v = rx_matrix(pi / 2.0);
    const Eigen::Matrix2cd vd = v.adjoint();
    const Eigen::Matrix2cd h = hadamard_matrix();

    emit_single(out, qa, vd);
    emit_single(out, qb, Eigen::Matrix2cd(h * vd));
    out.add(Gate::cz(qa, qb));
    emit_single(out, qa, rx_matrix(theta_xx));
    emit_single(out, qb, rx_matrix(theta_yy));
    out.add(Gate::cz(qa, qb));
    emit_single(out, qa, v);
    emit_single(out, qb, Eigen::Matrix2cd(v * h));
}

bool same_pair(const Gate& a, const Gate& b) {
    return (a.qubits[0] == b.qubits[0] && a.qubits[1] == b.qubits[1]) ||
           (a.qubits[0] == b.qubits[1] && a.qubits[1] == b.qubits[0]);
}

}  // namespace

Circuit transpile_to_native(const Circuit& circuit) {
    Circuit out(circuit.n_qubits);
    out.global_phase = circuit.global_phase;

    std::size_t i = 0;
    while (i < circuit.gates.size()) {
        const Gate& g = circuit.gates[i];
        if (g.is_native()) {
            out.add(g);
            ++i;
            continue;
        }
        if (g.kind == GateKind::U3) {
            emit_single(out, g.qubits[0],
                        u3_matrix(g.angles[0], g.angles[1], g.angles[2]));
            ++i;
            continue;
        }
        if (g.kind == GateKind::RXX || g.kind == GateKind::RYY) {
            double theta_xx = (g.kind == GateKind::RXX) ? g.angles[0] : 0.0;
            double theta_yy = (g.kind == GateKind::RYY) ? g.angles[0] : 0.0;
            if (i + 1 < circuit.gates.size()) {
                const Gate& next = circuit.gates[i + 1];
                const bool partner_kind =
                    (g.kind == GateKind::RXX && next.kind == GateKind::RYY) ||
                    (g.kind == GateKind::RYY && next.kind == GateKind::RXX);
                if (partner_kind && same_pair(g, next)) {
                    if (next.kind == GateKind::RXX) {
                        theta_xx = next.angles[0];
                    } else {
                        theta_yy = next.angles[0];
                    }
                    ++i;
                }
            }
            emit_xy_block(out, g.qubits[0], g.qubits[1], theta_xx, theta_yy);
            ++i;
            continue;
        }
        throw std::invalid_argument("unsupported gate kind in transpiler");
    }
    return out;
}

}  // namespace hpsim
