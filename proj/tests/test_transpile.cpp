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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpsim/dho.hpp"
#include "hpsim/linalg.hpp"
#include "hpsim/rng.hpp"
#include "hpsim/transpile.hpp"

#include <numbers>

using namespace hpsim;
using std::numbers::pi;

namespace {

Circuit random_mixed_circuit(RngStream& rng, int n_qubits, int n_gates) {
    Circuit circuit(n_qubits);
    for (int i = 0; i < n_gates; ++i) {
        const int kind = static_cast<int>(rng.next_below(7));
        const int q = static_cast<int>(
            rng.next_below(static_cast<std::uint64_t>(n_qubits)));
        int q2 = q;
        while (q2 == q) {
            q2 = static_cast<int>(
                rng.next_below(static_cast<std::uint64_t>(n_qubits)));
        }
        const double a = rng.next_in(-pi, pi);
        switch (kind) {
            case 0: circuit.add(Gate::rz(q, a)); break;
            case 1: circuit.add(Gate::sx(q)); break;
            case 2: circuit.add(Gate::x(q)); break;
            case 3:
                circuit.add(Gate::u3(q, a, rng.next_in(-pi, pi),
                                     rng.next_in(-pi, pi)));
                break;
            case 4: circuit.add(Gate::cz(q, q2)); break;
            case 5: circuit.add(Gate::rxx(q, q2, a)); break;
            default: circuit.add(Gate::ryy(q, q2, a)); break;
        }
    }
    return circuit;
}

}  // namespace

TEST_CASE("single-qubit synthesis is exact for random unitaries") {
    RngStream rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Matrix2cd u =
            u3_matrix(rng.next_in(-pi, pi), rng.next_in(-pi, pi),
                      rng.next_in(-pi, pi)) *
            std::exp(Complex(0.0, rng.next_in(-pi, pi)));
        const NativeSequence seq = synthesize_1q(0, u);
        Circuit c(1);
        for (const auto& g : seq.gates) {
            c.add(g);
        }
        c.global_phase = seq.phase;
        CHECK((circuit_unitary(c) - Matrix(u)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(c.count(GateKind::SX) <= 2);
    }
}

TEST_CASE("fixed ZXZXZ template handles the identity") {
    const NativeSequence seq =
        synthesize_1q_zxzxz(0, Eigen::Matrix2cd::Identity());
    CHECK(seq.gates.size() == 5);
    Circuit c(1);
    for (const auto& g : seq.gates) {
        c.add(g);
    }
    c.global_phase = seq.phase;
    CHECK((circuit_unitary(c) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("degenerate tiers pick the cheapest native form") {
    SUBCASE("diagonal unitary becomes RZ only") {
        Circuit in(1);
        in.add(Gate::u3(0, 0.0, 0.0, 0.0));
        const Circuit out = transpile_to_native(in);
        CHECK(out.count(GateKind::SX) == 0);
        CHECK(out.count(GateKind::X) == 0);
        CHECK(distance_up_to_phase(circuit_unitary(out),
                                   Matrix::Identity(2, 2)) < 1e-12);
    }
    SUBCASE("X-like unitary uses the native X") {
        Circuit in(1);
        in.add(Gate::u3(0, 0.3, pi, 1.2));
        const Circuit out = transpile_to_native(in);
        CHECK(out.count(GateKind::SX) == 0);
        CHECK(out.count(GateKind::X) == 1);
        CHECK((circuit_unitary(out) - circuit_unitary(in)).cwiseAbs().maxCoeff() <
              1e-12);
    }
    SUBCASE("half-turn family needs a single SX") {
        Circuit in(1);
        in.add(Gate::u3(0, 0.7, pi / 2.0, -0.4));
        const Circuit out = transpile_to_native(in);
        CHECK(out.count(GateKind::SX) == 1);
        CHECK((circuit_unitary(out) - circuit_unitary(in)).cwiseAbs().maxCoeff() <
              1e-12);
    }
}

TEST_CASE("adjacent RXX/RYY pair compiles to exactly two CZ") {
    Circuit in(2);
    in.add(Gate::rxx(0, 1, 0.2));
    in.add(Gate::ryy(0, 1, 0.2));
    const Circuit out = transpile_to_native(in);
    CHECK(out.is_native());
    CHECK(out.count(GateKind::CZ) == 2);
    CHECK((circuit_unitary(out) - circuit_unitary(in)).cwiseAbs().maxCoeff() <
          1e-10);
}

TEST_CASE("pair fusion works with unequal angles and swapped qubit order") {
    Circuit in(3);
    in.add(Gate::ryy(2, 0, -1.4));
    in.add(Gate::rxx(0, 2, 0.55));
    const Circuit out = transpile_to_native(in);
    CHECK(out.count(GateKind::CZ) == 2);
    CHECK((circuit_unitary(out) - circuit_unitary(in)).cwiseAbs().maxCoeff() <
          1e-10);
}

TEST_CASE("isolated RXX and RYY each compile to two CZ") {
    for (const Gate g : {Gate::rxx(0, 1, 0.9), Gate::ryy(0, 1, -0.3)}) {
        Circuit in(2);
        in.add(g);
        const Circuit out = transpile_to_native(in);
        CHECK(out.is_native());
        CHECK(out.count(GateKind::CZ) == 2);
        CHECK((circuit_unitary(out) - circuit_unitary(in)).cwiseAbs().maxCoeff() <
              1e-10);
    }
}

TEST_CASE("oscillator circuit is already native with two SX per qubit") {
    const DhoParams params{1.0, 0.75, 6};
    const Circuit circuit = build_dho_circuit(params, pi);
    const Circuit out = transpile_to_native(circuit);
    CHECK(out.count(GateKind::CZ) == 0);
    CHECK(out.count(GateKind::SX) == 12);
    for (int q = 0; q < 6; ++q) {
        CHECK(out.count_on_qubit(GateKind::SX, q) == 2);
    }
}

TEST_CASE("transpiled unitary equals the original, 200 random circuits") {
    RngStream rng(99);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(3));
        const Circuit in = random_mixed_circuit(
            rng, n, 4 + static_cast<int>(rng.next_below(14)));
        const Circuit out = transpile_to_native(in);
        CHECK(out.is_native());
        worst = std::max(worst, distance_up_to_phase(circuit_unitary(out),
                                                     circuit_unitary(in)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("transpile preserves the tracked global phase exactly") {
    RngStream rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit in = random_mixed_circuit(rng, 3, 10);
        const Circuit out = transpile_to_native(in);
        CHECK((circuit_unitary(out) - circuit_unitary(in)).cwiseAbs().maxCoeff() <
              1e-10);
    }
}
