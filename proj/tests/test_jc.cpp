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

#include "hpsim/jc.hpp"
#include "hpsim/transpile.hpp"

#include <cmath>
#include <numbers>

using namespace hpsim;
using std::numbers::pi;

namespace {

Circuit full_circuit(const JcParams& params, double t, const TrotterPlan& plan) {
    Circuit circuit = prepare_up_circuit(params.n_qubits);
    for (const auto& g : build_trotter_circuit(params, t, plan).gates) {
        circuit.add(g);
    }
    return circuit;
}

double survival_from_state(const StateVector& psi) {
    return std::norm(psi.amplitudes()[4]);
}

Matrix excitation_number_operator(int n_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Matrix number = Matrix::Zero(dim, dim);
    for (int q = 0; q < n_qubits; ++q) {
        number += 0.5 * (Matrix::Identity(dim, dim) -
                         embed_1q(pauli_z(), q, n_qubits));
    }
    return number;
}

}  // namespace

TEST_CASE("Rabi frequency and survival probability") {
    const JcParams resonant{1.0, 1.0, 0.1, 2};
    CHECK(resonant.rabi() == doctest::Approx(0.1));
    CHECK(rabi_probability(resonant, 0.0) == doctest::Approx(1.0));
    // Half a period empties the initial state at resonance.
    CHECK(rabi_probability(resonant, pi / (2.0 * 0.1)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    const JcParams detuned{1.0, 1.1, 0.1, 2};
    const double rabi = std::sqrt(0.01 + 0.0025);
    CHECK(detuned.rabi() == doctest::Approx(rabi));
    CHECK(rabi_probability(detuned, pi / (2.0 * rabi)) ==
          doctest::Approx(0.0025 / (rabi * rabi)).epsilon(1e-12));
}

TEST_CASE("survival matches the one-excitation two-level oracle") {
    // In the {|0,up>, |1,down>} subspace the boson-qubit Hamiltonian is
    // [[wz/2, g], [g, w0 - wz/2]].
    const JcParams detuned{1.0, 1.13, 0.07, 2};
    Matrix h(2, 2);
    h << detuned.omegaz / 2.0, detuned.g, detuned.g,
        detuned.omega0 - detuned.omegaz / 2.0;
    for (const double t : {0.8, 7.3, 21.0}) {
        const Matrix u = matrix_exponential(h, t);
        CHECK(std::norm(u(0, 0)) ==
              doctest::Approx(rabi_probability(detuned, t)).epsilon(1e-10));
    }
}

TEST_CASE("ensemble Hamiltonian construction") {
    SUBCASE("zero coupling in the rotating frame vanishes") {
        const JcParams params{1.0, 1.0, 0.0, 2};
        // g = 0 is unphysical for dynamics but the matrix is well defined.
        const Matrix h = build_jc_hamiltonian(params, true);
        CHECK(h.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("Hermitian and excitation conserving") {
        const JcParams params{1.0, 1.0, 0.1, 2};
        for (const bool rotating : {false, true}) {
            const Matrix h = build_jc_hamiltonian(params, rotating);
            CHECK(is_hermitian(h, 1e-12));
            const Matrix number = excitation_number_operator(3);
            CHECK((h * number - number * h).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("single cavity qubit reproduces the truncated boson model") {
        const JcParams params{1.0, 1.3, 0.2, 1};
        const Matrix h = build_jc_hamiltonian(params, false);
        // Two-level truncation of w0 a^dag a + (wz/2) tau_z + g(a tau+ + h.c.)
        // in the basis |photon, tau>; the mapped form differs only by the
        // dropped constant N w0 / 2.
        Matrix truncated = Matrix::Zero(4, 4);
        truncated(0, 0) = -params.omegaz / 2.0;
        truncated(1, 1) = params.omega0 - params.omegaz / 2.0;
        truncated(2, 2) = params.omegaz / 2.0;
        truncated(3, 3) = params.omega0 + params.omegaz / 2.0;
        truncated(1, 2) = params.g;
        truncated(2, 1) = params.g;
        const Matrix shifted =
            h + (params.omega0 / 2.0) * Matrix::Identity(4, 4);
        CHECK((shifted - truncated).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK_THROWS_AS(build_jc_hamiltonian(JcParams{1, 1, 0.1, 11}, true),
                    std::invalid_argument);
}

TEST_CASE("rotating-frame survival returns after a full period") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const Matrix h = build_jc_hamiltonian(params, true);
    const Matrix u = matrix_exponential(h, params.period());
    CHECK(std::norm(u(4, 4)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exponential of the mapped Hamiltonian reproduces the Rabi law") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const Matrix h = build_jc_hamiltonian(params, true);
    for (const double t : {0.25 * params.period(), 0.5 * params.period(),
                           1.3 * params.period()}) {
        const Matrix u = matrix_exponential(h, t);
        CHECK(std::norm(u(4, 4)) ==
              doctest::Approx(rabi_probability(params, t)).epsilon(1e-10));
    }
}

TEST_CASE("product-formula CZ census matches the merged and unmerged forms") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    for (int steps = 1; steps <= 7; ++steps) {
        const TrotterPlan merged{steps, true};
        const Circuit native =
            transpile_to_native(build_trotter_circuit(params, 1.7, merged));
        CHECK(native.count(GateKind::CZ) == 6 + 4 * (steps - 1));
        CHECK(trotter_cz_count(merged) == 6 + 4 * (steps - 1));

        const TrotterPlan unmerged{steps, false};
        const Circuit native_unmerged =
            transpile_to_native(build_trotter_circuit(params, 1.7, unmerged));
        CHECK(native_unmerged.count(GateKind::CZ) == 6 * steps);
    }
}

TEST_CASE("merged and unmerged step circuits agree") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const double t = 0.9 * params.period();
    const Matrix a =
        circuit_unitary(build_trotter_circuit(params, t, TrotterPlan{3, true}));
    const Matrix b =
        circuit_unitary(build_trotter_circuit(params, t, TrotterPlan{3, false}));
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("seven-step evolution tracks the closed form at two periods") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const double t = 2.0 * params.period();
    const StateVector psi =
        simulate(full_circuit(params, t, TrotterPlan{7, true}));
    CHECK(std::abs(survival_from_state(psi) - rabi_probability(params, t)) <
          0.01);
}

TEST_CASE("time-averaged step error decreases with the step count") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const double t_max = 2.0 * params.period();
    const auto averaged_error = [&](int steps) {
        double total = 0.0;
        for (int j = 0; j < 21; ++j) {
            const double t = t_max * j / 20.0;
            const StateVector psi =
                simulate(full_circuit(params, t, TrotterPlan{steps, true}));
            total += std::abs(survival_from_state(psi) -
                              rabi_probability(params, t));
        }
        return total / 21.0;
    };
    const double e1 = averaged_error(1);
    const double e2 = averaged_error(2);
    const double e4 = averaged_error(4);
    CHECK(e2 < e1);
    CHECK(e4 < e2);
}

TEST_CASE("noiseless step circuits stay in the one-excitation sector") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const StateVector psi = simulate(
        full_circuit(params, 0.7 * params.period(), TrotterPlan{3, true}));
    double outside = 0.0;
    for (std::uint64_t idx = 0; idx < psi.dimension(); ++idx) {
        int weight = 0;
        for (int q = 0; q < 3; ++q) {
            weight += static_cast<int>((idx >> q) & 1ULL);
        }
        if (weight != 1) {
            outside += std::norm(psi.amplitudes()[idx]);
        }
    }
    CHECK(outside < 1e-10);
}

TEST_CASE("initial-state convention: survival is one at t = 0") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const StateVector psi =
        simulate(full_circuit(params, 0.0, TrotterPlan{1, true}));
    CHECK(survival_from_state(psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampled survival matches the step-circuit prediction") {
    const JcParams params{1.0, 1.0, 0.1, 2};
    const double t = 0.5 * params.period();
    const Circuit circuit = full_circuit(params, t, TrotterPlan{4, true});
    const double predicted = std::norm(
        (circuit_unitary(circuit) * Matrix::Identity(8, 8).col(0)).eval()(4));
    const int shots = 2000;
    const CountsHistogram counts = sample_counts(simulate(circuit), shots, 17);
    const double sigma =
        std::sqrt(std::max(predicted * (1 - predicted) / shots, 1e-12));
    CHECK(std::abs(survival_probability(counts) - predicted) <=
          5.0 * sigma + 1e-9);
}

TEST_CASE("trotter circuit rejects unsupported configurations") {
    CHECK_THROWS_AS(
        build_trotter_circuit(JcParams{1, 1, 0.1, 3}, 1.0, TrotterPlan{1, true}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        build_trotter_circuit(JcParams{1, 1, 0.1, 2}, 1.0, TrotterPlan{0, true}),
        std::invalid_argument);
}

TEST_CASE("benchmark circuits are exact identities") {
    SUBCASE("six CZ, one repetition") {
        const Circuit bench = build_cz_benchmark_circuit(6, 1);
        CHECK(bench.gates.size() == 6);
        for (const auto& g : bench.gates) {
            CHECK(g.kind == GateKind::CZ);
            CHECK(g.qubits[1] == 2);
        }
        const StateVector psi =
            simulate(bench, StateVector::basis_state(3, 4));
        CHECK(std::norm(psi.amplitudes()[4]) == doctest::Approx(1.0));
    }
    SUBCASE("four repetitions give 24 CZ and still the identity") {
        const Circuit bench = build_cz_benchmark_circuit(6, 4);
        CHECK(bench.count(GateKind::CZ) == 24);
        CHECK((circuit_unitary(bench) - Matrix::Identity(8, 8))
                  .cwiseAbs()
                  .maxCoeff() < 1e-15);
    }
    SUBCASE("odd CZ counts are rejected") {
        CHECK_THROWS_AS(build_cz_benchmark_circuit(5, 1), std::invalid_argument);
    }
}

TEST_CASE("survival probability of a histogram") {
    SUBCASE("all shots on cavity 00, tau 1") {
        CountsHistogram counts;
        counts.counts["100"] = 7;
        counts.shots = 7;
        CHECK(survival_probability(counts) == doctest::Approx(1.0));
    }
    SUBCASE("all shots elsewhere") {
        CountsHistogram counts;
        counts.counts["001"] = 5;  // cavity 01, tau 0
        counts.shots = 5;
        CHECK(survival_probability(counts) == doctest::Approx(0.0));
    }
    SUBCASE("wrong width is rejected") {
        CountsHistogram counts;
        counts.counts["10"] = 1;
        counts.shots = 1;
        CHECK_THROWS_AS(survival_probability(counts), std::invalid_argument);
    }
}
