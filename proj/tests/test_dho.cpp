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

#include <cmath>
#include <numbers>

using namespace hpsim;
using std::numbers::pi;

namespace {

/// Independent boson-mode oracle: exact evolution of
/// H = delta a^dag a + (drive/2)(a + a^dag) in a truncated Fock space,
/// starting from the vacuum.
std::vector<double> truncated_fock_occupations(double delta, double drive,
                                               double t, int levels) {
    Matrix h = Matrix::Zero(levels, levels);
    for (int n = 0; n < levels; ++n) {
        h(n, n) = delta * n;
        if (n + 1 < levels) {
            const double hop = 0.5 * drive * std::sqrt(n + 1.0);
            h(n, n + 1) = hop;
            h(n + 1, n) = hop;
        }
    }
    const Matrix u = matrix_exponential(h, t);
    std::vector<double> probs(static_cast<std::size_t>(levels));
    for (int n = 0; n < levels; ++n) {
        probs[static_cast<std::size_t>(n)] = std::norm(u(n, 0));
    }
    return probs;
}

/// Ensemble distribution by brute-force enumeration of all 2^N product
/// outcomes of the per-qubit rotation.
std::vector<double> enumerated_weight_distribution(const DhoParams& params,
                                                   double t) {
    const Circuit circuit = build_dho_circuit(params, t);
    const StateVector psi = simulate(circuit);
    std::vector<double> by_weight(static_cast<std::size_t>(params.n_qubits) + 1,
                                  0.0);
    for (std::uint64_t idx = 0; idx < psi.dimension(); ++idx) {
        int weight = 0;
        for (int q = 0; q < params.n_qubits; ++q) {
            weight += static_cast<int>((idx >> q) & 1ULL);
        }
        by_weight[static_cast<std::size_t>(weight)] +=
            std::norm(psi.amplitudes()[idx]);
    }
    return by_weight;
}

}  // namespace

TEST_CASE("derived parameters") {
    const DhoParams params{1.0, 0.75, 6};
    CHECK(params.displacement() == doctest::Approx(-0.75 / std::sqrt(2.0)));
    CHECK(params.omega() * params.omega() == doctest::Approx(0.2734375));
    CHECK(params.axis_angle() ==
          doctest::Approx(std::atan2(0.75 / (2 * std::sqrt(6.0)), 0.5)));
    CHECK_THROWS_AS((DhoParams{0.0, 0.5, 4}.displacement()), std::domain_error);
}

TEST_CASE("coherent amplitude") {
    const DhoParams params{1.0, 0.75, 6};
    CHECK(std::abs(coherent_alpha(params, 0.0)) == 0.0);
    // |alpha(pi)|^2 = 2 d0^2 at half period of the drive detuning.
    const auto alpha = coherent_alpha(params, pi);
    CHECK(std::norm(alpha) == doctest::Approx(0.5625).epsilon(1e-12));
    const DhoParams weak{1.0, 0.3, 3};
    CHECK(std::abs(coherent_alpha(weak, 2 * pi)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("occupation probabilities of the ideal boson mode") {
    const DhoParams params{1.0, 0.75, 6};
    CHECK(fock_probability(params, 0.0, 0) == 1.0);
    CHECK(fock_probability(params, 0.0, 3) == 0.0);
    CHECK(fock_probability(params, pi, 0) ==
          doctest::Approx(std::exp(-0.5625)).epsilon(1e-12));
    const DhoParams weak{1.0, 0.3, 3};
    CHECK(fock_probability(weak, pi, 1) ==
          doctest::Approx(0.09 * std::exp(-0.09)).epsilon(1e-12));
    CHECK_THROWS_AS(fock_probability(params, 1.0, -1), std::invalid_argument);
}

TEST_CASE("boson occupations match the truncated-space evolution oracle") {
    for (const double drive : {0.3, 0.75}) {
        const DhoParams params{1.0, drive, 6};
        for (const double t : {0.4, 1.7, pi, 5.9}) {
            const auto oracle = truncated_fock_occupations(1.0, drive, t, 40);
            for (int n = 0; n <= 3; ++n) {
                CHECK(fock_probability(params, t, n) ==
                      doctest::Approx(oracle[static_cast<std::size_t>(n)])
                          .epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("occupations sum to one with a tiny truncation tail") {
    const DhoParams params{1.0, 0.75, 6};
    double total = 0.0;
    for (int n = 0; n <= 30; ++n) {
        total += fock_probability(params, pi, n);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("per-qubit excited probability") {
    const DhoParams params{1.0, 0.75, 6};
    CHECK(ensemble_up_probability(params, 0.0) == 0.0);
    const double peak_t = pi / (2.0 * params.omega());
    CHECK(ensemble_up_probability(params, peak_t) ==
          doctest::Approx(0.0857142857143).epsilon(1e-9));
    const DhoParams weak{1.0, 0.3, 3};
    CHECK(ensemble_up_probability(weak, pi / weak.omega()) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("per-qubit probability matches the two-level exponential oracle") {
    const DhoParams params{1.0, 0.75, 6};
    const double theta = params.axis_angle();
    const Matrix h = params.omega() * (std::cos(theta) * Matrix(pauli_z()) +
                                       std::sin(theta) * Matrix(pauli_x()));
    for (const double t : {0.3, 1.1, pi, 4.4}) {
        const Matrix u = matrix_exponential(h, t);
        CHECK(std::norm(u(1, 0)) ==
              doctest::Approx(ensemble_up_probability(params, t))
                  .epsilon(1e-12));
    }
}

TEST_CASE("ensemble occupation distribution") {
    const DhoParams params{1.0, 0.75, 6};
    CHECK(binomial_fock_probability(params, 0.0, 0) == 1.0);
    SUBCASE("normalization is exact") {
        for (const double t : {0.7, 2.9}) {
            double total = 0.0;
            for (int n = 0; n <= 6; ++n) {
                total += binomial_fock_probability(params, t, n);
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    SUBCASE("peak value against the product-state enumeration oracle") {
        const double peak_t = pi / (2.0 * params.omega());
        const auto enumerated = enumerated_weight_distribution(params, peak_t);
        CHECK(binomial_fock_probability(params, peak_t, 1) ==
              doctest::Approx(enumerated[1]).epsilon(1e-10));
        CHECK(binomial_fock_probability(params, peak_t, 1) ==
              doctest::Approx(0.3285595769).epsilon(1e-8));
    }
    CHECK_THROWS_AS(binomial_fock_probability(params, 1.0, 7),
                    std::invalid_argument);
}

TEST_CASE("circuit reproduces the ensemble distribution exactly") {
    for (const int n_qubits : {3, 6}) {
        for (const double drive : {0.3, 0.75}) {
            const DhoParams params{1.0, drive, n_qubits};
            const double t_max = 2.0 * params.period();
            for (int j = 0; j < 21; ++j) {
                const double t = t_max * j / 20.0;
                const auto weights = enumerated_weight_distribution(params, t);
                for (int n = 0; n <= n_qubits; ++n) {
                    CHECK(std::abs(weights[static_cast<std::size_t>(n)] -
                                   binomial_fock_probability(params, t, n)) <
                          1e-10);
                }
            }
        }
    }
}

TEST_CASE("circuit structure is t-independent") {
    const DhoParams params{1.0, 0.75, 6};
    for (const double t : {0.0, 0.9, pi, 2.0 * params.period()}) {
        const Circuit circuit = build_dho_circuit(params, t);
        CHECK(circuit.is_native());
        CHECK(circuit.count(GateKind::CZ) == 0);
        CHECK(circuit.count(GateKind::SX) == 12);
        for (int q = 0; q < 6; ++q) {
            CHECK(circuit.count_on_qubit(GateKind::SX, q) == 2);
        }
    }
}

TEST_CASE("t = 0 circuit leaves the ground state untouched") {
    const DhoParams params{1.0, 0.75, 3};
    const StateVector psi = simulate(build_dho_circuit(params, 0.0));
    CHECK(std::norm(psi.amplitudes()[0]) == doctest::Approx(1.0).epsilon(1e-12));
    const CountsHistogram counts = sample_counts(psi, 512, 7);
    CHECK(counts.counts.at("000") == 512);
}

TEST_CASE("per-qubit sequence equals the axis-rotation exponential") {
    const DhoParams params{1.0, 0.75, 1};
    const double theta = params.axis_angle();
    const Matrix h = params.omega() * (std::cos(theta) * Matrix(pauli_z()) +
                                       std::sin(theta) * Matrix(pauli_x()));
    const Circuit circuit = build_dho_circuit(params, pi);
    CHECK((circuit_unitary(circuit) - matrix_exponential(h, pi))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("excitation histogram groups by Hamming weight") {
    SUBCASE("all counts on the ground string") {
        CountsHistogram counts;
        counts.counts["000"] = 10;
        counts.shots = 10;
        const auto histogram = excitation_histogram(counts);
        CHECK(histogram.at(0) == doctest::Approx(1.0));
        CHECK(histogram.size() == 1);
    }
    SUBCASE("weight-one strings merge") {
        CountsHistogram counts;
        counts.counts["001"] = 50;
        counts.counts["010"] = 30;
        counts.counts["100"] = 20;
        counts.shots = 100;
        const auto histogram = excitation_histogram(counts);
        CHECK(histogram.at(1) == doctest::Approx(1.0));
        CHECK(histogram.size() == 1);
    }
    SUBCASE("sampled histogram stays within multinomial bands") {
        const DhoParams params{1.0, 0.75, 6};
        const double peak_t = pi / (2.0 * params.omega());
        const int shots = 4096;
        const CountsHistogram counts =
            sample_counts(simulate(build_dho_circuit(params, peak_t)), shots, 3);
        const auto histogram = excitation_histogram(counts);
        for (int n = 0; n <= 6; ++n) {
            const double p = binomial_fock_probability(params, peak_t, n);
            const double sigma =
                std::sqrt(std::max(p * (1.0 - p) / shots, 1e-12));
            const auto it = histogram.find(n);
            const double observed = it == histogram.end() ? 0.0 : it->second;
            CHECK(std::abs(observed - p) <= 5.0 * sigma + 1e-9);
        }
    }
}

TEST_CASE("algorithmic gap shrinks with ensemble size") {
    const auto max_gap = [](int n_qubits, double drive) {
        const DhoParams params{1.0, drive, n_qubits};
        const double t_max = 2.0 * params.period();
        double worst = 0.0;
        for (int j = 0; j < 21; ++j) {
            const double t = t_max * j / 20.0;
            for (int n = 0; n <= 2; ++n) {
                worst = std::max(worst,
                                 std::abs(binomial_fock_probability(params, t, n) -
                                          fock_probability(params, t, n)));
            }
        }
        return worst;
    };
    double previous = 1.0;
    for (const int n_qubits : {3, 6, 11, 16, 18}) {
        const double gap = max_gap(n_qubits, 0.75);
        CHECK(gap <= previous + 1e-12);
        previous = gap;
    }
    CHECK(max_gap(7, 0.3) < 0.01);
}

TEST_CASE("weak drive ties the ensemble to the coherent amplitude") {
    const DhoParams params{1.0, 0.1, 20};
    const double t_max = 2.0 * params.period();
    for (int j = 0; j < 21; ++j) {
        const double t = t_max * j / 20.0;
        const double alpha_sq = std::norm(coherent_alpha(params, t));
        if (alpha_sq <= 1e-4) {
            continue;
        }
        const double scaled = params.n_qubits * ensemble_up_probability(params, t);
        CHECK(std::abs(scaled - alpha_sq) / alpha_sq < 0.02);
    }
}

TEST_CASE("probabilities stay within [0, 1]") {
    RngStream rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const DhoParams params{1.0, rng.next_in(0.05, 0.9),
                               1 + static_cast<int>(rng.next_below(18))};
        const double t = rng.next_in(0.0, 3.0 * params.period());
        const int n = static_cast<int>(
            rng.next_below(static_cast<std::uint64_t>(params.n_qubits) + 1));
        for (const double p :
             {fock_probability(params, t, n), ensemble_up_probability(params, t),
              binomial_fock_probability(params, t, n)}) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0 + 1e-12);
        }
    }
}
