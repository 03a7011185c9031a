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
#include "hpsim/dho.hpp"

#include "hpsim/transpile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hpsim {

using std::numbers::pi;

double DhoParams::displacement() const {
    if (delta == 0.0) {
        throw std::domain_error(
            "resonant drive (delta = 0) has no displaced origin");
    }
    return -drive / (std::sqrt(2.0) * delta);
}

double DhoParams::omega() const {
    if (n_qubits < 1) {
        throw std::invalid_argument("ensemble needs at least one qubit");
    }
    const double az = delta / 2.0;
    const double ax = drive / (2.0 * std::sqrt(static_cast<double>(n_qubits)));
    return std::hypot(az, ax);
}

double DhoParams::axis_angle() const {
    if (n_qubits < 1) {
        throw std::invalid_argument("ensemble needs at least one qubit");
    }
    return std::atan2(drive / (2.0 * std::sqrt(static_cast<double>(n_qubits))),
                      delta / 2.0);
}

double DhoParams::period() const {
    return pi / omega();
}

std::complex<double> coherent_alpha(const DhoParams& params, double t) {
    const double d0 = params.displacement();
    return (d0 / std::sqrt(2.0)) *
           std::complex<double>(1.0 - std::cos(params.delta * t),
                                std::sin(params.delta * t));
}

double fock_probability(const DhoParams& params, double t, int n) {
    if (n < 0) {
        throw std::invalid_argument("occupation number must be non-negative");
    }
    const double d0 = params.displacement();
    const double s = std::sin(params.delta * t / 2.0);
    const double alpha_sq = 2.0 * d0 * d0 * s * s;
    if (alpha_sq == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    return std::exp(static_cast<double>(n) * std::log(alpha_sq) - alpha_sq -
                    std::lgamma(static_cast<double>(n) + 1.0));
}

double ensemble_up_probability(const DhoParams& params, double t) {
    const double om = params.omega();
    const double s = std::sin(om * t);
    const double amplitude = params.drive * params.drive /
                             (4.0 * static_cast<double>(params.n_qubits) * om * om);
    return amplitude * s * s;
}

double binomial_fock_probability(const DhoParams& params, double t, int n) {
    const int N = params.n_qubits;
    if (n < 0 || n > N) {
        throw std::invalid_argument("occupation number must be in 0..N");
    }
    const double p = ensemble_up_probability(params, t);
    // C(N,n) p^n (1-p)^{N-n} built multiplicatively so the sum over n is
    // exactly one.
    double binom = 1.0;
    for (int k = 1; k <= n; ++k) {
        binom *= static_cast<double>(N - n + k) / static_cast<double>(k);
    }
    return binom * std::pow(p, n) * std::pow(1.0 - p, N - n);
}

Circuit build_dho_circuit(const DhoParams& params, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    const double om = params.omega();
    const double angle = params.axis_angle();

    // e^{-i om t sigma_n} with n in the x-z plane; all qubits are identical.
    const double c = std::cos(om * t);
    const double s = std::sin(om * t);
    Eigen::Matrix2cd u;
    u << std::complex<double>(c, -s * std::cos(angle)),
        std::complex<double>(0.0, -s * std::sin(angle)),
        std::complex<double>(0.0, -s * std::sin(angle)),
        std::complex<double>(c, s * std::cos(angle));

    Circuit circuit(params.n_qubits);
    for (int q = 0; q < params.n_qubits; ++q) {
        NativeSequence seq = synthesize_1q_zxzxz(q, u);
        for (const auto& gate : seq.gates) {
            circuit.add(gate);
        }
        circuit.global_phase += seq.phase;
    }
    return circuit;
}

std::map<int, double> excitation_histogram(const CountsHistogram& counts) {
    std::map<int, double> histogram;
    if (counts.shots <= 0) {
        return histogram;
    }
    for (const auto& [bits, count] : counts.counts) {
        int weight = 0;
        for (char b : bits) {
            weight += (b == '1') ? 1 : 0;
        }
        histogram[weight] += static_cast<double>(count) / counts.shots;
    }
    return histogram;
}

}  // namespace hpsim
