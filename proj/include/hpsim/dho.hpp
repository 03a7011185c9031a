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
#include "hpsim/sampling.hpp"

#include <complex>
#include <map>

namespace hpsim {

/// Driven-harmonic-oscillator parameters in the rotating frame: detuning
/// delta, drive amplitude, and the size of the qubit ensemble standing in
/// for the boson mode. All quantities are dimensionless (hbar = 1).
struct DhoParams {
    double delta = 1.0;
    double drive = 0.75;
    int n_qubits = 6;

    /// Displaced origin d0 = -drive / (sqrt(2) delta). Requires delta != 0.
    double displacement() const;
    /// Per-qubit rotation frequency sqrt((delta/2)^2 + (drive/(2 sqrt N))^2).
    double omega() const;
    /// Polar angle of the rotation axis from +z, atan2(drive/(2 sqrt N), delta/2).
    double axis_angle() const;
    /// Oscillation period pi / omega().
    double period() const;
};

/// Coherent-state amplitude (d0/sqrt 2)[1 - cos(delta t) + i sin(delta t)].
std::complex<double> coherent_alpha(const DhoParams& params, double t);

/// Boson-mode occupation e^{-|a|^2} |a|^{2n} / n! with
/// |a(t)|^2 = 2 d0^2 sin^2(delta t / 2).
double fock_probability(const DhoParams& params, double t, int n);

/// Per-qubit excited probability (drive^2 / (4 N omega^2)) sin^2(omega t).
double ensemble_up_probability(const DhoParams& params, double t);

/// Ensemble occupation C(N,n) p^n (1-p)^{N-n} with p the per-qubit excited
/// probability; sums to one exactly over n = 0..N.
double binomial_fock_probability(const DhoParams& params, double t, int n);

/// N-qubit native circuit realizing e^{-i omega t sigma_n} on every qubit
/// as a fixed RZ-SX-RZ-SX-RZ template, so the physical gate census (two SX
/// per qubit, no two-qubit gates) is identical for all t.
Circuit build_dho_circuit(const DhoParams& params, double t);

/// Group counts by Hamming weight: spin-down is bit 0, so the weight is the
/// excitation number. Returns the normalized weight distribution.
std::map<int, double> excitation_histogram(const CountsHistogram& counts);

}  // namespace hpsim
