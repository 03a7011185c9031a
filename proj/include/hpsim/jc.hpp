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
#include "hpsim/linalg.hpp"
#include "hpsim/sampling.hpp"

namespace hpsim {

/// Jaynes-Cummings parameters: cavity frequency omega0, qubit splitting
/// omegaz, coupling g, and the number of cavity-mode qubits. Qubits
/// 0..n_qubits-1 carry the cavity mode; qubit n_qubits is the coupled
/// two-level system (tau), with spin-up encoded as |1>.
struct JcParams {
    double omega0 = 1.0;
    double omegaz = 1.0;
    double g = 0.1;
    int n_qubits = 2;

    /// Rabi frequency sqrt(g^2 + (omegaz - omega0)^2 / 4).
    double rabi() const;
    /// Oscillation period pi / rabi().
    double period() const;
    int total_qubits() const { return n_qubits + 1; }
};

/// Survival probability of |vacuum, up>:
/// cos^2(Or t) + sin^2(Or t) ((omegaz - omega0)/(2 Or))^2.
double rabi_probability(const JcParams& params, double t);

/// (N+1)-qubit Hamiltonian matrix
///   (omega0/2) sum_i s_iz + (omegaz/2) tau_z
///   + (g / (2 sqrt N)) sum_i (s_ix tau_x + s_iy tau_y)
/// in the computational basis where |1> is spin-up. The rotating-frame
/// flag drops the diagonal terms, leaving the exchange interaction.
Matrix build_jc_hamiltonian(const JcParams& params, bool rotating_frame);

struct TrotterPlan {
    int steps = 1;
    /// Fuse the trailing half-step of one symmetric step with the leading
    /// half-step of the next, giving 6 + 4 (steps - 1) CZ after
    /// transpilation instead of 6 * steps.
    bool merge_boundary_half_steps = true;
};

/// Symmetrized second-order product-formula circuit for the rotating-frame
/// evolution over time t (n_qubits must be 2). Each exchange exponential is
/// an adjacent RXX/RYY pair with angle (g / sqrt N) * theta.
Circuit build_trotter_circuit(const JcParams& params, double t,
                              const TrotterPlan& plan);

/// CZ count of the transpiled product-formula circuit.
int trotter_cz_count(const TrotterPlan& plan);

/// X on tau, preparing |vacuum, up> from |0...0>.
Circuit prepare_up_circuit(int cavity_qubits);

/// repetitions x n_cz CZ gates (no single-qubit gates) following the
/// six-CZ placement cycle on 3 qubits; since CZ is self-inverse and the
/// placements repeat pairwise, the ideal circuit is the identity.
Circuit build_cz_benchmark_circuit(int n_cz, int repetitions);

/// Fraction of shots with both cavity qubits at 0 and tau at 1
/// (3-qubit histograms; tau is qubit 2).
double survival_probability(const CountsHistogram& counts);

}  // namespace hpsim
