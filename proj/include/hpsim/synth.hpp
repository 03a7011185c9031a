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

#include <string>
#include <vector>

namespace hpsim {

struct U3Angles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Fixed 3-qubit entangling layout: qubits 0 and 1 carry the cavity mode,
/// qubit 2 is tau, and every CZ couples one cavity qubit with tau. The
/// layout is the ordered sequence of cavity indices, one per CZ.
struct SynthLayout {
    std::string label;
    std::vector<int> cz_cavity;

    int cz_count() const { return static_cast<int>(cz_cavity.size()); }
    std::vector<std::pair<int, int>> cz_pairs() const;
    /// One initial layer on all three qubits, then a slot on both qubits
    /// touched by each CZ.
    int u3_slot_count() const { return 3 + 2 * cz_count(); }
};

/// Selection criteria as executable predicates.
bool layout_couples_cavity_to_tau(const SynthLayout& layout);       // (2)
bool layout_has_balanced_participation(const SynthLayout& layout);  // (1)
SynthLayout reverse_gate_order(const SynthLayout& layout);          // (3) transforms
SynthLayout swap_cavity_indices(const SynthLayout& layout);

/// The distinct four-CZ layouts satisfying the criteria, deduplicated up to
/// gate-order reversal and cavity-index exchange. Exactly three.
std::vector<SynthLayout> enumerate_four_cz_layouts();

/// The six-CZ layout mirroring a single symmetrized product-formula step.
SynthLayout six_cz_layout();

/// |Tr(U_f^dag U_T) / dim|^2 for equal-dimension unitaries.
double synthesis_fidelity(const Matrix& u_f, const Matrix& u_t);

/// Interleave the U3 layers with the layout's CZ gates. Angle order:
/// initial layer on qubits 0,1,2, then per CZ the touched cavity qubit
/// followed by tau.
Circuit layout_circuit(const SynthLayout& layout,
                       const std::vector<U3Angles>& angles);

}  // namespace hpsim
