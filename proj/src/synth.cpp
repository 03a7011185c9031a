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
#include "hpsim/synth.hpp"

#include <algorithm>
#include <stdexcept>

namespace hpsim {

std::vector<std::pair<int, int>> SynthLayout::cz_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(cz_cavity.size());
    for (int cavity : cz_cavity) {
        pairs.emplace_back(cavity, 2);
    }
    return pairs;
}

bool layout_couples_cavity_to_tau(const SynthLayout& layout) {
    return std::all_of(layout.cz_cavity.begin(), layout.cz_cavity.end(),
                       [](int c) { return c == 0 || c == 1; });
}

bool layout_has_balanced_participation(const SynthLayout& layout) {
    const auto count = [&](int c) {
        return std::count(layout.cz_cavity.begin(), layout.cz_cavity.end(), c);
    };
    return count(0) == count(1);
}

SynthLayout reverse_gate_order(const SynthLayout& layout) {
    SynthLayout out = layout;
    std::reverse(out.cz_cavity.begin(), out.cz_cavity.end());
    return out;
}

SynthLayout swap_cavity_indices(const SynthLayout& layout) {
    SynthLayout out = layout;
    for (int& c : out.cz_cavity) {
        c = 1 - c;
    }
    return out;
}

std::vector<SynthLayout> enumerate_four_cz_layouts() {
    // All length-4 cavity sequences with two CZs per cavity qubit, reduced
    // to the lexicographically smallest member of each orbit under
    // gate-order reversal and cavity-index exchange.
    std::vector<std::vector<int>> canonical;
    for (int bits = 0; bits < 16; ++bits) {
        std::vector<int> seq(4);
        for (int k = 0; k < 4; ++k) {
            seq[static_cast<std::size_t>(k)] = (bits >> k) & 1;
        }
        SynthLayout candidate{"", seq};
        if (!layout_has_balanced_participation(candidate)) {
            continue;
        }
        std::vector<std::vector<int>> orbit{seq};
        orbit.push_back(reverse_gate_order(candidate).cz_cavity);
        orbit.push_back(swap_cavity_indices(candidate).cz_cavity);
        orbit.push_back(
            swap_cavity_indices(reverse_gate_order(candidate)).cz_cavity);
        if (seq == *std::min_element(orbit.begin(), orbit.end())) {
            canonical.push_back(seq);
        }
    }
    std::sort(canonical.begin(), canonical.end());

    std::vector<SynthLayout> layouts;
    for (std::size_t i = 0; i < canonical.size(); ++i) {
        layouts.push_back(
            SynthLayout{"four-cz-" + std::string(1, static_cast<char>('a' + i)),
                        canonical[i]});
    }
    return layouts;
}

SynthLayout six_cz_layout() {
    return SynthLayout{"six-cz", {1, 1, 0, 0, 1, 1}};
}

double synthesis_fidelity(const Matrix& u_f, const Matrix& u_t) {
    if (u_f.rows() != u_t.rows() || u_f.cols() != u_t.cols() ||
        u_f.rows() != u_f.cols()) {
        throw std::invalid_argument("fidelity requires equal square dimensions");
    }
    const std::complex<double> overlap = (u_f.adjoint() * u_t).trace();
    const double scaled = std::abs(overlap) / static_cast<double>(u_f.rows());
    return scaled * scaled;
}

Circuit layout_circuit(const SynthLayout& layout,
                       const std::vector<U3Angles>& angles) {
    if (static_cast<int>(angles.size()) != layout.u3_slot_count()) {
        throw std::invalid_argument(
            "expected " + std::to_string(layout.u3_slot_count()) +
            " angle triples, got " + std::to_string(angles.size()));
    }
    Circuit circuit(3);
    std::size_t slot = 0;
    const auto add_u3 = [&](int q) {
        const U3Angles& a = angles[slot++];
        circuit.add(Gate::u3(q, a.alpha, a.beta, a.gamma));
    };
    add_u3(0);
    add_u3(1);
    add_u3(2);
    for (int cavity : layout.cz_cavity) {
        if (cavity != 0 && cavity != 1) {
            throw std::invalid_argument("layout references a non-cavity qubit");
        }
        circuit.add(Gate::cz(cavity, 2));
        add_u3(cavity);
        add_u3(2);
    }
    return circuit;
}

}  // namespace hpsim
