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

#include "hpsim/calibration.hpp"
#include "hpsim/circuit.hpp"
#include "hpsim/noise.hpp"
#include "hpsim/rng.hpp"
#include "hpsim/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hpsim {

/// Precompiled noisy execution of one native circuit: gates grouped into
/// independent qubit components (split at two-qubit couplings) with their
/// error channels attached. Compiling once amortizes the channel setup
/// across shots.
class NoisyExecutionPlan {
  public:
    NoisyExecutionPlan(const Circuit& circuit, const CalibrationTable& table);

    int n_qubits() const { return n_qubits_; }

    /// One stochastic trajectory: Kraus jumps after every physical gate,
    /// Born sampling of the final state, then independent readout flips.
    std::string sample(RngStream& rng) const;

  private:
    struct LocalChannel {
        NoiseChannel::Kind kind;
        double parameter;
        std::array<int, 2> qubits;
        int arity;
    };
    struct Step {
        Gate gate;  // targets remapped to component-local indices
        std::vector<LocalChannel> channels;
    };
    struct Component {
        std::vector<int> qubits;  // global indices, ascending
        std::vector<Step> steps;
    };

    void apply_channel(StateVector& state, const LocalChannel& channel,
                       RngStream& rng) const;

    int n_qubits_;
    std::vector<Component> components_;
    std::vector<double> readout_error_;
};

/// Single noisy trajectory of a native circuit (convenience wrapper).
std::string sample_noisy_trajectory(const Circuit& circuit,
                                    const CalibrationTable& table,
                                    RngStream& rng);

/// Monte-Carlo histogram over independent trajectories. Shot s draws from
/// the stream derived from (seed, s), so the histogram is identical for
/// any worker count. threads = 0 picks the hardware concurrency.
CountsHistogram run_noisy(const Circuit& circuit, const CalibrationTable& table,
                          int shots, std::uint64_t seed, int threads = 0);

}  // namespace hpsim
