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
#include "hpsim/sampling.hpp"

#include "hpsim/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hpsim {

CountsHistogram sample_counts(const StateVector& state, int shots,
                              std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const std::vector<double> probs = state.probabilities();
    std::vector<double> cumulative(probs.size());
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        total += probs[i];
        cumulative[i] = total;
    }
    // Guard the final bin against rounding so every draw lands somewhere.
    cumulative.back() = std::max(cumulative.back(), 1.0);

    CountsHistogram histogram;
    for (int shot = 0; shot < shots; ++shot) {
        RngStream stream = RngStream::derive(seed, static_cast<std::uint64_t>(shot));
        const double u = stream.next_double() * total;
        const auto it =
            std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::uint64_t index = static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                     static_cast<std::ptrdiff_t>(probs.size()) - 1));
        histogram.record(index_to_bitstring(index, state.n_qubits()));
    }
    return histogram;
}

}  // namespace hpsim
