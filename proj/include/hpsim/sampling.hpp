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

#include "hpsim/state_vector.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace hpsim {

struct CountsHistogram {
    std::map<std::string, int> counts;
    int shots = 0;

    void record(const std::string& bitstring) {
        ++counts[bitstring];
        ++shots;
    }
    double frequency(const std::string& bitstring) const {
        auto it = counts.find(bitstring);
        return it == counts.end() ? 0.0
                                  : static_cast<double>(it->second) / shots;
    }
};

/// Sample measurement outcomes from |amplitude|^2. Each shot draws from its
/// own stream derived from (seed, shot index), so the histogram does not
/// depend on how shots are scheduled.
CountsHistogram sample_counts(const StateVector& state, int shots,
                              std::uint64_t seed);

}  // namespace hpsim
