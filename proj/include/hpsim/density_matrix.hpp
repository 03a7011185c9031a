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

#include <vector>

namespace hpsim {

/// Exact outcome distribution of a noisy native circuit: full
/// density-matrix evolution under the same channel set as the trajectory
/// sampler, followed by the readout confusion map. Capped at 6 qubits;
/// serves as the oracle the Monte-Carlo path is validated against.
std::vector<double> density_matrix_reference(const Circuit& circuit,
                                             const CalibrationTable& table);

}  // namespace hpsim
