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

#include <vector>

namespace hpsim {

/// Native gate sequence realizing a single-qubit unitary on qubit q, plus
/// the global phase that makes the product match u exactly.
struct NativeSequence {
    std::vector<Gate> gates;
    double phase = 0.0;
};

/// ZXZXZ Euler synthesis with degenerate shortcuts: diagonal unitaries
/// become a lone RZ, the |cos(beta/2)| = 1/sqrt(2) family needs one SX and
/// X-like unitaries use the native X; everything else gets the full
/// RZ-SX-RZ-SX-RZ template.
NativeSequence synthesize_1q(int q, const Eigen::Matrix2cd& u);

/// Always emits the full RZ-SX-RZ-SX-RZ template (two SX), even for
/// degenerate unitaries. Used where a t-independent gate census is wanted.
NativeSequence synthesize_1q_zxzxz(int q, const Eigen::Matrix2cd& u);

/// Rewrite a circuit over the full gate vocabulary into {RZ, SX, X, CZ}.
/// Adjacent RXX/RYY on the same qubit pair fuse into a single two-CZ block;
/// an isolated RXX or RYY also compiles to two CZ. The output reproduces
/// circuit_unitary(input) exactly, including the global phase.
Circuit transpile_to_native(const Circuit& circuit);

}  // namespace hpsim
