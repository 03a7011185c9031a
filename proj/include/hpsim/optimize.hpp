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

#include "hpsim/jc.hpp"
#include "hpsim/synth.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hpsim {

struct LbfgsOptions {
    int max_iterations = 2000;
    double gradient_tolerance = 1e-10;  // infinity norm
    double cost_tolerance = 1e-14;      // absolute decrease per iteration
    int history = 10;
};

struct LbfgsResult {
    std::vector<double> x;
    double cost = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Limited-memory quasi-Newton descent (two-loop recursion, Armijo
/// backtracking). The objective fills the gradient and returns the cost.
LbfgsResult lbfgs_minimize(
    const std::function<double(const std::vector<double>&, std::vector<double>&)>&
        objective,
    std::vector<double> x0, const LbfgsOptions& options);

/// Cost C = 1 - |Tr(U_f^dag U_T)/8|^2 of a layout circuit against a fixed
/// 8x8 target, with the trace derivative available in closed form.
class LayoutCost {
  public:
    LayoutCost(SynthLayout layout, Matrix target);

    int parameter_count() const { return 3 * layout_.u3_slot_count(); }
    const SynthLayout& layout() const { return layout_; }

    double cost(const std::vector<double>& x) const;
    double cost_and_gradient(const std::vector<double>& x,
                             std::vector<double>& gradient) const;
    /// Central finite differences, for gradient validation.
    void gradient_fd(const std::vector<double>& x, std::vector<double>& gradient,
                     double step = 1e-6) const;

    static std::vector<U3Angles> unpack_angles(const std::vector<double>& x);
    static std::vector<double> pack_angles(const std::vector<U3Angles>& angles);

  private:
    struct Element {
        bool is_u3;
        int qubit;   // U3 target
        int cavity;  // CZ cavity index
        int slot;    // U3 slot number
    };

    SynthLayout layout_;
    Matrix target_adjoint_;
    std::vector<Element> elements_;
    Matrix cz_on_0_;
    Matrix cz_on_1_;
};

struct OptimizerSettings {
    int restarts = 20;
    std::uint64_t seed = 1;
    /// Stop restarting once the best cost falls below this.
    double target_cost = 1e-10;
    LbfgsOptions lbfgs;
    /// Optional warm start used for the first restart.
    std::optional<std::vector<U3Angles>> initial_angles;
};

struct SynthResult {
    SynthLayout layout;
    std::vector<U3Angles> angles;
    double fidelity = 0.0;
    double cost = 1.0;
    int restarts_used = 0;
    bool converged = false;
};

/// Multi-start minimization of 1 - F for one layout against a target
/// unitary. Deterministic for a fixed seed: restart r draws its starting
/// angles from the stream (seed, r).
SynthResult optimize_layout(const SynthLayout& layout, const Matrix& target,
                            const OptimizerSettings& settings);

/// Optimize every layout in the pool against e^{-i t H_rot} and return the
/// best result; fidelity ties (within 1e-12) break toward fewer CZ gates,
/// then pool order.
SynthResult best_layout_for_time(const JcParams& params, double t,
                                 const std::vector<SynthLayout>& pool,
                                 const OptimizerSettings& settings);

}  // namespace hpsim
