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

#include <string>
#include <utility>
#include <vector>

namespace hpsim {

/// Probability values on a strictly increasing time grid.
struct ProbabilitySeries {
    std::string label;
    std::vector<std::pair<double, double>> points;

    void append(double t, double value);
    std::size_t size() const { return points.size(); }
};

/// Mean absolute pointwise difference of two series on the same grid:
/// (1/M) sum_j |a(t_j) - b(t_j)|. Throws on grid mismatch.
double mean_abs_difference(const ProbabilitySeries& a,
                           const ProbabilitySeries& b);

/// Hardware-induced deviation: ideal-qubit series vs noisy series.
double delta_p_e(const ProbabilitySeries& ideal, const ProbabilitySeries& noisy);

/// Total deviation: exact (boson / closed-form) series vs noisy series.
double delta_p_tot(const ProbabilitySeries& exact,
                   const ProbabilitySeries& noisy);

/// delta_p_a = delta_p_tot - delta_p_e (can be negative on synthetic data).
struct ErrorSummary {
    double delta_p_e = 0.0;
    double delta_p_tot = 0.0;
    double delta_p_a = 0.0;
    int sample_count = 0;
};

ErrorSummary make_error_summary(const ProbabilitySeries& exact,
                                const ProbabilitySeries& ideal,
                                const ProbabilitySeries& noisy);

/// Least-squares slope, intercept and correlation coefficient.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double correlation = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hpsim
