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
#include "hpsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace hpsim {

void ProbabilitySeries::append(double t, double value) {
    if (!points.empty() && t <= points.back().first) {
        throw std::invalid_argument("time grid must be strictly increasing");
    }
    if (value < -1e-12 || value > 1.0 + 1e-12) {
        throw std::invalid_argument("probability out of [0, 1]");
    }
    points.emplace_back(t, value);
}

double mean_abs_difference(const ProbabilitySeries& a,
                           const ProbabilitySeries& b) {
    if (a.points.size() != b.points.size() || a.points.empty()) {
        throw std::invalid_argument("series must share a non-empty grid");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < a.points.size(); ++j) {
        if (std::abs(a.points[j].first - b.points[j].first) >
            1e-9 * std::max(1.0, std::abs(a.points[j].first))) {
            throw std::invalid_argument("time grids differ at sample " +
                                        std::to_string(j));
        }
        total += std::abs(a.points[j].second - b.points[j].second);
    }
    return total / static_cast<double>(a.points.size());
}

double delta_p_e(const ProbabilitySeries& ideal,
                 const ProbabilitySeries& noisy) {
    return mean_abs_difference(ideal, noisy);
}

double delta_p_tot(const ProbabilitySeries& exact,
                   const ProbabilitySeries& noisy) {
    return mean_abs_difference(exact, noisy);
}

ErrorSummary make_error_summary(const ProbabilitySeries& exact,
                                const ProbabilitySeries& ideal,
                                const ProbabilitySeries& noisy) {
    ErrorSummary summary;
    summary.delta_p_e = delta_p_e(ideal, noisy);
    summary.delta_p_tot = delta_p_tot(exact, noisy);
    summary.delta_p_a = summary.delta_p_tot - summary.delta_p_e;
    summary.sample_count = static_cast<int>(exact.points.size());
    return summary;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("need at least two matching samples");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("degenerate x grid");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.correlation = (syy == 0.0) ? 1.0 : sxy / std::sqrt(sxx * syy);
    return fit;
}

}  // namespace hpsim
