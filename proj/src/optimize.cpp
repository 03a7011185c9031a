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
#include "hpsim/optimize.hpp"

#include "hpsim/rng.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace hpsim {

using std::numbers::pi;

LbfgsResult lbfgs_minimize(
    const std::function<double(const std::vector<double>&, std::vector<double>&)>&
        objective,
    std::vector<double> x0, const LbfgsOptions& options) {
    const std::size_t n = x0.size();
    std::vector<double> x = std::move(x0);
    std::vector<double> grad(n, 0.0);
    double f = objective(x, grad);

    struct Pair {
        std::vector<double> s, y;
        double rho;
    };
    std::deque<Pair> history;

    const auto inf_norm = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double e : v) {
            m = std::max(m, std::abs(e));
        }
        return m;
    };
    const auto dot = [](const std::vector<double>& a,
                        const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += a[i] * b[i];
        }
        return s;
    };

    LbfgsResult result;
    int iteration = 0;
    for (; iteration < options.max_iterations; ++iteration) {
        if (inf_norm(grad) <= options.gradient_tolerance) {
            result.converged = true;
            break;
        }

        // Two-loop recursion for d = -H grad.
        std::vector<double> d = grad;
        std::vector<double> alpha(history.size());
        for (std::size_t k = history.size(); k-- > 0;) {
            const Pair& p = history[k];
            alpha[k] = p.rho * dot(p.s, d);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] -= alpha[k] * p.y[i];
            }
        }
        if (!history.empty()) {
            const Pair& last = history.back();
            const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
            for (double& e : d) {
                e *= gamma;
            }
        }
        for (std::size_t k = 0; k < history.size(); ++k) {
            const Pair& p = history[k];
            const double beta = p.rho * dot(p.y, d);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] += p.s[i] * (alpha[k] - beta);
            }
        }
        for (double& e : d) {
            e = -e;
        }

        double slope = dot(grad, d);
        if (slope >= 0.0) {
            // Not a descent direction; fall back to steepest descent.
            history.clear();
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = -grad[i];
            }
            slope = dot(grad, d);
            if (slope >= 0.0) {
                result.converged = true;  // gradient is numerically zero
                break;
            }
        }

        // Armijo backtracking.
        constexpr double kArmijo = 1e-4;
        double step = 1.0;
        std::vector<double> x_next(n);
        std::vector<double> grad_next(n);
        double f_next = f;
        bool accepted = false;
        for (int ls = 0; ls < 50; ++ls) {
            for (std::size_t i = 0; i < n; ++i) {
                x_next[i] = x[i] + step * d[i];
            }
            f_next = objective(x_next, grad_next);
            if (f_next <= f + kArmijo * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;  // line search stalled at the noise floor
        }

        Pair p;
        p.s.resize(n);
        p.y.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            p.s[i] = x_next[i] - x[i];
            p.y[i] = grad_next[i] - grad[i];
        }
        const double sy = dot(p.s, p.y);
        if (sy > 1e-14) {
            p.rho = 1.0 / sy;
            history.push_back(std::move(p));
            if (static_cast<int>(history.size()) > options.history) {
                history.pop_front();
            }
        }

        const double decrease = f - f_next;
        x.swap(x_next);
        grad.swap(grad_next);
        f = f_next;
        if (decrease >= 0.0 && decrease <= options.cost_tolerance) {
            result.converged = true;
            ++iteration;
            break;
        }
    }

    result.x = std::move(x);
    result.cost = f;
    result.iterations = iteration;
    return result;
}

LayoutCost::LayoutCost(SynthLayout layout, Matrix target)
    : layout_(std::move(layout)) {
    if (target.rows() != 8 || target.cols() != 8) {
        throw std::invalid_argument("layout targets are 8x8 unitaries");
    }
    target_adjoint_ = target.adjoint();
    cz_on_0_ = embed_gate(Gate::cz(0, 2), 3);
    cz_on_1_ = embed_gate(Gate::cz(1, 2), 3);

    int slot = 0;
    const auto push_u3 = [&](int q) {
        elements_.push_back(Element{true, q, -1, slot++});
    };
    push_u3(0);
    push_u3(1);
    push_u3(2);
    for (int cavity : layout_.cz_cavity) {
        if (cavity != 0 && cavity != 1) {
            throw std::invalid_argument("layout references a non-cavity qubit");
        }
        elements_.push_back(Element{false, -1, cavity, -1});
        push_u3(cavity);
        push_u3(2);
    }
}

std::vector<U3Angles> LayoutCost::unpack_angles(const std::vector<double>& x) {
    if (x.size() % 3 != 0) {
        throw std::invalid_argument("angle vector length must be divisible by 3");
    }
    std::vector<U3Angles> angles(x.size() / 3);
    for (std::size_t s = 0; s < angles.size(); ++s) {
        angles[s] = U3Angles{x[3 * s], x[3 * s + 1], x[3 * s + 2]};
    }
    return angles;
}

std::vector<double> LayoutCost::pack_angles(const std::vector<U3Angles>& angles) {
    std::vector<double> x;
    x.reserve(3 * angles.size());
    for (const auto& a : angles) {
        x.push_back(a.alpha);
        x.push_back(a.beta);
        x.push_back(a.gamma);
    }
    return x;
}

double LayoutCost::cost(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != parameter_count()) {
        throw std::invalid_argument("wrong parameter count");
    }
    Matrix u = Matrix::Identity(8, 8);
    for (const auto& e : elements_) {
        if (e.is_u3) {
            const Eigen::Matrix2cd g = u3_matrix(
                x[3 * static_cast<std::size_t>(e.slot)],
                x[3 * static_cast<std::size_t>(e.slot) + 1],
                x[3 * static_cast<std::size_t>(e.slot) + 2]);
            u = embed_1q(g, e.qubit, 3) * u;
        } else {
            u = (e.cavity == 0 ? cz_on_0_ : cz_on_1_) * u;
        }
    }
    const std::complex<double> w = (target_adjoint_ * u).trace();
    return 1.0 - std::norm(w) / 64.0;
}

double LayoutCost::cost_and_gradient(const std::vector<double>& x,
                                     std::vector<double>& gradient) const {
    if (static_cast<int>(x.size()) != parameter_count()) {
        throw std::invalid_argument("wrong parameter count");
    }
    const std::size_t m = elements_.size();

    // Forward prefixes P_j = G_j ... G_1 and gate matrices.
    std::vector<Matrix> gate(m);
    std::vector<Matrix> prefix(m + 1);
    prefix[0] = Matrix::Identity(8, 8);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& e = elements_[j];
        if (e.is_u3) {
            gate[j] = embed_1q(
                u3_matrix(x[3 * static_cast<std::size_t>(e.slot)],
                          x[3 * static_cast<std::size_t>(e.slot) + 1],
                          x[3 * static_cast<std::size_t>(e.slot) + 2]),
                e.qubit, 3);
        } else {
            gate[j] = (e.cavity == 0) ? cz_on_0_ : cz_on_1_;
        }
        prefix[j + 1] = gate[j] * prefix[j];
    }

    // w = Tr(U_T^dag U_f); dC/dtheta = -(2/64) Re(conj(w) dw/dtheta).
    const std::complex<double> w = (target_adjoint_ * prefix[m]).trace();

    // Backward accumulators A_j = U_T^dag G_m ... G_{j+1}.
    gradient.assign(x.size(), 0.0);
    Matrix suffix = target_adjoint_;
    for (std::size_t j = m; j-- > 0;) {
        const auto& e = elements_[j];
        if (e.is_u3) {
            // dw/dtheta = Tr(M dG) with M = P_{j-1} A_j; reduce M onto the
            // target qubit so each angle derivative is a 2x2 trace.
            const Matrix mfull = prefix[j] * suffix;
            Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
            const std::uint64_t step = 1ULL << e.qubit;
            for (std::uint64_t rest = 0; rest < 8; ++rest) {
                if (rest & step) {
                    continue;
                }
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        reduced(b, a) += mfull(
                            static_cast<Eigen::Index>(rest | (b ? step : 0)),
                            static_cast<Eigen::Index>(rest | (a ? step : 0)));
                    }
                }
            }
            const double alpha = x[3 * static_cast<std::size_t>(e.slot)];
            const double beta = x[3 * static_cast<std::size_t>(e.slot) + 1];
            const double gamma = x[3 * static_cast<std::size_t>(e.slot) + 2];
            const Eigen::Matrix2cd d_list[3] = {
                u3_matrix_dalpha(alpha, beta, gamma),
                u3_matrix_dbeta(alpha, beta, gamma),
                u3_matrix_dgamma(alpha, beta, gamma)};
            for (int k = 0; k < 3; ++k) {
                std::complex<double> dw{0.0, 0.0};
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        dw += d_list[k](a, b) * reduced(b, a);
                    }
                }
                gradient[3 * static_cast<std::size_t>(e.slot) +
                         static_cast<std::size_t>(k)] =
                    -(2.0 / 64.0) * (std::conj(w) * dw).real();
            }
        }
        suffix = suffix * gate[j];
    }
    return 1.0 - std::norm(w) / 64.0;
}

void LayoutCost::gradient_fd(const std::vector<double>& x,
                             std::vector<double>& gradient, double step) const {
    gradient.assign(x.size(), 0.0);
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + step;
        const double plus = cost(probe);
        probe[i] = x[i] - step;
        const double minus = cost(probe);
        probe[i] = x[i];
        gradient[i] = (plus - minus) / (2.0 * step);
    }
}

SynthResult optimize_layout(const SynthLayout& layout, const Matrix& target,
                            const OptimizerSettings& settings) {
    if (!is_unitary(target, 1e-8)) {
        throw std::invalid_argument("synthesis target must be unitary");
    }
    const LayoutCost cost(layout, target);
    const auto objective = [&cost](const std::vector<double>& x,
                                   std::vector<double>& grad) {
        return cost.cost_and_gradient(x, grad);
    };

    SynthResult best;
    best.layout = layout;
    best.cost = 2.0;
    int restarts_used = 0;
    for (int r = 0; r < settings.restarts; ++r) {
        std::vector<double> x0;
        if (r == 0 && settings.initial_angles) {
            x0 = LayoutCost::pack_angles(*settings.initial_angles);
            if (static_cast<int>(x0.size()) != cost.parameter_count()) {
                throw std::invalid_argument("warm-start angle count mismatch");
            }
        } else {
            RngStream rng = RngStream::derive(settings.seed,
                                              static_cast<std::uint64_t>(r));
            x0.resize(static_cast<std::size_t>(cost.parameter_count()));
            for (double& v : x0) {
                v = rng.next_in(-pi, pi);
            }
        }
        const LbfgsResult run = lbfgs_minimize(objective, std::move(x0),
                                               settings.lbfgs);
        ++restarts_used;
        if (run.cost < best.cost) {
            best.cost = run.cost;
            best.angles = LayoutCost::unpack_angles(run.x);
            best.converged = run.converged;
        }
        if (best.cost < settings.target_cost) {
            break;
        }
    }
    best.restarts_used = restarts_used;
    // Store the fidelity exactly as a recomputation from the angles would
    // produce it.
    const Matrix realized = circuit_unitary(layout_circuit(layout, best.angles));
    best.fidelity = synthesis_fidelity(realized, target);
    best.cost = 1.0 - best.fidelity;
    return best;
}

SynthResult best_layout_for_time(const JcParams& params, double t,
                                 const std::vector<SynthLayout>& pool,
                                 const OptimizerSettings& settings) {
    if (pool.empty()) {
        throw std::invalid_argument("layout pool is empty");
    }
    const Matrix target =
        matrix_exponential(build_jc_hamiltonian(params, true), t);
    SynthResult best;
    bool have_best = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        SynthResult candidate = optimize_layout(pool[i], target, settings);
        if (!have_best) {
            best = std::move(candidate);
            have_best = true;
            continue;
        }
        constexpr double kTie = 1e-12;
        if (candidate.fidelity > best.fidelity + kTie ||
            (std::abs(candidate.fidelity - best.fidelity) <= kTie &&
             candidate.layout.cz_count() < best.layout.cz_count())) {
            best = std::move(candidate);
        }
    }
    return best;
}

}  // namespace hpsim
