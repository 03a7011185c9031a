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

#include "hpsim/gates.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hpsim {

using Complex = std::complex<double>;

/// Bit convention used throughout: qubit 0 is the least significant bit of
/// the basis index, and bitstrings are rendered most-significant qubit first
/// (qubit n-1 is the leftmost character).
std::string index_to_bitstring(std::uint64_t index, int n_qubits);
std::uint64_t bitstring_to_index(const std::string& bits);

/// Dense state vector over n qubits (n <= 24).
class StateVector {
  public:
    explicit StateVector(int n_qubits);
    static StateVector basis_state(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dimension() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    std::vector<Complex>& amplitudes() { return amplitudes_; }

    void apply(const Gate& gate);
    void apply_matrix_1q(int q, const Eigen::Matrix2cd& u);
    void apply_matrix_2q(int qa, int qb, const Eigen::Matrix4cd& u);
    void scale(Complex factor);

    double norm_squared() const;
    /// Probability that qubit q reads 1.
    double excited_population(int q) const;
    std::vector<double> probabilities() const;

    /// Project qubit q onto |outcome> and renormalize.
    void collapse_qubit(int q, int outcome);

  private:
    void check_target(int q) const;

    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

}  // namespace hpsim
