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

#include <optional>
#include <string>
#include <vector>

namespace hpsim {

/// One calibration row. `index` is the physical qubit label from the
/// backend; circuit qubit i always uses row i of the table.
struct QubitCalibration {
    int index = 0;
    double readout_error = 0.0;
    double sx_error = 0.0;
    std::optional<double> cz_error;
    double t1_us = 1.0;
    double t2_us = 1.0;
};

struct GateDurations {
    double sx_us = 0.032;
    double cz_us = 0.1;
    double measure_us = 1.5;
};

class CalibrationTable {
  public:
    CalibrationTable() = default;
    CalibrationTable(std::vector<QubitCalibration> qubits,
                     GateDurations durations);

    /// Parse the CSV schema
    ///   qubit,readout_error,sx_error,cz_error,t1_us,t2_us
    /// (cz_error may be empty), optionally followed by a [durations]
    /// section with sx_us / cz_us / measure_us rows. Rows violating the
    /// physical constraints (probabilities in [0, 0.5], t1,t2 > 0,
    /// t2 <= 2*t1) are rejected with a row-level diagnostic.
    static CalibrationTable load(const std::string& path);
    static CalibrationTable parse(const std::string& text,
                                  const std::string& origin = "<string>");

    /// All-zero error rates; useful as the noiseless reference table.
    static CalibrationTable zero_noise(int n_qubits);

    int size() const { return static_cast<int>(qubits_.size()); }
    const QubitCalibration& qubit(int circuit_qubit) const;
    const std::vector<QubitCalibration>& qubits() const { return qubits_; }
    const GateDurations& durations() const { return durations_; }

    /// Error rate for a CZ on the given circuit-qubit pair: the largest
    /// cz_error defined on either endpoint (the tables attach the pair
    /// error to the cavity-side qubit). Throws if neither defines one.
    double cz_error_for_pair(int a, int b) const;

    /// The n rows with the smallest readout error (stable order), as a new
    /// table. Used to pick qubit subsets for ensemble experiments.
    CalibrationTable select_best_readout(int n) const;

  private:
    std::vector<QubitCalibration> qubits_;
    GateDurations durations_;
};

}  // namespace hpsim
