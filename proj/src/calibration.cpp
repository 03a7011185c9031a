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
#include "hpsim/calibration.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hpsim {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back("");
    }
    return fields;
}

double parse_number(const std::string& field, const std::string& origin,
                    int line_no, const std::string& what) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(field, &consumed);
        if (consumed != field.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                 ": non-numeric " + what + " '" + field + "'");
    }
}

void validate_row(const QubitCalibration& row, const std::string& origin,
                  int line_no) {
    const auto fail = [&](const std::string& msg) {
        throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                 ": " + msg);
    };
    if (row.readout_error < 0.0 || row.readout_error > 0.5) {
        fail("readout_error must be in [0, 0.5]");
    }
    if (row.sx_error < 0.0 || row.sx_error > 0.5) {
        fail("sx_error must be in [0, 0.5]");
    }
    if (row.cz_error && (*row.cz_error < 0.0 || *row.cz_error > 0.5)) {
        fail("cz_error must be in [0, 0.5]");
    }
    if (row.t1_us <= 0.0 || row.t2_us <= 0.0) {
        fail("t1_us and t2_us must be positive");
    }
    if (row.t2_us > 2.0 * row.t1_us) {
        fail("t2_us exceeds 2*t1_us");
    }
}

}  // namespace

CalibrationTable::CalibrationTable(std::vector<QubitCalibration> qubits,
                                   GateDurations durations)
    : qubits_(std::move(qubits)), durations_(durations) {
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        validate_row(qubits_[i], "<memory>", static_cast<int>(i) + 1);
    }
    if (durations_.sx_us <= 0.0 || durations_.cz_us <= 0.0 ||
        durations_.measure_us <= 0.0) {
        throw std::runtime_error("gate durations must be positive");
    }
}

CalibrationTable CalibrationTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open calibration file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

CalibrationTable CalibrationTable::parse(const std::string& text,
                                         const std::string& origin) {
    static const std::vector<std::string> kHeader = {
        "qubit", "readout_error", "sx_error", "cz_error", "t1_us", "t2_us"};

    CalibrationTable table;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    bool in_durations = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        if (stripped == "[durations]") {
            in_durations = true;
            continue;
        }
        if (in_durations) {
            const auto fields = split_csv(stripped);
            if (fields.size() != 2) {
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": durations rows are name,value");
            }
            const double value =
                parse_number(fields[1], origin, line_no, "duration");
            if (value <= 0.0) {
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": durations must be positive");
            }
            if (fields[0] == "sx_us") {
                table.durations_.sx_us = value;
            } else if (fields[0] == "cz_us") {
                table.durations_.cz_us = value;
            } else if (fields[0] == "measure_us") {
                table.durations_.measure_us = value;
            } else {
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": unknown duration '" + fields[0] + "'");
            }
            continue;
        }
        if (!saw_header) {
            const auto fields = split_csv(stripped);
            if (fields.size() != kHeader.size() ||
                !std::equal(fields.begin(), fields.end(), kHeader.begin())) {
                throw std::runtime_error(
                    origin + ":" + std::to_string(line_no) +
                    ": expected header qubit,readout_error,sx_error,"
                    "cz_error,t1_us,t2_us");
            }
            saw_header = true;
            continue;
        }
        const auto fields = split_csv(stripped);
        if (fields.size() != kHeader.size()) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": expected " +
                                     std::to_string(kHeader.size()) +
                                     " columns, got " +
                                     std::to_string(fields.size()));
        }
        QubitCalibration row;
        row.index = static_cast<int>(
            parse_number(fields[0], origin, line_no, "qubit index"));
        row.readout_error =
            parse_number(fields[1], origin, line_no, "readout_error");
        row.sx_error = parse_number(fields[2], origin, line_no, "sx_error");
        if (!fields[3].empty()) {
            row.cz_error = parse_number(fields[3], origin, line_no, "cz_error");
        }
        row.t1_us = parse_number(fields[4], origin, line_no, "t1_us");
        row.t2_us = parse_number(fields[5], origin, line_no, "t2_us");
        validate_row(row, origin, line_no);
        table.qubits_.push_back(row);
    }

    if (table.qubits_.empty()) {
        throw std::runtime_error(origin + ": no qubit rows");
    }
    return table;
}

CalibrationTable CalibrationTable::zero_noise(int n_qubits) {
    CalibrationTable table;
    for (int i = 0; i < n_qubits; ++i) {
        QubitCalibration row;
        row.index = i;
        row.readout_error = 0.0;
        row.sx_error = 0.0;
        row.cz_error = 0.0;
        row.t1_us = 1e18;
        row.t2_us = 2e18;
        table.qubits_.push_back(row);
    }
    return table;
}

const QubitCalibration& CalibrationTable::qubit(int circuit_qubit) const {
    if (circuit_qubit < 0 || circuit_qubit >= size()) {
        throw std::out_of_range("no calibration row for circuit qubit " +
                                std::to_string(circuit_qubit));
    }
    return qubits_[static_cast<std::size_t>(circuit_qubit)];
}

double CalibrationTable::cz_error_for_pair(int a, int b) const {
    const auto& qa = qubit(a);
    const auto& qb = qubit(b);
    if (qa.cz_error && qb.cz_error) {
        return std::max(*qa.cz_error, *qb.cz_error);
    }
    if (qa.cz_error) {
        return *qa.cz_error;
    }
    if (qb.cz_error) {
        return *qb.cz_error;
    }
    throw std::runtime_error("no cz_error defined for qubit pair " +
                             std::to_string(a) + "," + std::to_string(b));
}

CalibrationTable CalibrationTable::select_best_readout(int n) const {
    if (n < 1 || n > size()) {
        throw std::invalid_argument("cannot select " + std::to_string(n) +
                                    " rows from a table of " +
                                    std::to_string(size()));
    }
    std::vector<QubitCalibration> sorted = qubits_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const QubitCalibration& a, const QubitCalibration& b) {
                         return a.readout_error < b.readout_error;
                     });
    sorted.resize(static_cast<std::size_t>(n));
    CalibrationTable out;
    out.qubits_ = std::move(sorted);
    out.durations_ = durations_;
    return out;
}

}  // namespace hpsim
