// Copyright 2026 The qvm developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvm/wavefunction.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qvm {
namespace {

/// Magnitudes below this threshold are treated as zero when printing.
constexpr double kPrintEpsilon = 1e-12;

bool is_power_of_two(std::size_t value) {
    return value != 0 && (value & (value - 1)) == 0;
}

std::size_t log2_exact(std::size_t value) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < value) {
        ++bits;
    }
    return bits;
}

std::string basis_label(std::size_t index, std::size_t num_qubits) {
    std::string label(num_qubits, '0');
    for (std::size_t qubit = 0; qubit < num_qubits; ++qubit) {
        if ((index >> (num_qubits - 1 - qubit)) & 1U) {
            label[qubit] = '1';
        }
    }
    return label;
}

} // namespace

Wavefunction::Wavefunction(std::size_t num_qubits) {
    detail::require(num_qubits >= 1, "Wavefunction: need at least one qubit");
    detail::require(num_qubits <= kMaxQubits,
                    "Wavefunction: register exceeds the " +
                        std::to_string(kMaxQubits) + "-qubit cap");
    num_qubits_ = num_qubits;
    amps_.assign(std::size_t{1} << num_qubits, complex_t{0.0, 0.0});
    amps_[0] = complex_t{1.0, 0.0};
}

Wavefunction Wavefunction::from_amplitudes(std::vector<complex_t> amplitudes) {
    detail::require(is_power_of_two(amplitudes.size()) && amplitudes.size() >= 2,
                    "from_amplitudes: length must be 2^N with N >= 1");
    const std::size_t num_qubits = log2_exact(amplitudes.size());
    detail::require(num_qubits <= kMaxQubits,
                    "from_amplitudes: register exceeds the qubit cap");
    double norm = 0.0;
    for (const complex_t &amp : amplitudes) {
        norm += std::norm(amp);
    }
    detail::require(std::abs(norm - 1.0) < kNormTolerance,
                    "from_amplitudes: vector is not normalized");
    Wavefunction result;
    result.num_qubits_ = num_qubits;
    result.amps_ = std::move(amplitudes);
    return result;
}

complex_t Wavefunction::amplitude(std::size_t index) const {
    detail::require(index < amps_.size(), "amplitude: index out of range");
    return amps_[index];
}

std::vector<double> Wavefunction::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::size_t j = 0; j < amps_.size(); ++j) {
        probs[j] = std::norm(amps_[j]);
    }
    return probs;
}

double Wavefunction::norm_squared() const {
    double total = 0.0;
    for (const complex_t &amp : amps_) {
        total += std::norm(amp);
    }
    return total;
}

std::string Wavefunction::to_braket() const {
    std::string out;
    char term[64];
    for (std::size_t j = 0; j < amps_.size(); ++j) {
        if (std::abs(amps_[j]) <= kPrintEpsilon) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        std::snprintf(term, sizeof(term), "(%.6f%+.6fj)", amps_[j].real(),
                      amps_[j].imag());
        out += term;
        out += "|" + basis_label(j, num_qubits_) + "⟩";
    }
    return out;
}

void Wavefunction::dump_csv(std::ostream &out) const {
    out << "index,re,im\n";
    char row[96];
    for (std::size_t j = 0; j < amps_.size(); ++j) {
        std::snprintf(row, sizeof(row), "%zu,%.17g,%.17g\n", j,
                      amps_[j].real(), amps_[j].imag());
        out << row;
    }
}

void Wavefunction::adopt(std::vector<complex_t> &&next) {
    detail::require(next.size() == amps_.size(),
                    "adopt: buffer length does not match the register");
    amps_ = std::move(next);
    writes_ += amps_.size();
}

} // namespace qvm
