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

#pragma once

#include "qvm/common.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qvm {

/**
 * @brief Dense statevector register over N qubits.
 *
 * Stores all 2^N complex amplitudes. Qubit 0 is the leftmost (most
 * significant) position of a basis label, so qubit n contributes bit
 * (j >> (N - 1 - n)) & 1 to the flat index j. |10> on two qubits is
 * amplitude index 2.
 *
 * Gate kernels never build a 2^N x 2^N operator; they rewrite amplitudes
 * through index arithmetic and hand the fresh buffer back via adopt().
 */
class Wavefunction {
  public:
    /// Hard cap on register width. 2^24 amplitudes is 256 MiB as doubles,
    /// and the double-buffered kernels momentarily hold two such arrays.
    static constexpr std::size_t kMaxQubits = 24;

    /// Tolerance on |norm^2 - 1| accepted by from_amplitudes().
    static constexpr double kNormTolerance = 1e-10;

    /// Initializes |0...0>.
    explicit Wavefunction(std::size_t num_qubits);

    /// Builds a register from explicit amplitudes. The length must be a
    /// power of two within the qubit cap and the vector must be normalized
    /// within kNormTolerance.
    static Wavefunction from_amplitudes(std::vector<complex_t> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<const complex_t> amplitudes() const { return amps_; }
    complex_t amplitude(std::size_t index) const;

    /// |alpha_j|^2 for every basis index, in index order.
    std::vector<double> probabilities() const;

    /// Sum of |alpha_j|^2. Equals 1 within tolerance for any valid state.
    double norm_squared() const;

    /// Renders the state in bra-ket notation with fixed six-decimal
    /// amplitudes, e.g. "(0.707107+0.000000j)|00> + (0.707107+0.000000j)|11>"
    /// with the ket bars printed as U+27E9. Amplitudes with magnitude below
    /// 1e-12 are omitted.
    std::string to_braket() const;

    /// Writes "index,re,im" rows (with header) for every amplitude.
    void dump_csv(std::ostream &out) const;

    /// Replaces the amplitude buffer with a freshly computed one of the
    /// same length. Gate kernels call this after filling their output
    /// buffer; the swap counts toward amplitude_writes().
    void adopt(std::vector<complex_t> &&next);

    /// Direct mutable access for measurement collapse and state encoding.
    /// Gate kernels go through adopt() instead.
    std::span<complex_t> mutable_amplitudes() { return amps_; }

    /// Running count of amplitude slots written by gate kernels since
    /// construction. A single gate on N qubits adds exactly 2^N.
    std::uint64_t amplitude_writes() const { return writes_; }

  private:
    Wavefunction() = default;

    std::size_t num_qubits_ = 0;
    std::vector<complex_t> amps_;
    std::uint64_t writes_ = 0;
};

} // namespace qvm
