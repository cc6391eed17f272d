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
#include "qvm/noise.hpp"
#include "qvm/wavefunction.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qvm {

/// Dense row-major unitary block of dimension 2^k. Row and column bit
/// patterns follow the target list order with targets[0] most significant,
/// which for k = 1 is the usual |0>, |1> basis.
struct GateMatrix {
    std::size_t dim = 0;
    std::vector<complex_t> elems;

    GateMatrix() = default;
    GateMatrix(std::size_t dimension, std::vector<complex_t> entries);

    complex_t at(std::size_t row, std::size_t col) const {
        return elems[row * dim + col];
    }
};

/// Max-norm unitarity check: every entry of U^dagger U differs from the
/// identity by less than tol.
bool is_unitary(const GateMatrix &matrix, double tol = 1e-12);

enum class RotationAxis { X, Y, Z };

/// Fixed gate by name: H, X, Y, Z, SX (square root of X) or CNOT.
/// Unknown names raise std::invalid_argument.
GateMatrix gate_matrix(std::string_view name);

/// RX, RY or RZ at the given angle, e.g. RX(theta) =
/// [[cos(theta/2), -i sin(theta/2)], [-i sin(theta/2), cos(theta/2)]].
GateMatrix rotation_matrix(RotationAxis axis, double theta);

/**
 * @brief One circuit instruction: a unitary block, where it acts, and an
 * optional parameter binding.
 *
 * When `param` is set the op is a rotation whose matrix is rebuilt from the
 * bound parameter value on every run; `axis` records which rotation.
 * `controls` holds at most one qubit. All matrices must be unitary within
 * 1e-12.
 */
struct GateOp {
    std::string name;
    GateMatrix matrix;
    std::vector<std::size_t> targets;
    std::vector<std::size_t> controls;
    std::optional<std::size_t> param;
    std::optional<RotationAxis> axis;
};

/// Builds an unplaced GateOp from a gate name. Rotation names (RX, RY, RZ)
/// require the angle argument; fixed gates reject it.
GateOp named_gate(std::string_view name, std::optional<double> angle = {});

/// Applies a 2x2 unitary to one qubit. Walks amplitude pairs that differ
/// only in the target bit (stride 2^(N - target - 1)) and writes each
/// output amplitude exactly once into a fresh buffer, so the cost is one
/// pass over the 2^N amplitudes regardless of which qubit is hit.
void apply_single(Wavefunction &state, const GateMatrix &matrix,
                  std::size_t target);

/// Controlled version of apply_single: pairs whose control bit is 0 are
/// copied through untouched. CNOT is apply_controlled with X.
void apply_controlled(Wavefunction &state, const GateMatrix &matrix,
                      std::size_t control, std::size_t target);

/// Applies a 2^k x 2^k unitary block to k distinct target qubits by
/// gathering each group of 2^k coupled amplitudes, multiplying through the
/// block, and scattering the results. Still a single pass over the state.
void apply_general(Wavefunction &state, const GateMatrix &matrix,
                   std::span<const std::size_t> targets);

/**
 * @brief Gate list over a fixed register width with named parameters.
 *
 * Parameters enter only through axis rotations (RX, RY, RZ), whose
 * generators square to the identity; that is what makes the two-point
 * parameter-shift rule exact for expectation values of this circuit.
 */
class ParameterizedCircuit {
  public:
    explicit ParameterizedCircuit(std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_params() const { return param_names_.size(); }
    std::size_t num_ops() const { return ops_.size(); }
    const std::vector<GateOp> &ops() const { return ops_; }
    const std::vector<std::string> &param_names() const { return param_names_; }

    /// Declares a parameter and returns its index. Names must be unique.
    std::size_t add_parameter(std::string name);

    /// Fixed single-qubit gate by name (H, X, Y, Z, SX).
    void add_gate(std::string_view name, std::size_t target);

    /// Rotation bound to a declared parameter.
    void add_rotation(RotationAxis axis, std::size_t target,
                      std::size_t param_index);

    /// Rotation at a constant angle.
    void add_fixed_rotation(RotationAxis axis, std::size_t target,
                            double angle);

    void add_cnot(std::size_t control, std::size_t target);

    /// Arbitrary unitary block on explicit targets.
    void add_unitary(GateMatrix matrix, std::vector<std::size_t> targets,
                     std::string label = "U");

    /// Appends a fully specified op after validating placement, matrix
    /// unitarity and parameter references.
    void add_op(GateOp op);

  private:
    std::size_t num_qubits_;
    std::vector<GateOp> ops_;
    std::vector<std::string> param_names_;
};

/// Runs the circuit on |0...0> with the given parameter values (one per
/// declared parameter, in declaration order).
Wavefunction run(const ParameterizedCircuit &circuit,
                 std::span<const double> params);

/// Noisy variant: after every gate, one depolarizing event is applied to
/// every qubit of the register, drawing from the model's seeded stream.
Wavefunction run(const ParameterizedCircuit &circuit,
                 std::span<const double> params, const NoiseModel &noise);

/// Applies the circuit to an existing state (used for encoded inputs).
void apply_ops(const ParameterizedCircuit &circuit, Wavefunction &state,
               std::span<const double> params);

/// Noisy variant of apply_ops drawing error events from the given stream.
void apply_ops(const ParameterizedCircuit &circuit, Wavefunction &state,
               std::span<const double> params, const NoiseModel &noise,
               Rng &rng);

/// ASCII wire diagram, one row per qubit in program order, e.g.
/// "q0: -H--@-" / "q1: ----X-" for H then CNOT (shown here with ASCII
/// stand-ins; the real output uses box-drawing dashes).
std::string visual_circuit(const ParameterizedCircuit &circuit);

} // namespace qvm
