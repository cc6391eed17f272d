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

#include "qvm/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

namespace qvm {
namespace {

constexpr double kUnitaryTol = 1e-12;
constexpr complex_t kImag{0.0, 1.0};

void check_placement(std::size_t index, std::size_t num_qubits,
                     const char *what) {
    detail::require(index < num_qubits,
                    std::string(what) + ": qubit index out of range");
}

std::string axis_gate_name(RotationAxis axis) {
    switch (axis) {
    case RotationAxis::X:
        return "RX";
    case RotationAxis::Y:
        return "RY";
    default:
        return "RZ";
    }
}

/// Applies one op to the state, rebuilding rotation matrices from the
/// bound parameter value.
void apply_one(const GateOp &op, Wavefunction &state,
               std::span<const double> params) {
    GateMatrix bound;
    const GateMatrix *matrix = &op.matrix;
    if (op.param) {
        bound = rotation_matrix(*op.axis, params[*op.param]);
        matrix = &bound;
    }
    if (!op.controls.empty()) {
        apply_controlled(state, *matrix, op.controls.front(),
                         op.targets.front());
    } else if (op.targets.size() == 1) {
        apply_single(state, *matrix, op.targets.front());
    } else {
        apply_general(state, *matrix, op.targets);
    }
}

/// Number of code points in a UTF-8 string; every glyph used by the
/// circuit drawing occupies one terminal column.
std::size_t display_width(const std::string &text) {
    std::size_t width = 0;
    for (unsigned char byte : text) {
        if ((byte & 0xC0) != 0x80) {
            ++width;
        }
    }
    return width;
}

} // namespace

GateMatrix::GateMatrix(std::size_t dimension, std::vector<complex_t> entries) {
    detail::require(dimension >= 2 && (dimension & (dimension - 1)) == 0,
                    "GateMatrix: dimension must be a power of two");
    detail::require(entries.size() == dimension * dimension,
                    "GateMatrix: entry count does not match the dimension");
    dim = dimension;
    elems = std::move(entries);
}

bool is_unitary(const GateMatrix &matrix, double tol) {
    for (std::size_t row = 0; row < matrix.dim; ++row) {
        for (std::size_t col = 0; col < matrix.dim; ++col) {
            complex_t dot{0.0, 0.0};
            for (std::size_t k = 0; k < matrix.dim; ++k) {
                dot += std::conj(matrix.at(k, row)) * matrix.at(k, col);
            }
            const complex_t expected = row == col ? complex_t{1.0, 0.0}
                                                  : complex_t{0.0, 0.0};
            if (std::abs(dot - expected) >= tol) {
                return false;
            }
        }
    }
    return true;
}

GateMatrix gate_matrix(std::string_view name) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    if (name == "H") {
        return GateMatrix(2, {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2});
    }
    if (name == "X") {
        return GateMatrix(2, {0.0, 1.0, 1.0, 0.0});
    }
    if (name == "Y") {
        return GateMatrix(2, {0.0, -kImag, kImag, 0.0});
    }
    if (name == "Z") {
        return GateMatrix(2, {1.0, 0.0, 0.0, -1.0});
    }
    if (name == "SX") {
        // One square root of X: SX * SX = X.
        const complex_t plus{0.5, 0.5};
        const complex_t minus{0.5, -0.5};
        return GateMatrix(2, {plus, minus, minus, plus});
    }
    if (name == "CNOT") {
        return GateMatrix(4, {1.0, 0.0, 0.0, 0.0, //
                              0.0, 1.0, 0.0, 0.0, //
                              0.0, 0.0, 0.0, 1.0, //
                              0.0, 0.0, 1.0, 0.0});
    }
    throw std::invalid_argument("gate_matrix: unknown gate '" +
                                std::string(name) + "'");
}

GateMatrix rotation_matrix(RotationAxis axis, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (axis) {
    case RotationAxis::X:
        return GateMatrix(2, {c, -kImag * s, -kImag * s, c});
    case RotationAxis::Y:
        return GateMatrix(2, {c, -s, s, c});
    default:
        return GateMatrix(2, {std::exp(-kImag * (theta / 2.0)), 0.0, 0.0,
                              std::exp(kImag * (theta / 2.0))});
    }
}

GateOp named_gate(std::string_view name, std::optional<double> angle) {
    GateOp op;
    op.name = std::string(name);
    if (name == "RX" || name == "RY" || name == "RZ") {
        detail::require(angle.has_value(),
                        "named_gate: rotation gates need an angle");
        const RotationAxis axis = name == "RX"   ? RotationAxis::X
                                  : name == "RY" ? RotationAxis::Y
                                                 : RotationAxis::Z;
        op.axis = axis;
        op.matrix = rotation_matrix(axis, *angle);
        return op;
    }
    detail::require(!angle.has_value(),
                    "named_gate: '" + op.name + "' takes no angle");
    op.matrix = gate_matrix(name);
    return op;
}

void apply_single(Wavefunction &state, const GateMatrix &matrix,
                  std::size_t target) {
    const std::size_t n = state.num_qubits();
    check_placement(target, n, "apply_single");
    detail::require(matrix.dim == 2, "apply_single: expected a 2x2 matrix");
    detail::require(is_unitary(matrix, kUnitaryTol),
                    "apply_single: matrix is not unitary");

    // Amplitudes i and i + cut differ exactly in the target bit.
    const std::size_t cut = std::size_t{1} << (n - target - 1);
    const auto amps = state.amplitudes();
    const complex_t u00 = matrix.at(0, 0);
    const complex_t u01 = matrix.at(0, 1);
    const complex_t u10 = matrix.at(1, 0);
    const complex_t u11 = matrix.at(1, 1);

    std::vector<complex_t> next(amps.size());
    for (std::size_t base = 0; base < amps.size(); base += 2 * cut) {
        for (std::size_t low = base; low < base + cut; ++low) {
            const complex_t a0 = amps[low];
            const complex_t a1 = amps[low + cut];
            next[low] = u00 * a0 + u01 * a1;
            next[low + cut] = u10 * a0 + u11 * a1;
        }
    }
    state.adopt(std::move(next));
}

void apply_controlled(Wavefunction &state, const GateMatrix &matrix,
                      std::size_t control, std::size_t target) {
    const std::size_t n = state.num_qubits();
    check_placement(control, n, "apply_controlled");
    check_placement(target, n, "apply_controlled");
    detail::require(control != target,
                    "apply_controlled: control equals target");
    detail::require(matrix.dim == 2, "apply_controlled: expected a 2x2 matrix");
    detail::require(is_unitary(matrix, kUnitaryTol),
                    "apply_controlled: matrix is not unitary");

    const std::size_t cut = std::size_t{1} << (n - target - 1);
    const std::size_t control_bit = std::size_t{1} << (n - control - 1);
    const auto amps = state.amplitudes();
    const complex_t u00 = matrix.at(0, 0);
    const complex_t u01 = matrix.at(0, 1);
    const complex_t u10 = matrix.at(1, 0);
    const complex_t u11 = matrix.at(1, 1);

    // Control and target are distinct, so both halves of a pair share the
    // control bit; pairs with it cleared pass through unchanged.
    std::vector<complex_t> next(amps.begin(), amps.end());
    for (std::size_t base = 0; base < amps.size(); base += 2 * cut) {
        for (std::size_t low = base; low < base + cut; ++low) {
            if ((low & control_bit) == 0) {
                continue;
            }
            const complex_t a0 = amps[low];
            const complex_t a1 = amps[low + cut];
            next[low] = u00 * a0 + u01 * a1;
            next[low + cut] = u10 * a0 + u11 * a1;
        }
    }
    state.adopt(std::move(next));
}

void apply_general(Wavefunction &state, const GateMatrix &matrix,
                   std::span<const std::size_t> targets) {
    const std::size_t n = state.num_qubits();
    const std::size_t k = targets.size();
    detail::require(k >= 1 && k <= n, "apply_general: bad target count");
    detail::require(matrix.dim == (std::size_t{1} << k),
                    "apply_general: matrix dimension does not match targets");
    detail::require(is_unitary(matrix, kUnitaryTol),
                    "apply_general: matrix is not unitary");

    std::vector<std::size_t> weight(k);
    std::set<std::size_t> seen;
    for (std::size_t t = 0; t < k; ++t) {
        check_placement(targets[t], n, "apply_general");
        detail::require(seen.insert(targets[t]).second,
                        "apply_general: duplicate target");
        weight[t] = std::size_t{1} << (n - 1 - targets[t]);
    }

    // Bit slots occupied by targets, lowest first, used to spread the
    // remaining (rest) bits around them.
    std::vector<std::size_t> slots;
    for (std::size_t t = 0; t < k; ++t) {
        slots.push_back(n - 1 - targets[t]);
    }
    std::sort(slots.begin(), slots.end());

    const auto amps = state.amplitudes();
    const std::size_t block = matrix.dim;
    std::vector<complex_t> next(amps.size());
    std::vector<complex_t> gathered(block);
    std::vector<std::size_t> index(block);

    for (std::size_t rest = 0; rest < (amps.size() >> k); ++rest) {
        std::size_t base = rest;
        for (std::size_t slot : slots) {
            const std::size_t low_mask = (std::size_t{1} << slot) - 1;
            base = ((base & ~low_mask) << 1) | (base & low_mask);
        }
        for (std::size_t b = 0; b < block; ++b) {
            std::size_t j = base;
            for (std::size_t t = 0; t < k; ++t) {
                if ((b >> (k - 1 - t)) & 1U) {
                    j |= weight[t];
                }
            }
            index[b] = j;
            gathered[b] = amps[j];
        }
        for (std::size_t row = 0; row < block; ++row) {
            complex_t acc{0.0, 0.0};
            for (std::size_t col = 0; col < block; ++col) {
                acc += matrix.at(row, col) * gathered[col];
            }
            next[index[row]] = acc;
        }
    }
    state.adopt(std::move(next));
}

ParameterizedCircuit::ParameterizedCircuit(std::size_t num_qubits)
    : num_qubits_(num_qubits) {
    detail::require(num_qubits >= 1 && num_qubits <= Wavefunction::kMaxQubits,
                    "ParameterizedCircuit: invalid register width");
}

std::size_t ParameterizedCircuit::add_parameter(std::string name) {
    detail::require(!name.empty(), "add_parameter: empty name");
    for (const std::string &existing : param_names_) {
        detail::require(existing != name,
                        "add_parameter: duplicate name '" + name + "'");
    }
    param_names_.push_back(std::move(name));
    return param_names_.size() - 1;
}

void ParameterizedCircuit::add_gate(std::string_view name, std::size_t target) {
    GateOp op = named_gate(name);
    detail::require(op.matrix.dim == 2,
                    "add_gate: '" + op.name + "' is not a single-qubit gate");
    op.targets = {target};
    add_op(std::move(op));
}

void ParameterizedCircuit::add_rotation(RotationAxis axis, std::size_t target,
                                        std::size_t param_index) {
    GateOp op;
    op.name = axis_gate_name(axis);
    op.axis = axis;
    op.param = param_index;
    op.matrix = rotation_matrix(axis, 0.0);
    op.targets = {target};
    add_op(std::move(op));
}

void ParameterizedCircuit::add_fixed_rotation(RotationAxis axis,
                                              std::size_t target,
                                              double angle) {
    GateOp op = named_gate(axis_gate_name(axis), angle);
    op.targets = {target};
    add_op(std::move(op));
}

void ParameterizedCircuit::add_cnot(std::size_t control, std::size_t target) {
    GateOp op;
    op.name = "CNOT";
    op.matrix = gate_matrix("X");
    op.targets = {target};
    op.controls = {control};
    add_op(std::move(op));
}

void ParameterizedCircuit::add_unitary(GateMatrix matrix,
                                       std::vector<std::size_t> targets,
                                       std::string label) {
    GateOp op;
    op.name = std::move(label);
    op.matrix = std::move(matrix);
    op.targets = std::move(targets);
    add_op(std::move(op));
}

void ParameterizedCircuit::add_op(GateOp op) {
    detail::require(!op.targets.empty(), "add_op: op has no targets");
    detail::require(op.controls.size() <= 1,
                    "add_op: at most one control qubit is supported");
    std::set<std::size_t> seen;
    for (std::size_t target : op.targets) {
        check_placement(target, num_qubits_, "add_op");
        detail::require(seen.insert(target).second, "add_op: duplicate target");
    }
    for (std::size_t control : op.controls) {
        check_placement(control, num_qubits_, "add_op");
        detail::require(seen.insert(control).second,
                        "add_op: control overlaps a target");
        detail::require(op.targets.size() == 1,
                        "add_op: controlled blocks must have one target");
    }
    if (op.param) {
        detail::require(*op.param < param_names_.size(),
                        "add_op: parameter index out of range");
        detail::require(op.axis.has_value(),
                        "add_op: parameterized ops must be axis rotations");
        detail::require(op.targets.size() == 1,
                        "add_op: rotations act on a single qubit");
    }
    detail::require(op.matrix.dim ==
                        (std::size_t{1} << op.targets.size()),
                    "add_op: matrix dimension does not match targets");
    detail::require(is_unitary(op.matrix, kUnitaryTol),
                    "add_op: matrix is not unitary");
    ops_.push_back(std::move(op));
}

Wavefunction run(const ParameterizedCircuit &circuit,
                 std::span<const double> params) {
    Wavefunction state(circuit.num_qubits());
    apply_ops(circuit, state, params);
    return state;
}

Wavefunction run(const ParameterizedCircuit &circuit,
                 std::span<const double> params, const NoiseModel &noise) {
    Wavefunction state(circuit.num_qubits());
    Rng rng = noise.make_rng();
    apply_ops(circuit, state, params, noise, rng);
    return state;
}

void apply_ops(const ParameterizedCircuit &circuit, Wavefunction &state,
               std::span<const double> params) {
    detail::require(state.num_qubits() == circuit.num_qubits(),
                    "apply_ops: register width does not match the circuit");
    detail::require(params.size() == circuit.num_params(),
                    "apply_ops: expected " +
                        std::to_string(circuit.num_params()) +
                        " parameter values, got " +
                        std::to_string(params.size()));
    for (const GateOp &op : circuit.ops()) {
        apply_one(op, state, params);
    }
}

void apply_ops(const ParameterizedCircuit &circuit, Wavefunction &state,
               std::span<const double> params, const NoiseModel &noise,
               Rng &rng) {
    detail::require(state.num_qubits() == circuit.num_qubits(),
                    "apply_ops: register width does not match the circuit");
    detail::require(params.size() == circuit.num_params(),
                    "apply_ops: parameter count mismatch");
    for (const GateOp &op : circuit.ops()) {
        apply_one(op, state, params);
        // Every qubit is exposed to one error event after each gate.
        for (std::size_t qubit = 0; qubit < state.num_qubits(); ++qubit) {
            apply_depolarizing(state, qubit, noise, rng);
        }
    }
}

std::string visual_circuit(const ParameterizedCircuit &circuit) {
    const std::size_t n = circuit.num_qubits();
    const std::string dash = "─";
    const std::string control_dot = "●";
    const std::string cnot_target = "⊕";

    // One column per op; collect the cell text for every involved row.
    std::vector<std::vector<std::string>> cells(
        circuit.num_ops(), std::vector<std::string>(n));
    std::vector<std::size_t> widths(circuit.num_ops(), 1);
    for (std::size_t col = 0; col < circuit.num_ops(); ++col) {
        const GateOp &op = circuit.ops()[col];
        std::string label = op.name;
        if (op.param) {
            label += "(" + circuit.param_names()[*op.param] + ")";
        } else if (op.axis) {
            char angle[32];
            double theta = 2.0 * std::atan2(std::abs(op.matrix.at(1, 0)),
                                            std::abs(op.matrix.at(0, 0)));
            std::snprintf(angle, sizeof(angle), "%.3g", theta);
            label += "(" + std::string(angle) + ")";
        }
        for (std::size_t target : op.targets) {
            cells[col][target] = op.name == "CNOT" ? cnot_target : label;
        }
        for (std::size_t control : op.controls) {
            cells[col][control] = control_dot;
        }
        for (std::size_t row = 0; row < n; ++row) {
            widths[col] = std::max(widths[col], display_width(cells[col][row]));
        }
    }

    std::size_t prefix_width = 0;
    for (std::size_t row = 0; row < n; ++row) {
        prefix_width = std::max(prefix_width,
                                ("q" + std::to_string(row) + ":").size());
    }

    std::string out;
    for (std::size_t row = 0; row < n; ++row) {
        std::string prefix = "q" + std::to_string(row) + ":";
        prefix.append(prefix_width - prefix.size() + 1, ' ');
        out += prefix + dash;
        for (std::size_t col = 0; col < circuit.num_ops(); ++col) {
            const std::string &cell = cells[col][row];
            out += cell;
            for (std::size_t pad = display_width(cell); pad < widths[col] + 1;
                 ++pad) {
                out += dash;
            }
        }
        out += "\n";
    }
    return out;
}

} // namespace qvm
