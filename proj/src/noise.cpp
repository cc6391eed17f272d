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

#include "qvm/noise.hpp"

#include "qvm/gates.hpp"

namespace qvm {

NoiseModel::NoiseModel(double probability, std::uint64_t seed)
    : p(probability), rng_seed(seed) {
    detail::require(p >= 0.0 && p <= 1.0, "NoiseModel: p must lie in [0, 1]");
}

void apply_depolarizing(Wavefunction &state, std::size_t qubit,
                        const NoiseModel &model, Rng &rng) {
    detail::require(qubit < state.num_qubits(),
                    "apply_depolarizing: qubit out of range");
    static const GateMatrix pauli_x = gate_matrix("X");
    static const GateMatrix pauli_y = gate_matrix("Y");
    static const GateMatrix pauli_z = gate_matrix("Z");

    // One draw per call even when p = 0, so a trajectory's stream position
    // depends only on how many events were sampled, not on their outcome.
    const double u = rng.uniform();
    if (u >= model.p) {
        return;
    }
    const double third = model.axis_probability();
    if (u < third) {
        apply_single(state, pauli_x, qubit);
    } else if (u < 2.0 * third) {
        apply_single(state, pauli_y, qubit);
    } else {
        apply_single(state, pauli_z, qubit);
    }
}

} // namespace qvm
