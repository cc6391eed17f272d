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

#include "qvm/rng.hpp"
#include "qvm/wavefunction.hpp"

#include <cstdint>

namespace qvm {

/**
 * @brief Symmetric depolarizing channel in trajectory form.
 *
 * With probability p the state suffers a Pauli error, split evenly across
 * the three axes (px = py = pz = p / 3); with probability 1 - p it is left
 * alone. Each application consumes exactly one uniform draw from the
 * caller's stream, so a seed fixes the whole error trajectory.
 */
struct NoiseModel {
    double p = 0.0;
    std::uint64_t rng_seed = 0;

    explicit NoiseModel(double probability, std::uint64_t seed = 0);

    double axis_probability() const { return p / 3.0; }
    Rng make_rng() const { return Rng(rng_seed); }
};

/// Applies one depolarizing event to the given qubit: draws u in [0, 1)
/// and applies X for u < p/3, Y for u < 2p/3, Z for u < p, else nothing.
/// The state stays normalized because every branch is unitary.
void apply_depolarizing(Wavefunction &state, std::size_t qubit,
                        const NoiseModel &model, Rng &rng);

} // namespace qvm
