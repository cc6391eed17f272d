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
#include <map>
#include <string>

namespace qvm {

/// Marginal outcome probabilities of one qubit. p0 sums |alpha_j|^2 over
/// indices with the qubit bit clear; p1 is defined as 1 - p0, so the two
/// always add to one exactly.
struct QubitProbabilities {
    double p0 = 0.0;
    double p1 = 0.0;
};

QubitProbabilities prob_one_qubit(const Wavefunction &state,
                                  std::size_t qubit);

/// Samples one outcome for the qubit and collapses the register: the
/// inconsistent amplitudes are zeroed and the survivors are rescaled by
/// 1/sqrt(p) so the state stays normalized. Returns the outcome (0 or 1).
int collapse_one_qubit(Wavefunction &state, std::size_t qubit, Rng &rng);

/// Draws `shots` independent full-register outcomes from |alpha_j|^2
/// without touching the state. Keys are basis indices; absent keys mean a
/// count of zero.
std::map<std::uint64_t, std::uint64_t>
measure_all(const Wavefunction &state, std::uint64_t shots, Rng &rng);

/// Histogram as JSON: {"counts": {"010": 7, ...}, "shots": 1024} with
/// basis labels in the register's bit order (qubit 0 leftmost).
std::string counts_to_json(const std::map<std::uint64_t, std::uint64_t> &counts,
                           std::size_t num_qubits, std::uint64_t shots);

} // namespace qvm
