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

#include "qvm/measurement.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qvm {
namespace {

std::string basis_label(std::uint64_t index, std::size_t num_qubits) {
    std::string label(num_qubits, '0');
    for (std::size_t qubit = 0; qubit < num_qubits; ++qubit) {
        if ((index >> (num_qubits - 1 - qubit)) & 1U) {
            label[qubit] = '1';
        }
    }
    return label;
}

} // namespace

QubitProbabilities prob_one_qubit(const Wavefunction &state,
                                  std::size_t qubit) {
    detail::require(qubit < state.num_qubits(),
                    "prob_one_qubit: qubit out of range");
    const std::size_t bit = std::size_t{1}
                            << (state.num_qubits() - qubit - 1);
    const auto amps = state.amplitudes();
    double p0 = 0.0;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if ((j & bit) == 0) {
            p0 += std::norm(amps[j]);
        }
    }
    return QubitProbabilities{p0, 1.0 - p0};
}

int collapse_one_qubit(Wavefunction &state, std::size_t qubit, Rng &rng) {
    const QubitProbabilities probs = prob_one_qubit(state, qubit);
    const int outcome = rng.uniform() < probs.p0 ? 0 : 1;
    const double kept = outcome == 0 ? probs.p0 : probs.p1;
    detail::require(kept > 0.0,
                    "collapse_one_qubit: sampled an impossible outcome");
    const double scale = 1.0 / std::sqrt(kept);

    const std::size_t bit = std::size_t{1}
                            << (state.num_qubits() - qubit - 1);
    auto amps = state.mutable_amplitudes();
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const bool consistent = ((j & bit) != 0) == (outcome == 1);
        amps[j] = consistent ? amps[j] * scale : complex_t{0.0, 0.0};
    }
    return outcome;
}

std::map<std::uint64_t, std::uint64_t>
measure_all(const Wavefunction &state, std::uint64_t shots, Rng &rng) {
    detail::require(shots > 0, "measure_all: shots must be positive");

    // Cumulative distribution over basis indices; the final entry is
    // forced to 1 so a uniform draw always lands inside the table.
    const std::vector<double> probs = state.probabilities();
    std::vector<double> cumulative(probs.size());
    double total = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        total += probs[j];
        cumulative[j] = total;
    }
    cumulative.back() = 1.0;

    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.uniform();
        const auto hit =
            std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto index = static_cast<std::uint64_t>(
            std::distance(cumulative.begin(), hit));
        ++counts[index];
    }
    return counts;
}

std::string counts_to_json(const std::map<std::uint64_t, std::uint64_t> &counts,
                           std::size_t num_qubits, std::uint64_t shots) {
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto &[index, count] : counts) {
        histogram[basis_label(index, num_qubits)] = count;
    }
    nlohmann::json doc;
    doc["counts"] = histogram;
    doc["shots"] = shots;
    return doc.dump();
}

} // namespace qvm
