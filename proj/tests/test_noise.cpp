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

#include "qvm/measurement.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

using qvm::complex_t;
using qvm::NoiseModel;
using qvm::Rng;
using qvm::Wavefunction;

TEST_SUITE("noise") {

TEST_CASE("model validates the probability") {
    CHECK_THROWS_AS(NoiseModel(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(NoiseModel(1.5), std::invalid_argument);
    CHECK(NoiseModel(0.3).axis_probability() ==
          doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("p = 0 never disturbs the state but still consumes one draw") {
    const NoiseModel model(0.0);
    Rng used(9);
    Rng witness(9);

    Rng state_rng(10);
    for (int trial = 0; trial < 5; ++trial) {
        const std::vector<complex_t> amps = oracle::random_state(2, state_rng);
        Wavefunction state = Wavefunction::from_amplitudes(amps);
        qvm::apply_depolarizing(state, 1, model, used);
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(state.amplitude(j) == amps[j]);
        }
        witness.uniform();
    }
    // Both streams advanced by the same five draws.
    CHECK(used.next_u64() == witness.next_u64());
}

TEST_CASE("p = 1 picks each Pauli axis one third of the time") {
    const NoiseModel model(1.0);
    Rng rng(42);
    const int draws = 10000;
    int counts[3] = {0, 0, 0};
    for (int trial = 0; trial < draws; ++trial) {
        Wavefunction state(1);
        qvm::apply_depolarizing(state, 0, model, rng);
        const complex_t a0 = state.amplitude(0);
        const complex_t a1 = state.amplitude(1);
        if (std::abs(a1.real()) > 0.5) {
            ++counts[0]; // X|0> = |1>
        } else if (std::abs(a1.imag()) > 0.5) {
            ++counts[1]; // Y|0> = i|1>
        } else {
            REQUIRE(std::abs(a0) > 0.5); // Z|0> = |0>
            ++counts[2];
        }
    }
    const double expected = draws / 3.0;
    double chi2 = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        const double delta = counts[axis] - expected;
        chi2 += delta * delta / expected;
    }
    // 99.9th percentile of chi-squared with 2 dof; the seed is fixed, so
    // this is a deterministic check that the split is close to uniform.
    CHECK(chi2 < 13.8);
}

TEST_CASE("trajectory average reproduces the density-matrix channel") {
    const double p = 0.3;
    CHECK(oracle::depolarized_z_on_zero(p) ==
          doctest::Approx(1.0 - 4.0 * p / 3.0).epsilon(1e-15));

    const NoiseModel model(p);
    Rng rng(123);
    const int shots = 100000;
    double sum = 0.0;
    for (int trial = 0; trial < shots; ++trial) {
        Wavefunction state(1);
        qvm::apply_depolarizing(state, 0, model, rng);
        const qvm::QubitProbabilities probs = qvm::prob_one_qubit(state, 0);
        sum += probs.p0 - probs.p1;
    }
    const double mean = sum / shots;
    CHECK(std::abs(mean - oracle::depolarized_z_on_zero(p)) < 0.01);
}

TEST_CASE("qubit index is validated") {
    const NoiseModel model(0.5);
    Rng rng(1);
    Wavefunction state(2);
    CHECK_THROWS_AS(qvm::apply_depolarizing(state, 2, model, rng),
                    std::invalid_argument);
}

} // TEST_SUITE
