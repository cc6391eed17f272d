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

#include "doctest.h"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

using qvm::complex_t;
using qvm::Wavefunction;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_SUITE("wavefunction") {

TEST_CASE("fresh register is |0...0>") {
    const Wavefunction one(1);
    CHECK(one.num_qubits() == 1);
    CHECK(one.dim() == 2);
    CHECK(one.amplitude(0) == complex_t{1.0, 0.0});
    CHECK(one.amplitude(1) == complex_t{0.0, 0.0});

    const Wavefunction two(2);
    CHECK(two.dim() == 4);
    CHECK(two.amplitude(0) == complex_t{1.0, 0.0});
    for (std::size_t j = 1; j < 4; ++j) {
        CHECK(two.amplitude(j) == complex_t{0.0, 0.0});
    }
}

TEST_CASE("register size limits") {
    CHECK_THROWS_AS(Wavefunction(0), std::invalid_argument);
    CHECK_THROWS_AS(Wavefunction(Wavefunction::kMaxQubits + 1),
                    std::invalid_argument);
}

TEST_CASE("from_amplitudes validates shape and norm") {
    CHECK_NOTHROW(Wavefunction::from_amplitudes({1.0, 0.0}));
    CHECK_THROWS_AS(Wavefunction::from_amplitudes({1.0, 0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Wavefunction::from_amplitudes({complex_t{1.0, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Wavefunction::from_amplitudes({0.5, 0.5}),
                    std::invalid_argument);

    const Wavefunction state =
        Wavefunction::from_amplitudes({0.0, complex_t{0.0, 1.0}});
    CHECK(state.num_qubits() == 1);
    CHECK(state.amplitude(1) == complex_t{0.0, 1.0});
}

TEST_CASE("probabilities are squared moduli") {
    const Wavefunction uniform =
        Wavefunction::from_amplitudes({kInvSqrt2, kInvSqrt2});
    CHECK(uniform.probabilities()[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(uniform.probabilities()[1] == doctest::Approx(0.5).epsilon(1e-15));

    const Wavefunction basis(1);
    CHECK(basis.probabilities() == std::vector<double>{1.0, 0.0});

    const Wavefunction mixed =
        Wavefunction::from_amplitudes({0.6, complex_t{0.0, 0.8}});
    CHECK(mixed.probabilities()[0] == doctest::Approx(0.36).epsilon(1e-15));
    CHECK(mixed.probabilities()[1] == doctest::Approx(0.64).epsilon(1e-15));
    CHECK(mixed.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("amplitude bounds checking") {
    const Wavefunction state(1);
    CHECK_THROWS_AS(state.amplitude(2), std::invalid_argument);
}

TEST_CASE("braket rendering") {
    CHECK(Wavefunction(1).to_braket() == "(1.000000+0.000000j)|0⟩");

    const Wavefunction uniform =
        Wavefunction::from_amplitudes({kInvSqrt2, kInvSqrt2});
    CHECK(uniform.to_braket() ==
          "(0.707107+0.000000j)|0⟩ + (0.707107+0.000000j)|1⟩");

    // Zero-amplitude terms are omitted entirely.
    const Wavefunction excited = Wavefunction::from_amplitudes({0.0, 1.0});
    CHECK(excited.to_braket() == "(1.000000+0.000000j)|1⟩");
    CHECK(excited.to_braket().find("|0⟩") == std::string::npos);

    // Qubit 0 is the leftmost label position: index 2 of two qubits
    // is |10>.
    const Wavefunction ten =
        Wavefunction::from_amplitudes({0.0, 0.0, 1.0, 0.0});
    CHECK(ten.to_braket() == "(1.000000+0.000000j)|10⟩");
}

TEST_CASE("csv dump is schema stable") {
    std::ostringstream out;
    Wavefunction(1).dump_csv(out);
    CHECK(out.str() == "index,re,im\n0,1,0\n1,0,0\n");
}

TEST_CASE("adopt swaps buffers and counts writes") {
    Wavefunction state(1);
    CHECK(state.amplitude_writes() == 0);

    state.adopt({0.0, 1.0});
    CHECK(state.amplitude_writes() == 2);
    CHECK(state.amplitude(1) == complex_t{1.0, 0.0});

    state.adopt({1.0, 0.0});
    CHECK(state.amplitude_writes() == 4);

    CHECK_THROWS_AS(state.adopt({1.0, 0.0, 0.0, 0.0}),
                    std::invalid_argument);
}

} // TEST_SUITE
