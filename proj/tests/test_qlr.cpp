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

#include "qvm/qlr.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using qvm::Dataset;
using qvm::QlrModel;
using qvm::Rng;
using qvm::ShiftRule;

TEST_SUITE("qlr") {

TEST_CASE("readout expectation of the two-rotation qubit") {
    CHECK(qvm::qubit_expectation({0.0, 0.0}) == 1.0);
    CHECK(std::abs(qvm::qubit_expectation({std::numbers::pi, 0.0}) -
                   (-1.0)) < 1e-12);
    CHECK(std::abs(qvm::qubit_expectation({0.0, std::numbers::pi / 2})) <
          1e-12);
}

TEST_CASE("readout expectation matches the dense oracle") {
    Rng rng(31);
    qvm::ParameterizedCircuit circuit(1);
    const std::size_t t0 = circuit.add_parameter("t0");
    const std::size_t t1 = circuit.add_parameter("t1");
    circuit.add_rotation(qvm::RotationAxis::X, 0, t0);
    circuit.add_rotation(qvm::RotationAxis::Y, 0, t1);

    for (int trial = 0; trial < 20; ++trial) {
        const std::array<double, 2> params{
            (2.0 * rng.uniform() - 1.0) * std::numbers::pi,
            (2.0 * rng.uniform() - 1.0) * std::numbers::pi};
        const std::vector<double> values{params[0], params[1]};
        const std::vector<qvm::complex_t> amps =
            oracle::run_dense(circuit, values);
        const double expected = std::norm(amps[0]) - std::norm(amps[1]);
        CHECK(std::abs(qvm::qubit_expectation(params) - expected) < 1e-12);
        CHECK(std::abs(qvm::qubit_expectation(params) -
                       std::cos(params[0]) * std::cos(params[1])) < 1e-12);
    }
}

TEST_CASE("prediction combines weight, bias and boundary factor") {
    QlrModel unit;
    unit.coef_params = {0.0, 0.0};                    // <w> = 1
    unit.intercept_params = {0.0, std::numbers::pi / 2}; // <b> = 0
    unit.k = 10.0;
    const std::vector<double> half{0.5};
    const std::vector<double> pred = qvm::qlr_predict(unit, half);
    REQUIRE(pred.size() == 1);
    CHECK(pred[0] == doctest::Approx(5.0).epsilon(1e-10));

    CHECK(qvm::qlr_predict(unit, {}).empty());

    QlrModel biased;
    biased.coef_params = {0.0, std::numbers::pi / 2};  // <w> = 0
    biased.intercept_params = {std::numbers::pi, 0.0}; // <b> = -1
    biased.k = 10.0;
    const std::vector<double> three{3.0};
    CHECK(qvm::qlr_predict(biased, three)[0] ==
          doctest::Approx(-10.0).epsilon(1e-10));
}

TEST_CASE("closed-form least squares") {
    Dataset two;
    two.num_features = 1;
    two.features = {1.0, 2.0};
    two.targets = {1.0, 2.0};
    const qvm::OlsFit identity = qvm::ols_solve(two);
    CHECK(identity.slope == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(identity.intercept == doctest::Approx(0.0).epsilon(1e-14));

    Dataset flat;
    flat.num_features = 1;
    flat.features = {0.0, 1.0};
    flat.targets = {1.0, 1.0};
    const qvm::OlsFit horizontal = qvm::ols_solve(flat);
    CHECK(horizontal.slope == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(horizontal.intercept == doctest::Approx(1.0).epsilon(1e-14));

    Dataset three;
    three.num_features = 1;
    three.features = {0.0, 1.0, 2.0};
    three.targets = {0.0, 1.0, 1.0};
    const qvm::OlsFit fit = qvm::ols_solve(three);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(fit.intercept == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

    Dataset degenerate;
    degenerate.num_features = 1;
    degenerate.features = {1.0, 1.0};
    degenerate.targets = {0.0, 1.0};
    CHECK_THROWS_AS(qvm::ols_solve(degenerate), std::invalid_argument);
}

TEST_CASE("training recovers a noiseless linear law") {
    Dataset data;
    data.num_features = 1;
    for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        data.features.push_back(x);
        data.targets.push_back(0.5 * x);
    }

    // The boundary factor k = 1 scales the gradients down relative to the
    // defaults, so this clean-data run gets a larger step size instead.
    Rng rng(3);
    const qvm::QlrTrainResult result =
        qvm::qlr_train(data, 1.0, 0.1, 3000, ShiftRule(), rng);

    CHECK(std::abs(result.model.weight() - 0.5) < 0.02);
    CHECK(std::abs(result.model.bias() - 0.0) < 0.02);
    REQUIRE(result.loss_trace.size() == 3000);
    CHECK(result.loss_trace.back() < result.loss_trace.front());
}

TEST_CASE("zero iterations return the random initialization untouched") {
    Dataset data;
    data.num_features = 1;
    data.features = {0.0, 1.0};
    data.targets = {0.0, 1.0};

    Rng rng(5);
    const double first_draw = Rng(5).normal();
    const qvm::QlrTrainResult result =
        qvm::qlr_train(data, 10.0, 0.01, 0, ShiftRule(), rng);
    CHECK(result.loss_trace.empty());
    CHECK(result.model.k == 10.0);
    CHECK(result.model.coef_params[0] == first_draw);
}

TEST_CASE("training is seed deterministic") {
    const Dataset data = qvm::synthetic_linear(50, 917);
    Rng a(12);
    Rng b(12);
    const auto run_a = qvm::qlr_train(data, 10.0, 0.01, 50, ShiftRule(), a);
    const auto run_b = qvm::qlr_train(data, 10.0, 0.01, 50, ShiftRule(), b);
    CHECK(run_a.model.coef_params == run_b.model.coef_params);
    CHECK(run_a.model.intercept_params == run_b.model.intercept_params);
    CHECK(run_a.loss_trace == run_b.loss_trace);
}

TEST_CASE("training validates its inputs") {
    Dataset data;
    data.num_features = 2;
    data.features = {0.0, 1.0};
    data.targets = {0.5};
    Rng rng(1);
    CHECK_THROWS_AS(qvm::qlr_train(data, 10.0, 0.01, 1, ShiftRule(), rng),
                    std::invalid_argument);

    Dataset good;
    good.num_features = 1;
    good.features = {0.0, 1.0};
    good.targets = {0.0, 1.0};
    CHECK_THROWS_AS(qvm::qlr_train(good, 0.0, 0.01, 1, ShiftRule(), rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(qvm::qlr_train(good, 10.0, -0.01, 1, ShiftRule(), rng),
                    std::invalid_argument);
}

} // TEST_SUITE
