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

#include "qvm/optimizers.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

using qvm::AdamState;

TEST_SUITE("optimizers") {

TEST_CASE("plain descent steps") {
    const std::vector<double> frozen{1.0};
    const std::vector<double> zero{0.0};
    CHECK(qvm::gd_step(frozen, zero, 0.5) == std::vector<double>{1.0});

    const std::vector<double> grad{2.0};
    CHECK(qvm::gd_step(frozen, grad, 0.1) == std::vector<double>{0.8});

    const std::vector<double> pair{0.0, 0.0};
    const std::vector<double> pair_grad{1.0, -1.0};
    CHECK(qvm::gd_step(pair, pair_grad, 0.5) ==
          std::vector<double>{-0.5, 0.5});

    CHECK_THROWS_AS(qvm::gd_step(frozen, pair_grad, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(qvm::gd_step(frozen, grad, 0.0), std::invalid_argument);
}

TEST_CASE("adam init validates hyperparameters") {
    const AdamState state = AdamState::init(3, 0.1);
    CHECK(state.v == std::vector<double>(3, 0.0));
    CHECK(state.w == std::vector<double>(3, 0.0));
    CHECK(state.t == 0);
    CHECK(state.epsilon == 1e-8);

    CHECK_THROWS_AS(AdamState::init(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(AdamState::init(3, 0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(AdamState::init(3, 0.1, 0.9, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(AdamState::init(3, 0.1, 0.9, 0.999, 0.0),
                    std::invalid_argument);
}

TEST_CASE("zero gradient leaves parameters in place") {
    const AdamState state = AdamState::init(2, 0.1);
    const std::vector<double> params{0.4, -0.7};
    const std::vector<double> zero{0.0, 0.0};
    const auto [updated, next] = qvm::adam_step(state, params, zero);
    CHECK(updated == params);
    CHECK(next.v == zero);
    CHECK(next.w == zero);
    CHECK(next.t == 1);
}

TEST_CASE("first step with unit gradient") {
    const AdamState state = AdamState::init(1, 0.1);
    const std::vector<double> params{0.0};
    const std::vector<double> grad{1.0};
    const auto [updated, next] = qvm::adam_step(state, params, grad);

    // v-hat and w-hat are both exactly 1 after bias correction, so the
    // step is eta / (1 + epsilon).
    CHECK(std::abs(updated[0] - (-0.0999999990)) < 1e-9);
    CHECK(next.v[0] == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(next.w[0] == doctest::Approx(0.001).epsilon(1e-15));
    CHECK(next.t == 1);

    // The input state is value-passed, not mutated.
    CHECK(state.t == 0);
    CHECK(state.v[0] == 0.0);
}

TEST_CASE("constant gradient matches the scalar recurrence") {
    // Independent rebuild of the update rule on plain doubles.
    const double eta = 0.05;
    const double beta1 = 0.9;
    const double beta2 = 0.999;
    const double epsilon = 1e-8;

    double ref_theta = 1.0;
    double ref_v = 0.0;
    double ref_w = 0.0;

    AdamState state = AdamState::init(1, eta, beta1, beta2, epsilon);
    std::vector<double> params{1.0};
    const std::vector<double> grad{1.0};

    for (int step = 0; step < 200; ++step) {
        ref_v = beta1 * ref_v + (1.0 - beta1) * 1.0;
        ref_w = beta2 * ref_w + (1.0 - beta2) * 1.0;
        const double v_hat = ref_v / (1.0 - std::pow(beta1, step + 1));
        const double w_hat = ref_w / (1.0 - std::pow(beta2, step + 1));
        const double previous = ref_theta;
        ref_theta -= eta * v_hat / (std::sqrt(w_hat) + epsilon);

        auto [updated, next] = qvm::adam_step(state, params, grad);
        params = std::move(updated);
        state = std::move(next);

        CHECK(std::abs(params[0] - ref_theta) < 1e-12);
        CHECK(params[0] < previous);
    }
}

TEST_CASE("adam step validates dimensions") {
    const AdamState state = AdamState::init(2, 0.1);
    const std::vector<double> params{0.0};
    const std::vector<double> grad{1.0};
    CHECK_THROWS_AS(qvm::adam_step(state, params, grad),
                    std::invalid_argument);
}

} // TEST_SUITE
