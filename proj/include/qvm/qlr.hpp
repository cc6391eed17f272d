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

#include "qvm/autodiff.hpp"
#include "qvm/dataset.hpp"
#include "qvm/rng.hpp"

#include <array>
#include <span>
#include <vector>

namespace qvm {

/**
 * @brief Linear model y = k * (<w> x + <b>) with both coefficients read
 * out of one-qubit circuits.
 *
 * Each coefficient is the Z expectation of RX(t0) RY(t1) |0>, which equals
 * cos(t0) cos(t1) and is therefore confined to [-1, 1]; the boundary
 * factor k rescales that interval to the regression range.
 */
struct QlrModel {
    std::array<double, 2> coef_params{};
    std::array<double, 2> intercept_params{};
    double k = 10.0;

    /// k * <w>, the effective slope.
    double weight() const;
    /// k * <b>, the effective intercept.
    double bias() const;
};

/// Z expectation of the two-rotation readout circuit: runs RX(params[0]),
/// RY(params[1]) on one qubit and returns p0 - p1 (equals
/// cos(params[0]) * cos(params[1])).
double qubit_expectation(const std::array<double, 2> &params);

/// Applies the model to a feature vector.
std::vector<double> qlr_predict(const QlrModel &model,
                                std::span<const double> x);

/// Closed-form least squares for one feature via the normal equations.
/// Needs at least two rows and a non-constant feature.
struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
};

OlsFit ols_solve(const Dataset &data);

struct QlrTrainResult {
    QlrModel model;
    /// Training MSE evaluated before each step; empty when iters = 0.
    std::vector<double> loss_trace;
};

/**
 * @brief Gradient-descent training of the quantum linear model.
 *
 * The MSE gradient splits into a data moment and a shift-rule derivative
 * of the readout expectation. The shifted expectations do not depend on
 * the sample, so each iteration costs a fixed 8 shifted readouts plus one
 * pass over the data, and both parameter pairs are updated from the same
 * pre-step predictions.
 */
QlrTrainResult qlr_train(const Dataset &train, double k, double eta,
                         std::size_t iters, const ShiftRule &rule, Rng &rng);

} // namespace qvm
