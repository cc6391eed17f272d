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

#include "qvm/gates.hpp"
#include "qvm/measurement.hpp"

namespace qvm {
namespace {

/// Shift-rule derivative of qubit_expectation for both parameters. The
/// result is sample independent, which is what keeps training linear in
/// the dataset size.
std::array<double, 2> expectation_gradient(const std::array<double, 2> &params,
                                           const ShiftRule &rule) {
    std::array<double, 2> grad{};
    for (std::size_t i = 0; i < 2; ++i) {
        std::array<double, 2> shifted = params;
        shifted[i] = params[i] + rule.s;
        const double plus = qubit_expectation(shifted);
        shifted[i] = params[i] - rule.s;
        const double minus = qubit_expectation(shifted);
        grad[i] = rule.c * (plus - minus);
    }
    return grad;
}

} // namespace

double qubit_expectation(const std::array<double, 2> &params) {
    Wavefunction state(1);
    apply_single(state, rotation_matrix(RotationAxis::X, params[0]), 0);
    apply_single(state, rotation_matrix(RotationAxis::Y, params[1]), 0);
    const QubitProbabilities probs = prob_one_qubit(state, 0);
    return probs.p0 - probs.p1;
}

double QlrModel::weight() const { return k * qubit_expectation(coef_params); }

double QlrModel::bias() const { return k * qubit_expectation(intercept_params); }

std::vector<double> qlr_predict(const QlrModel &model,
                                std::span<const double> x) {
    const double slope = model.weight();
    const double intercept = model.bias();
    std::vector<double> predictions(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        predictions[i] = slope * x[i] + intercept;
    }
    return predictions;
}

OlsFit ols_solve(const Dataset &data) {
    detail::require(data.num_features == 1,
                    "ols_solve: expected a single feature column");
    const std::size_t rows = data.num_rows();
    detail::require(rows >= 2, "ols_solve: need at least two rows");

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t row = 0; row < rows; ++row) {
        mean_x += data.feature(row, 0);
        mean_y += data.targets[row];
    }
    mean_x /= static_cast<double>(rows);
    mean_y /= static_cast<double>(rows);

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t row = 0; row < rows; ++row) {
        const double dx = data.feature(row, 0) - mean_x;
        sxx += dx * dx;
        sxy += dx * (data.targets[row] - mean_y);
    }
    detail::require(sxx > 0.0, "ols_solve: feature column is constant");

    OlsFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    return fit;
}

QlrTrainResult qlr_train(const Dataset &train, double k, double eta,
                         std::size_t iters, const ShiftRule &rule, Rng &rng) {
    detail::require(train.num_features == 1,
                    "qlr_train: expected a single feature column");
    detail::require(train.num_rows() >= 1, "qlr_train: empty training set");
    detail::require(k > 0.0, "qlr_train: boundary factor must be positive");
    detail::require(eta > 0.0, "qlr_train: eta must be positive");

    QlrTrainResult result;
    result.model.k = k;
    result.model.coef_params = {rng.normal(), rng.normal()};
    result.model.intercept_params = {rng.normal(), rng.normal()};
    result.loss_trace.reserve(iters);

    const auto rows = static_cast<double>(train.num_rows());
    for (std::size_t iter = 0; iter < iters; ++iter) {
        QlrModel &model = result.model;
        const double slope = model.weight();
        const double intercept = model.bias();

        // Data moments of the residual, shared by all four parameters.
        double residual_sum = 0.0;
        double residual_x_sum = 0.0;
        double loss = 0.0;
        for (std::size_t row = 0; row < train.num_rows(); ++row) {
            const double x = train.feature(row, 0);
            const double residual =
                train.targets[row] - (slope * x + intercept);
            residual_sum += residual;
            residual_x_sum += residual * x;
            loss += residual * residual;
        }
        result.loss_trace.push_back(loss / rows);

        const std::array<double, 2> coef_grad =
            expectation_gradient(model.coef_params, rule);
        const std::array<double, 2> intercept_grad =
            expectation_gradient(model.intercept_params, rule);

        // dC/dt = -(2k/M) * sum residual * x * dE/dt (and without x for
        // the intercept pair); both pairs step from the same predictions.
        const double scale = -2.0 * k / rows;
        for (std::size_t i = 0; i < 2; ++i) {
            model.coef_params[i] -=
                eta * scale * residual_x_sum * coef_grad[i];
            model.intercept_params[i] -=
                eta * scale * residual_sum * intercept_grad[i];
        }
    }
    return result;
}

} // namespace qvm
