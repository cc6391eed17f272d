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

#include "qvm/autodiff.hpp"

#include <cmath>

namespace qvm {

ShiftRule::ShiftRule(double shift) : s(shift) {
    // sin(s) sits in the denominator; reject shifts at (or numerically
    // indistinguishable from) multiples of pi.
    detail::require(std::abs(std::sin(shift)) > 1e-12,
                    "ShiftRule: sin(s) vanishes at this shift");
    c = 1.0 / (2.0 * std::sin(shift));
}

CostFunction::CostFunction(ParameterizedCircuit circuit, Observable observable)
    : circuit_(std::move(circuit)), observable_(std::move(observable)) {
    detail::require(static_cast<bool>(observable_),
                    "CostFunction: observable callback is empty");
}

double CostFunction::evaluate(std::span<const double> params) const {
    const Wavefunction state = run(circuit_, params);
    return observable_(state);
}

std::vector<double> parameter_shift_gradient(const CostFunction &cost,
                                             std::span<const double> params,
                                             const ShiftRule &rule) {
    detail::require(params.size() == cost.num_params(),
                    "parameter_shift_gradient: parameter count mismatch");
    std::vector<double> shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        shifted[i] = params[i] + rule.s;
        const double plus = cost.evaluate(shifted);
        shifted[i] = params[i] - rule.s;
        const double minus = cost.evaluate(shifted);
        shifted[i] = params[i];
        grad[i] = rule.c * (plus - minus);
    }
    return grad;
}

double mse_cost(std::span<const double> y_true,
                std::span<const double> y_pred) {
    detail::require(y_true.size() == y_pred.size() && !y_true.empty(),
                    "mse_cost: need equally sized, nonempty vectors");
    double total = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const double diff = y_true[i] - y_pred[i];
        total += diff * diff;
    }
    return total / static_cast<double>(y_true.size());
}

std::vector<double> chain_gradient(double dcost_dyhat, double dyhat_df,
                                   std::span<const double> df_dtheta) {
    std::vector<double> grad(df_dtheta.size());
    const double outer = dcost_dyhat * dyhat_df;
    for (std::size_t i = 0; i < df_dtheta.size(); ++i) {
        grad[i] = outer * df_dtheta[i];
    }
    return grad;
}

} // namespace qvm
