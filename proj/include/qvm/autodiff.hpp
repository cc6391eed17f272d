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

#include "qvm/gates.hpp"

#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace qvm {

/// Default shift used throughout: pi / 20.
inline constexpr double kDefaultShift = std::numbers::pi / 20.0;

/**
 * @brief Two-point parameter-shift rule with shift s and scale
 * c = 1 / (2 sin s).
 *
 * For circuits whose parameters enter through axis rotations, any
 * expectation value is sinusoidal in each parameter, so
 * c * (f(t + s) - f(t - s)) recovers df/dt exactly for every s with
 * sin(s) != 0; s is a numerical knob, not an approximation order.
 */
struct ShiftRule {
    double s;
    double c;

    explicit ShiftRule(double shift = kDefaultShift);
};

/**
 * @brief Scalar function of circuit parameters: run the circuit on
 * |0...0>, then reduce the final state with the observable callback.
 *
 * Evaluation is always noise free; gradients of noisy trajectories are
 * not defined by the shift rule.
 */
class CostFunction {
  public:
    using Observable = std::function<double(const Wavefunction &)>;

    CostFunction(ParameterizedCircuit circuit, Observable observable);

    double evaluate(std::span<const double> params) const;
    std::size_t num_params() const { return circuit_.num_params(); }
    const ParameterizedCircuit &circuit() const { return circuit_; }

  private:
    ParameterizedCircuit circuit_;
    Observable observable_;
};

/// Full gradient via the shift rule: exactly 2 * len(params) circuit
/// evaluations, two per component, all other parameters held fixed.
std::vector<double> parameter_shift_gradient(const CostFunction &cost,
                                             std::span<const double> params,
                                             const ShiftRule &rule);

/// Mean squared error (1/M) * sum (y_i - yhat_i)^2.
double mse_cost(std::span<const double> y_true,
                std::span<const double> y_pred);

/// Chain rule for a scalar loss through a scalar circuit output:
/// dC/dtheta_i = (dC/dyhat) * (dyhat/df) * (df/dtheta_i).
std::vector<double> chain_gradient(double dcost_dyhat, double dyhat_df,
                                   std::span<const double> df_dtheta);

} // namespace qvm
