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

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qvm {

/// Plain gradient descent: returns params - eta * grad.
std::vector<double> gd_step(std::span<const double> params,
                            std::span<const double> grad, double eta);

/**
 * @brief Adam state: first and second moment accumulators plus the step
 * counter and hyperparameters.
 *
 * The counter t starts at 0; bias correction inside a step divides by
 * 1 - beta^(t+1) and t is incremented afterwards, so the very first step
 * with beta1 = 0.9, beta2 = 0.999, eps = 1e-8, eta = 0.1 and gradient 1
 * moves the parameter by 0.0999999990 (eta / (1 + eps), since both moment
 * estimates debias to exactly the gradient).
 */
struct AdamState {
    std::vector<double> v; // first moment
    std::vector<double> w; // second moment
    std::uint64_t t = 0;
    double eta = 0.1;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static AdamState init(std::size_t dim, double eta, double beta1 = 0.9,
                          double beta2 = 0.999, double epsilon = 1e-8);
};

/// One Adam update. Pure: consumes a state, returns the new parameters
/// and the advanced state without mutating the inputs.
std::pair<std::vector<double>, AdamState>
adam_step(const AdamState &state, std::span<const double> params,
          std::span<const double> grad);

} // namespace qvm
