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

#include "qvm/common.hpp"

#include <cmath>

namespace qvm {

std::vector<double> gd_step(std::span<const double> params,
                            std::span<const double> grad, double eta) {
    detail::require(params.size() == grad.size(),
                    "gd_step: gradient length does not match parameters");
    detail::require(eta > 0.0, "gd_step: eta must be positive");
    std::vector<double> next(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        next[i] = params[i] - eta * grad[i];
    }
    return next;
}

AdamState AdamState::init(std::size_t dim, double eta, double beta1,
                          double beta2, double epsilon) {
    detail::require(eta > 0.0, "AdamState: eta must be positive");
    detail::require(beta1 >= 0.0 && beta1 < 1.0,
                    "AdamState: beta1 must lie in [0, 1)");
    detail::require(beta2 >= 0.0 && beta2 < 1.0,
                    "AdamState: beta2 must lie in [0, 1)");
    detail::require(epsilon > 0.0, "AdamState: epsilon must be positive");
    AdamState state;
    state.v.assign(dim, 0.0);
    state.w.assign(dim, 0.0);
    state.eta = eta;
    state.beta1 = beta1;
    state.beta2 = beta2;
    state.epsilon = epsilon;
    return state;
}

std::pair<std::vector<double>, AdamState>
adam_step(const AdamState &state, std::span<const double> params,
          std::span<const double> grad) {
    detail::require(params.size() == state.v.size(),
                    "adam_step: parameter length does not match the state");
    detail::require(params.size() == grad.size(),
                    "adam_step: gradient length does not match parameters");

    AdamState next = state;
    std::vector<double> updated(params.size());
    const auto step = static_cast<double>(state.t);
    const double correct1 = 1.0 - std::pow(state.beta1, step + 1.0);
    const double correct2 = 1.0 - std::pow(state.beta2, step + 1.0);
    for (std::size_t i = 0; i < params.size(); ++i) {
        next.v[i] = state.beta1 * state.v[i] + (1.0 - state.beta1) * grad[i];
        next.w[i] =
            state.beta2 * state.w[i] + (1.0 - state.beta2) * grad[i] * grad[i];
        // beta < 1 is enforced at init, so the corrections lie in (0, 1].
        const double v_hat = next.v[i] / correct1;
        const double w_hat = next.w[i] / correct2;
        updated[i] =
            params[i] - state.eta * v_hat / (std::sqrt(w_hat) + state.epsilon);
    }
    next.t = state.t + 1;
    return {std::move(updated), std::move(next)};
}

} // namespace qvm
