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

#include "qvm/rng.hpp"

#include "qvm/common.hpp"

#include <cmath>
#include <numbers>

namespace qvm {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on two fresh uniforms. u1 is shifted away from zero so the
    // logarithm stays finite.
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::size_t Rng::index(std::size_t bound) {
    detail::require(bound > 0, "Rng::index: bound must be positive");
    return static_cast<std::size_t>(next_u64() % bound);
}

} // namespace qvm
