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

#include <cstdint>
#include <random>

namespace qvm {

/**
 * @brief Seedable random stream shared by noise, measurement and training.
 *
 * The engine is std::mt19937_64, whose output sequence is pinned by the
 * standard, and all derived draws (uniform doubles, normals, bounded
 * indices) use the fixed transforms below rather than the distribution
 * classes from <random>, which are implementation defined. The same seed
 * therefore reproduces the same trajectory on any platform.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Next raw 64-bit engine word.
    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) using the top 53 bits of one engine word.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; generates pairs and caches the spare.
    double normal();

    /// Uniform index in [0, bound). Modulo reduction; the bias is below
    /// 2^-53 for every bound used here (datasets of a few hundred rows).
    std::size_t index(std::size_t bound);

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace qvm
