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

#include "qvm/rng.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qvm {

/// Row-major feature matrix plus one target value per row. Targets are
/// real for regression and 0/1 for classification.
struct Dataset {
    std::size_t num_features = 0;
    std::vector<double> features;
    std::vector<double> targets;

    std::size_t num_rows() const { return targets.size(); }
    double feature(std::size_t row, std::size_t col) const {
        return features[row * num_features + col];
    }
    double &feature(std::size_t row, std::size_t col) {
        return features[row * num_features + col];
    }
};

/// Per-feature min/max captured from a training split.
struct ScalingBounds {
    std::vector<double> min;
    std::vector<double> max;
};

/**
 * @brief Reads a comma-separated file with a header row.
 *
 * Columns are selected by header name, or by 0-based index when the
 * selector does not match any name. Fields must be plain numbers (no
 * quoting); failures raise io_error with file, row and column context.
 */
Dataset load_csv(const std::string &path,
                 const std::vector<std::string> &feature_columns,
                 const std::string &target_column);

/// Min/max of every feature column.
ScalingBounds fit_feature_bounds(const Dataset &data);

/// In-place x -> (x - min) / (max - min). A constant column maps to 0.
/// With clamp_unit set, results are clipped into [0, 1]; use this when the
/// bounds came from a different (training) split.
void scale_features(Dataset &data, const ScalingBounds &bounds,
                    bool clamp_unit);

/// Min and max of the target column.
std::pair<double, double> fit_target_bounds(const Dataset &data);

/// In-place y -> (y - min) / (max - min). Constant targets map to 0.
void scale_targets(Dataset &data, double min, double max);

/// Seeded shuffle split. The row order is permuted by Fisher-Yates draws
/// from the stream, then the last round(test_fraction * M) rows of the
/// permutation form the test split.
std::pair<Dataset, Dataset> shuffle_split(const Dataset &data,
                                          double test_fraction, Rng &rng);

/// Order-preserving split: first `train_rows` rows train, last `test_rows`
/// rows test. The two regions may not overlap.
std::pair<Dataset, Dataset> head_tail_split(const Dataset &data,
                                            std::size_t train_rows,
                                            std::size_t test_rows);

/// Throws unless every target is exactly 0 or 1.
void require_binary_targets(const Dataset &data);

/// Bundled single-feature regression set: x uniform in [-0.1, 0.1],
/// y = 2.5 x + 0.6 plus Gaussian noise (sigma 0.03).
Dataset synthetic_linear(std::size_t rows, std::uint64_t seed);

/// Bundled classification set in the shape of an ad-purchase table:
/// age in [18, 60], salary in [15000, 150000], binary label from a noisy
/// boundary that interacts the two features.
Dataset synthetic_purchases(std::size_t rows, std::uint64_t seed);

} // namespace qvm
