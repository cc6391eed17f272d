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

#include "qvm/dataset.hpp"

#include "qvm/common.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qvm {
namespace {

std::vector<std::string> split_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ',')) {
        // Trim spaces and a trailing CR from files with Windows endings.
        const auto first = cell.find_first_not_of(" \t\r");
        const auto last = cell.find_last_not_of(" \t\r");
        cells.push_back(first == std::string::npos
                            ? std::string()
                            : cell.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::size_t resolve_column(const std::vector<std::string> &header,
                           const std::string &selector,
                           const std::string &path) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == selector) {
            return i;
        }
    }
    // Fall back to a 0-based index for headerless-style selectors.
    std::size_t index = 0;
    const auto [end, err] = std::from_chars(
        selector.data(), selector.data() + selector.size(), index);
    if (err != std::errc{} || end != selector.data() + selector.size() ||
        index >= header.size()) {
        throw io_error(path + ": no column named '" + selector + "'");
    }
    return index;
}

double parse_cell(const std::string &cell, const std::string &path,
                  std::size_t row, std::size_t col) {
    double value = 0.0;
    const auto [end, err] =
        std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (err != std::errc{} || end != cell.data() + cell.size()) {
        throw io_error(path + ":" + std::to_string(row) +
                       ": cannot parse '" + cell + "' in column " +
                       std::to_string(col));
    }
    return value;
}

Dataset take_rows(const Dataset &data, const std::vector<std::size_t> &rows) {
    Dataset out;
    out.num_features = data.num_features;
    out.features.reserve(rows.size() * data.num_features);
    out.targets.reserve(rows.size());
    for (std::size_t row : rows) {
        for (std::size_t col = 0; col < data.num_features; ++col) {
            out.features.push_back(data.feature(row, col));
        }
        out.targets.push_back(data.targets[row]);
    }
    return out;
}

} // namespace

Dataset load_csv(const std::string &path,
                 const std::vector<std::string> &feature_columns,
                 const std::string &target_column) {
    detail::require(!feature_columns.empty(),
                    "load_csv: need at least one feature column");
    std::ifstream file(path);
    if (!file) {
        throw io_error("load_csv: cannot open '" + path + "'");
    }

    std::string line;
    if (!std::getline(file, line)) {
        throw io_error(path + ": missing header row");
    }
    const std::vector<std::string> header = split_line(line);

    std::vector<std::size_t> feature_idx;
    for (const std::string &selector : feature_columns) {
        feature_idx.push_back(resolve_column(header, selector, path));
    }
    const std::size_t target_idx =
        resolve_column(header, target_column, path);

    Dataset data;
    data.num_features = feature_idx.size();
    std::size_t row = 1;
    while (std::getline(file, line)) {
        ++row;
        if (line.empty() || line == "\r") {
            continue;
        }
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            throw io_error(path + ":" + std::to_string(row) + ": expected " +
                           std::to_string(header.size()) + " fields, got " +
                           std::to_string(cells.size()));
        }
        for (std::size_t col : feature_idx) {
            data.features.push_back(parse_cell(cells[col], path, row, col));
        }
        data.targets.push_back(
            parse_cell(cells[target_idx], path, row, target_idx));
    }
    if (data.targets.empty()) {
        throw io_error(path + ": no data rows");
    }
    return data;
}

ScalingBounds fit_feature_bounds(const Dataset &data) {
    detail::require(data.num_rows() > 0, "fit_feature_bounds: empty dataset");
    ScalingBounds bounds;
    bounds.min.assign(data.num_features, 0.0);
    bounds.max.assign(data.num_features, 0.0);
    for (std::size_t col = 0; col < data.num_features; ++col) {
        double lo = data.feature(0, col);
        double hi = lo;
        for (std::size_t row = 1; row < data.num_rows(); ++row) {
            lo = std::min(lo, data.feature(row, col));
            hi = std::max(hi, data.feature(row, col));
        }
        bounds.min[col] = lo;
        bounds.max[col] = hi;
    }
    return bounds;
}

void scale_features(Dataset &data, const ScalingBounds &bounds,
                    bool clamp_unit) {
    detail::require(bounds.min.size() == data.num_features &&
                        bounds.max.size() == data.num_features,
                    "scale_features: bounds do not match the feature count");
    for (std::size_t col = 0; col < data.num_features; ++col) {
        const double span = bounds.max[col] - bounds.min[col];
        for (std::size_t row = 0; row < data.num_rows(); ++row) {
            double &cell = data.feature(row, col);
            cell = span == 0.0 ? 0.0 : (cell - bounds.min[col]) / span;
            if (clamp_unit) {
                cell = std::clamp(cell, 0.0, 1.0);
            }
        }
    }
}

std::pair<double, double> fit_target_bounds(const Dataset &data) {
    detail::require(data.num_rows() > 0, "fit_target_bounds: empty dataset");
    const auto [lo, hi] =
        std::minmax_element(data.targets.begin(), data.targets.end());
    return {*lo, *hi};
}

void scale_targets(Dataset &data, double min, double max) {
    const double span = max - min;
    for (double &y : data.targets) {
        y = span == 0.0 ? 0.0 : (y - min) / span;
    }
}

std::pair<Dataset, Dataset> shuffle_split(const Dataset &data,
                                          double test_fraction, Rng &rng) {
    detail::require(test_fraction > 0.0 && test_fraction < 1.0,
                    "shuffle_split: test fraction must lie in (0, 1)");
    const std::size_t rows = data.num_rows();
    const auto test_rows = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(rows)));
    detail::require(test_rows >= 1 && test_rows < rows,
                    "shuffle_split: split leaves an empty side");

    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = rows - 1; i > 0; --i) {
        std::swap(order[i], order[rng.index(i + 1)]);
    }

    const std::vector<std::size_t> train_rows(order.begin(),
                                              order.end() - test_rows);
    const std::vector<std::size_t> test_idx(order.end() - test_rows,
                                            order.end());
    return {take_rows(data, train_rows), take_rows(data, test_idx)};
}

std::pair<Dataset, Dataset> head_tail_split(const Dataset &data,
                                            std::size_t train_rows,
                                            std::size_t test_rows) {
    detail::require(train_rows >= 1 && test_rows >= 1,
                    "head_tail_split: both splits must be nonempty");
    detail::require(train_rows + test_rows <= data.num_rows(),
                    "head_tail_split: splits overlap or exceed the dataset");
    std::vector<std::size_t> head(train_rows);
    std::iota(head.begin(), head.end(), 0);
    std::vector<std::size_t> tail(test_rows);
    std::iota(tail.begin(), tail.end(), data.num_rows() - test_rows);
    return {take_rows(data, head), take_rows(data, tail)};
}

void require_binary_targets(const Dataset &data) {
    for (double y : data.targets) {
        detail::require(y == 0.0 || y == 1.0,
                        "require_binary_targets: labels must be 0 or 1");
    }
}

Dataset synthetic_linear(std::size_t rows, std::uint64_t seed) {
    detail::require(rows >= 2, "synthetic_linear: need at least two rows");
    Rng rng(seed);
    Dataset data;
    data.num_features = 1;
    data.features.reserve(rows);
    data.targets.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const double x = -0.1 + 0.2 * rng.uniform();
        data.features.push_back(x);
        data.targets.push_back(2.5 * x + 0.6 + 0.03 * rng.normal());
    }
    return data;
}

Dataset synthetic_purchases(std::size_t rows, std::uint64_t seed) {
    detail::require(rows >= 2, "synthetic_purchases: need at least two rows");
    Rng rng(seed);
    Dataset data;
    data.num_features = 2;
    data.features.reserve(rows * 2);
    data.targets.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const double age_unit = rng.uniform();
        const double salary_unit = rng.uniform();
        data.features.push_back(18.0 + 42.0 * age_unit);
        data.features.push_back(15000.0 + 135000.0 * salary_unit);
        // Purchases concentrate among older and better paid rows, with an
        // interaction term bending the boundary and noise blurring it.
        const double score = 2.2 * age_unit + 1.6 * salary_unit +
                             1.5 * age_unit * salary_unit - 2.3 +
                             0.15 * rng.normal();
        data.targets.push_back(score > 0.0 ? 1.0 : 0.0);
    }
    return data;
}

} // namespace qvm
