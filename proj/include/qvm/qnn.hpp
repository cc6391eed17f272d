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
#include "qvm/optimizers.hpp"
#include "qvm/rng.hpp"
#include "qvm/wavefunction.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace qvm {

/**
 * @brief Variational classifier parameters: one RX and one RY angle per
 * qubit per layer, stored flat in (layer, qubit, rotation) row-major
 * order, plus the sigmoid sharpness gamma.
 */
struct QnnParams {
    std::size_t layers = 0;
    std::size_t num_qubits = 0;
    std::vector<double> theta;
    double gamma = 10.0;

    /// Draws all angles from the standard normal, in flat index order.
    static QnnParams init(std::size_t layers, std::size_t num_qubits,
                          double gamma, Rng &rng);

    std::size_t index(std::size_t layer, std::size_t qubit,
                      std::size_t rotation) const {
        return (layer * num_qubits + qubit) * 2 + rotation;
    }
    double at(std::size_t layer, std::size_t qubit,
              std::size_t rotation) const {
        return theta[index(layer, qubit, rotation)];
    }
};

/// Product-state encoding of a scaled sample: qubit j carries
/// sqrt(x_j)|0> + sqrt(1 - x_j)|1>. Features must lie in [0, 1].
Wavefunction encode_sample(std::span<const double> scaled_features);

/// The ansatz: per layer, RX and RY on every qubit (parameters in the
/// QnnParams flat order) followed by the entangling ring CNOT(0,1) ...
/// CNOT(N-2,N-1), CNOT(N-1,0). A single-qubit register gets no CNOTs.
ParameterizedCircuit qnn_circuit(std::size_t num_qubits, std::size_t layers);

/// Readout score S = sigmoid(gamma * (p0 - p1)) where p_j is the
/// probability that qubit j measures 1. Needs at least two qubits.
double decode_prediction(const Wavefunction &state, double gamma);

/// Label-conditional prediction: yhat(0) = S, yhat(1) = 1 - S.
double conditional_prediction(double score, int label);

/// Score for a single scaled sample under the given parameters.
double qnn_forward(const QnnParams &params, std::span<const double> sample);

/// Mean squared conditional loss (1/M) * sum (1 - yhat_m(y_m))^2.
double qnn_cost(const QnnParams &params, const Dataset &data);

/// Full parameter gradient of qnn_cost: the loss factor comes from the
/// unshifted prediction, the circuit factor from one shift-rule pass per
/// parameter per sample.
std::vector<double> qnn_gradient(const QnnParams &params, const Dataset &data,
                                 const ShiftRule &rule);

/// counts[y][yhat] over paired label/prediction vectors.
std::array<std::array<std::uint64_t, 2>, 2>
confusion_matrix(std::span<const int> labels, std::span<const int> predicted);

struct QnnTrainConfig {
    std::size_t layers = 5;
    std::size_t iters = 150;
    double eta = 0.1;
    double shift = kDefaultShift;
    double gamma = 10.0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-6;
    /// Probability of skipping a parameter's update in a given iteration;
    /// 0 disables the draw entirely.
    double drop_rate = 0.0;
};

struct QnnTrainResult {
    QnnParams params;
    /// Metric traces indexed by completed iterations (entry 0 is the
    /// untrained model, entry `iters` the final one).
    std::vector<double> train_loss;
    std::vector<double> train_acc;
    std::vector<double> test_loss;
    std::vector<double> test_acc;
};

/// Adam training loop. `test` may be null; when present, test metrics are
/// recorded on the same schedule as the training metrics. The stream
/// seeds the parameter draw and any dropout decisions.
QnnTrainResult qnn_train(const Dataset &train, const Dataset *test,
                         const QnnTrainConfig &config, Rng &rng);

} // namespace qvm
