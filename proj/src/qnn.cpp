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

#include "qvm/qnn.hpp"

#include "qvm/measurement.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace qvm {
namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

int label_of(double target) { return target == 1.0 ? 1 : 0; }

/// Everything that stays fixed across evaluations at different angles:
/// the ansatz and the encoded input states.
struct Prepared {
    ParameterizedCircuit circuit;
    std::vector<Wavefunction> encoded;
    std::vector<int> labels;
};

Prepared prepare(const QnnParams &params, const Dataset &data) {
    detail::require(params.num_qubits == data.num_features,
                    "qnn: dataset features do not match the qubit count");
    detail::require(data.num_rows() >= 1, "qnn: empty dataset");
    require_binary_targets(data);

    Prepared prep{qnn_circuit(params.num_qubits, params.layers), {}, {}};
    prep.encoded.reserve(data.num_rows());
    prep.labels.reserve(data.num_rows());
    std::vector<double> sample(data.num_features);
    for (std::size_t row = 0; row < data.num_rows(); ++row) {
        for (std::size_t col = 0; col < data.num_features; ++col) {
            sample[col] = data.feature(row, col);
        }
        prep.encoded.push_back(encode_sample(sample));
        prep.labels.push_back(label_of(data.targets[row]));
    }
    return prep;
}

/// Readout probabilities (qubit 0 and 1 measuring 1) for one sample at
/// the given angles.
std::array<double, 2> readout(const Prepared &prep, std::size_t row,
                              std::span<const double> theta) {
    Wavefunction state = prep.encoded[row];
    apply_ops(prep.circuit, state, theta);
    return {prob_one_qubit(state, 0).p1, prob_one_qubit(state, 1).p1};
}

std::vector<double> score_all(const Prepared &prep,
                              std::span<const double> theta, double gamma) {
    std::vector<double> scores(prep.encoded.size());
    for (std::size_t row = 0; row < prep.encoded.size(); ++row) {
        const std::array<double, 2> probs = readout(prep, row, theta);
        scores[row] = sigmoid(gamma * (probs[0] - probs[1]));
    }
    return scores;
}

double cost_of_scores(const std::vector<double> &scores,
                      const std::vector<int> &labels) {
    double total = 0.0;
    for (std::size_t row = 0; row < scores.size(); ++row) {
        const double miss =
            1.0 - conditional_prediction(scores[row], labels[row]);
        total += miss * miss;
    }
    return total / static_cast<double>(scores.size());
}

double accuracy_of_scores(const std::vector<double> &scores,
                          const std::vector<int> &labels) {
    std::size_t hits = 0;
    for (std::size_t row = 0; row < scores.size(); ++row) {
        const int predicted = scores[row] >= 0.5 ? 0 : 1;
        hits += predicted == labels[row] ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(scores.size());
}

/// Shift-rule gradient given precomputed unshifted scores. `active` masks
/// which parameters to differentiate (dropout); inactive entries stay 0.
std::vector<double> gradient_impl(const Prepared &prep,
                                  const QnnParams &params,
                                  const ShiftRule &rule,
                                  const std::vector<double> &scores,
                                  const std::vector<char> &active) {
    const std::size_t count = params.theta.size();
    const auto rows = static_cast<double>(prep.encoded.size());
    std::vector<double> grad(count, 0.0);
    std::vector<double> shifted = params.theta;

    for (std::size_t i = 0; i < count; ++i) {
        if (!active[i]) {
            continue;
        }
        double total = 0.0;
        for (std::size_t row = 0; row < prep.encoded.size(); ++row) {
            shifted[i] = params.theta[i] + rule.s;
            const std::array<double, 2> plus = readout(prep, row, shifted);
            shifted[i] = params.theta[i] - rule.s;
            const std::array<double, 2> minus = readout(prep, row, shifted);
            shifted[i] = params.theta[i];

            // d(p0 - p1)/dtheta_i for this sample by the shift rule.
            const double circuit_part =
                rule.c * ((plus[0] - minus[0]) - (plus[1] - minus[1]));

            // dC_m/dS through the conditional square loss and sigmoid.
            const double score = scores[row];
            const int label = prep.labels[row];
            const double miss =
                1.0 - conditional_prediction(score, label);
            const double sign = label == 0 ? 1.0 : -1.0;
            const double loss_part =
                -2.0 * miss * sign * score * (1.0 - score);

            total += loss_part * params.gamma * circuit_part;
        }
        grad[i] = total / rows;
    }
    return grad;
}

} // namespace

QnnParams QnnParams::init(std::size_t layers, std::size_t num_qubits,
                          double gamma, Rng &rng) {
    detail::require(layers >= 1, "QnnParams: need at least one layer");
    detail::require(num_qubits >= 1 &&
                        num_qubits <= Wavefunction::kMaxQubits,
                    "QnnParams: invalid qubit count");
    detail::require(gamma > 0.0, "QnnParams: gamma must be positive");
    QnnParams params;
    params.layers = layers;
    params.num_qubits = num_qubits;
    params.gamma = gamma;
    params.theta.resize(layers * num_qubits * 2);
    for (double &angle : params.theta) {
        angle = rng.normal();
    }
    return params;
}

Wavefunction encode_sample(std::span<const double> scaled_features) {
    detail::require(!scaled_features.empty(),
                    "encode_sample: empty feature vector");
    detail::require(scaled_features.size() <= Wavefunction::kMaxQubits,
                    "encode_sample: too many features for the register cap");

    // Iterated Kronecker product, qubit 0 outermost.
    std::vector<complex_t> amps{complex_t{1.0, 0.0}};
    for (double x : scaled_features) {
        detail::require(x >= 0.0 && x <= 1.0,
                        "encode_sample: features must lie in [0, 1]");
        const double a0 = std::sqrt(x);
        const double a1 = std::sqrt(1.0 - x);
        std::vector<complex_t> next(amps.size() * 2);
        for (std::size_t j = 0; j < amps.size(); ++j) {
            next[2 * j] = amps[j] * a0;
            next[2 * j + 1] = amps[j] * a1;
        }
        amps = std::move(next);
    }
    return Wavefunction::from_amplitudes(std::move(amps));
}

ParameterizedCircuit qnn_circuit(std::size_t num_qubits, std::size_t layers) {
    detail::require(layers >= 1, "qnn_circuit: need at least one layer");
    ParameterizedCircuit circuit(num_qubits);
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (std::size_t qubit = 0; qubit < num_qubits; ++qubit) {
            const std::string stem =
                "t" + std::to_string(layer) + "_" + std::to_string(qubit);
            const std::size_t rx = circuit.add_parameter(stem + "_0");
            const std::size_t ry = circuit.add_parameter(stem + "_1");
            circuit.add_rotation(RotationAxis::X, qubit, rx);
            circuit.add_rotation(RotationAxis::Y, qubit, ry);
        }
        if (num_qubits >= 2) {
            for (std::size_t qubit = 0; qubit + 1 < num_qubits; ++qubit) {
                circuit.add_cnot(qubit, qubit + 1);
            }
            circuit.add_cnot(num_qubits - 1, 0);
        }
    }
    return circuit;
}

double decode_prediction(const Wavefunction &state, double gamma) {
    detail::require(state.num_qubits() >= 2,
                    "decode_prediction: need at least two qubits");
    detail::require(gamma > 0.0, "decode_prediction: gamma must be positive");
    const double p0 = prob_one_qubit(state, 0).p1;
    const double p1 = prob_one_qubit(state, 1).p1;
    return sigmoid(gamma * (p0 - p1));
}

double conditional_prediction(double score, int label) {
    detail::require(label == 0 || label == 1,
                    "conditional_prediction: label must be 0 or 1");
    return label == 0 ? score : 1.0 - score;
}

double qnn_forward(const QnnParams &params, std::span<const double> sample) {
    detail::require(sample.size() == params.num_qubits,
                    "qnn_forward: sample size does not match the qubit count");
    Wavefunction state = encode_sample(sample);
    const ParameterizedCircuit circuit =
        qnn_circuit(params.num_qubits, params.layers);
    apply_ops(circuit, state, params.theta);
    return decode_prediction(state, params.gamma);
}

double qnn_cost(const QnnParams &params, const Dataset &data) {
    const Prepared prep = prepare(params, data);
    const std::vector<double> scores =
        score_all(prep, params.theta, params.gamma);
    return cost_of_scores(scores, prep.labels);
}

std::vector<double> qnn_gradient(const QnnParams &params, const Dataset &data,
                                 const ShiftRule &rule) {
    const Prepared prep = prepare(params, data);
    const std::vector<double> scores =
        score_all(prep, params.theta, params.gamma);
    const std::vector<char> active(params.theta.size(), 1);
    return gradient_impl(prep, params, rule, scores, active);
}

std::array<std::array<std::uint64_t, 2>, 2>
confusion_matrix(std::span<const int> labels, std::span<const int> predicted) {
    detail::require(labels.size() == predicted.size() && !labels.empty(),
                    "confusion_matrix: need equally sized, nonempty vectors");
    std::array<std::array<std::uint64_t, 2>, 2> counts{};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        detail::require(labels[i] == 0 || labels[i] == 1,
                        "confusion_matrix: labels must be 0 or 1");
        detail::require(predicted[i] == 0 || predicted[i] == 1,
                        "confusion_matrix: predictions must be 0 or 1");
        ++counts[static_cast<std::size_t>(labels[i])]
                [static_cast<std::size_t>(predicted[i])];
    }
    return counts;
}

QnnTrainResult qnn_train(const Dataset &train, const Dataset *test,
                         const QnnTrainConfig &config, Rng &rng) {
    detail::require(train.num_features >= 2,
                    "qnn_train: the readout uses qubits 0 and 1, so the "
                    "dataset needs at least two features");
    detail::require(config.drop_rate >= 0.0 && config.drop_rate < 1.0,
                    "qnn_train: drop rate must lie in [0, 1)");
    const ShiftRule rule(config.shift);

    QnnTrainResult result;
    result.params = QnnParams::init(config.layers, train.num_features,
                                    config.gamma, rng);
    QnnParams &params = result.params;

    const Prepared train_prep = prepare(params, train);
    std::optional<Prepared> test_prep;
    if (test != nullptr) {
        test_prep.emplace(prepare(params, *test));
    }

    AdamState adam = AdamState::init(params.theta.size(), config.eta,
                                     config.beta1, config.beta2,
                                     config.epsilon);
    std::vector<char> active(params.theta.size(), 1);

    for (std::size_t iter = 0; iter <= config.iters; ++iter) {
        const std::vector<double> scores =
            score_all(train_prep, params.theta, params.gamma);
        result.train_loss.push_back(cost_of_scores(scores, train_prep.labels));
        result.train_acc.push_back(
            accuracy_of_scores(scores, train_prep.labels));
        if (test_prep) {
            const std::vector<double> test_scores =
                score_all(*test_prep, params.theta, params.gamma);
            result.test_loss.push_back(
                cost_of_scores(test_scores, test_prep->labels));
            result.test_acc.push_back(
                accuracy_of_scores(test_scores, test_prep->labels));
        }
        if (iter == config.iters) {
            break;
        }

        if (config.drop_rate > 0.0) {
            for (std::size_t i = 0; i < active.size(); ++i) {
                active[i] = rng.uniform() < config.drop_rate ? 0 : 1;
            }
        }
        const std::vector<double> grad =
            gradient_impl(train_prep, params, rule, scores, active);
        auto [updated, next_state] = adam_step(adam, params.theta, grad);
        params.theta = std::move(updated);
        adam = std::move(next_state);
    }
    return result;
}

} // namespace qvm
