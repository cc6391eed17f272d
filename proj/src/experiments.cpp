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

#include "qvm/experiments.hpp"

#include "qvm/measurement.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace qvm {
namespace {

// Generator seeds for the bundled datasets. Fixed constants: the bundled
// data is the same for every run, independent of the --seed flag, which
// only steers initialization and splits.
constexpr std::uint64_t kLinearDataSeed = 917;
constexpr std::uint64_t kPurchasesDataSeed = 417;
constexpr std::size_t kLinearRows = 410;
constexpr std::size_t kPurchaseRows = 400;

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid]
                                  : 0.5 * (values[mid - 1] + values[mid]);
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    return out;
}

} // namespace

std::string default_out_dir() {
    const char *dir = std::getenv("QVM_OUT_DIR");
    return dir != nullptr && dir[0] != '\0' ? dir : ".";
}

ParameterizedCircuit gate_bench_circuit(std::size_t qubits,
                                        std::size_t depth) {
    detail::require(depth >= 1, "gate_bench_circuit: depth must be positive");
    ParameterizedCircuit circuit(qubits);
    for (std::size_t level = 0; level < depth; ++level) {
        for (std::size_t qubit = 0; qubit < qubits; ++qubit) {
            circuit.add_gate("H", qubit);
            circuit.add_gate("SX", qubit);
        }
        for (std::size_t qubit = 1; qubit < qubits; ++qubit) {
            circuit.add_cnot(qubit, 0);
        }
    }
    return circuit;
}

std::vector<GateBenchRow> gate_bench(const GateBenchConfig &config) {
    detail::require(config.qubit_min >= 1 &&
                        config.qubit_min <= config.qubit_max &&
                        config.qubit_max <= Wavefunction::kMaxQubits,
                    "gate_bench: bad qubit range");
    detail::require(config.repeats >= 1, "gate_bench: repeats must be >= 1");

    std::vector<GateBenchRow> rows;
    for (std::size_t n = config.qubit_min; n <= config.qubit_max; ++n) {
        std::vector<double> timings;
        for (std::size_t rep = 0; rep < config.repeats; ++rep) {
            Rng sample_rng(config.seed + 1000 * n + rep);
            const auto start = std::chrono::steady_clock::now();
            const ParameterizedCircuit circuit =
                gate_bench_circuit(n, config.depth);
            Wavefunction state =
                config.noise_p > 0.0
                    ? run(circuit, {},
                          NoiseModel(config.noise_p,
                                     config.seed + 7919 * n + rep))
                    : run(circuit, {});
            volatile double sink = state.probabilities()[0];
            (void)sink;
            const auto counts = measure_all(state, config.shots, sample_rng);
            (void)counts;
            const auto stop = std::chrono::steady_clock::now();
            timings.push_back(
                std::chrono::duration<double>(stop - start).count());
        }
        rows.push_back(GateBenchRow{n, median(std::move(timings))});
    }
    return rows;
}

void write_gate_bench_csv(const std::vector<GateBenchRow> &rows,
                          const std::string &path) {
    std::ofstream out = open_output(path);
    out << "qubits,seconds\n";
    char line_buffer[160];
    for (const GateBenchRow &row : rows) {
        std::snprintf(line_buffer, sizeof(line_buffer), "%zu,%.9f\n",
                      row.qubits, row.seconds);
        out << line_buffer;
    }
}

ParameterizedCircuit qdp_bench_circuit(std::size_t qubits) {
    ParameterizedCircuit circuit(qubits);
    for (std::size_t qubit = 0; qubit < qubits; ++qubit) {
        const std::size_t rx =
            circuit.add_parameter("t" + std::to_string(2 * qubit));
        const std::size_t ry =
            circuit.add_parameter("t" + std::to_string(2 * qubit + 1));
        circuit.add_rotation(RotationAxis::X, qubit, rx);
        circuit.add_rotation(RotationAxis::Y, qubit, ry);
    }
    return circuit;
}

double qdp_bench_cost(const Wavefunction &state) {
    const std::vector<double> probs = state.probabilities();
    double cost = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        cost -= static_cast<double>(j) * probs[j];
    }
    return cost;
}

std::vector<QdpBenchRow> qdp_bench(const QdpBenchConfig &config) {
    detail::require(config.qubit_min >= 1 &&
                        config.qubit_min <= config.qubit_max &&
                        config.qubit_max <= Wavefunction::kMaxQubits,
                    "qdp_bench: bad qubit range");
    const ShiftRule rule(config.shift);

    std::vector<QdpBenchRow> rows;
    for (std::size_t n = config.qubit_min; n <= config.qubit_max; ++n) {
        Rng rng(config.seed);
        const auto start = std::chrono::steady_clock::now();

        const CostFunction cost(qdp_bench_circuit(n), qdp_bench_cost);
        std::vector<double> params(2 * n);
        for (double &value : params) {
            value = rng.normal();
        }
        for (std::size_t iter = 0; iter < config.iters; ++iter) {
            const std::vector<double> grad =
                parameter_shift_gradient(cost, params, rule);
            params = gd_step(params, grad, config.eta);
        }
        const double final_cost = cost.evaluate(params);

        const auto stop = std::chrono::steady_clock::now();
        rows.push_back(QdpBenchRow{
            n, std::chrono::duration<double>(stop - start).count(),
            final_cost});
    }
    return rows;
}

void write_qdp_bench_csv(const std::vector<QdpBenchRow> &rows,
                         const std::string &path) {
    std::ofstream out = open_output(path);
    out << "qubits,seconds,final_cost\n";
    char line_buffer[160];
    for (const QdpBenchRow &row : rows) {
        std::snprintf(line_buffer, sizeof(line_buffer), "%zu,%.9f,%.12g\n",
                      row.qubits, row.seconds, row.final_cost);
        out << line_buffer;
    }
}

TutorialResult qdp_tutorial(const TutorialConfig &config) {
    const ShiftRule rule(config.shift);
    Rng rng(config.seed);

    ParameterizedCircuit circuit(1);
    const std::size_t t0 = circuit.add_parameter("t0");
    const std::size_t t1 = circuit.add_parameter("t1");
    circuit.add_rotation(RotationAxis::X, 0, t0);
    circuit.add_rotation(RotationAxis::Y, 0, t1);

    // The optimized quantity is the squared miss of p1 from 1; the shift
    // rule is applied to the cost itself, mirroring how the readout
    // would be differentiated on hardware.
    const CostFunction cost(std::move(circuit), [](const Wavefunction &w) {
        const double p1 = prob_one_qubit(w, 0).p1;
        return (p1 - 1.0) * (p1 - 1.0);
    });

    TutorialResult result;
    std::vector<double> params{rng.normal(), rng.normal()};
    result.cost_trace.reserve(config.iters + 1);
    for (std::size_t iter = 0; iter < config.iters; ++iter) {
        result.cost_trace.push_back(cost.evaluate(params));
        const std::vector<double> grad =
            parameter_shift_gradient(cost, params, rule);
        params = gd_step(params, grad, config.eta);
    }
    result.final_cost = cost.evaluate(params);
    result.cost_trace.push_back(result.final_cost);

    result.params = {params[0], params[1]};
    Wavefunction state(1);
    apply_single(state, rotation_matrix(RotationAxis::X, params[0]), 0);
    apply_single(state, rotation_matrix(RotationAxis::Y, params[1]), 0);
    result.p1 = prob_one_qubit(state, 0).p1;
    result.converged = result.p1 > 0.95;
    return result;
}

void write_cost_trace_csv(const std::vector<double> &trace,
                          const std::string &path) {
    std::ofstream out = open_output(path);
    out << "iter,cost\n";
    char line_buffer[160];
    for (std::size_t i = 0; i < trace.size(); ++i) {
        std::snprintf(line_buffer, sizeof(line_buffer), "%zu,%.12g\n", i,
                      trace[i]);
        out << line_buffer;
    }
}

LinregResult run_linreg(const LinregConfig &config) {
    Dataset data =
        config.data_path.empty()
            ? synthetic_linear(kLinearRows, kLinearDataSeed)
            : load_csv(config.data_path, {config.feature_column},
                       config.target_column);

    // Targets are min-max scaled over the full set before splitting; the
    // split is positional (no shuffle), so row order is part of the
    // protocol.
    const auto [y_min, y_max] = fit_target_bounds(data);
    scale_targets(data, y_min, y_max);
    const auto [train, test] =
        head_tail_split(data, config.train_rows, config.test_rows);

    const ShiftRule rule(config.shift);
    Rng rng(config.seed);
    QlrTrainResult trained =
        qlr_train(train, config.k, config.eta, config.iters, rule, rng);

    LinregResult result;
    result.model = trained.model;
    result.loss_trace = std::move(trained.loss_trace);
    result.ols = ols_solve(train);

    const auto evaluate = [&](const Dataset &split, double &q_mse,
                              double &o_mse, bool keep_table) {
        std::vector<double> x(split.num_rows());
        for (std::size_t row = 0; row < split.num_rows(); ++row) {
            x[row] = split.feature(row, 0);
        }
        const std::vector<double> q_pred = qlr_predict(result.model, x);
        std::vector<double> o_pred(x.size());
        for (std::size_t row = 0; row < x.size(); ++row) {
            o_pred[row] = result.ols.slope * x[row] + result.ols.intercept;
        }
        q_mse = mse_cost(split.targets, q_pred);
        o_mse = mse_cost(split.targets, o_pred);
        if (keep_table) {
            result.test_x = x;
            result.test_y = split.targets;
            result.test_pred_quantum = q_pred;
            result.test_pred_ols = o_pred;
        }
    };
    evaluate(train, result.quantum_train_mse, result.ols_train_mse, false);
    evaluate(test, result.quantum_test_mse, result.ols_test_mse, true);
    return result;
}

void write_linreg_outputs(const LinregResult &result,
                          const std::string &out_dir) {
    {
        std::ofstream out = open_output(out_dir + "/loss_trace.csv");
        out << "iter,mse\n";
        char line_buffer[160];
        for (std::size_t i = 0; i < result.loss_trace.size(); ++i) {
            std::snprintf(line_buffer, sizeof(line_buffer), "%zu,%.12g\n", i,
                          result.loss_trace[i]);
            out << line_buffer;
        }
    }
    std::ofstream out = open_output(out_dir + "/fit.csv");
    out << "x,y_true,y_pred_quantum,y_pred_ols\n";
    char line_buffer[160];
    for (std::size_t row = 0; row < result.test_x.size(); ++row) {
        std::snprintf(line_buffer, sizeof(line_buffer),
                      "%.12g,%.12g,%.12g,%.12g\n", result.test_x[row],
                      result.test_y[row], result.test_pred_quantum[row],
                      result.test_pred_ols[row]);
        out << line_buffer;
    }
}

QnnRunResult run_qnn(const QnnRunConfig &config) {
    Dataset data =
        config.data_path.empty()
            ? synthetic_purchases(kPurchaseRows, kPurchasesDataSeed)
            : load_csv(config.data_path, config.feature_columns,
                       config.target_column);
    require_binary_targets(data);

    Rng rng(config.seed);
    auto [train, test] = shuffle_split(data, config.test_fraction, rng);

    // Scaling bounds come from the training split only; test rows are
    // clamped so the amplitude encoding stays valid.
    const ScalingBounds bounds = fit_feature_bounds(train);
    scale_features(train, bounds, false);
    scale_features(test, bounds, true);

    QnnRunResult result;
    result.training = qnn_train(train, &test, config.train, rng);

    const auto tabulate = [&](const Dataset &split) {
        std::vector<int> labels(split.num_rows());
        std::vector<int> predicted(split.num_rows());
        std::vector<double> sample(split.num_features);
        for (std::size_t row = 0; row < split.num_rows(); ++row) {
            for (std::size_t col = 0; col < split.num_features; ++col) {
                sample[col] = split.feature(row, col);
            }
            const double score =
                qnn_forward(result.training.params, sample);
            predicted[row] = score >= 0.5 ? 0 : 1;
            labels[row] = split.targets[row] == 1.0 ? 1 : 0;
        }
        return confusion_matrix(labels, predicted);
    };
    result.train_confusion = tabulate(train);
    result.test_confusion = tabulate(test);
    result.train_accuracy = result.training.train_acc.back();
    result.test_accuracy = result.training.test_acc.back();
    return result;
}

void write_qnn_outputs(const QnnRunResult &result,
                       const std::string &out_dir) {
    const QnnTrainResult &training = result.training;
    detail::require(training.test_loss.size() == training.train_loss.size(),
                    "write_qnn_outputs: result lacks test metrics");
    {
        std::ofstream out = open_output(out_dir + "/qnn_trace.csv");
        out << "iter,train_loss,train_acc,test_loss,test_acc\n";
        char line_buffer[160];
        for (std::size_t i = 0; i < training.train_loss.size(); ++i) {
            std::snprintf(line_buffer, sizeof(line_buffer),
                          "%zu,%.12g,%.12g,%.12g,%.12g\n", i,
                          training.train_loss[i], training.train_acc[i],
                          training.test_loss[i], training.test_acc[i]);
            out << line_buffer;
        }
    }

    const auto matrix_json = [](const auto &counts) {
        return nlohmann::json{{counts[0][0], counts[0][1]},
                              {counts[1][0], counts[1][1]}};
    };
    nlohmann::json doc;
    doc["train"] = {{"matrix", matrix_json(result.train_confusion)},
                    {"accuracy", result.train_accuracy}};
    doc["test"] = {{"matrix", matrix_json(result.test_confusion)},
                   {"accuracy", result.test_accuracy}};
    std::ofstream out = open_output(out_dir + "/confusion.json");
    out << doc.dump(2) << "\n";
}

} // namespace qvm
