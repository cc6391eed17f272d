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
#include "qvm/qlr.hpp"
#include "qvm/qnn.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qvm {

/// Output directory for generated files: $QVM_OUT_DIR, or "." if unset.
std::string default_out_dir();

// ---------------------------------------------------------------------
// Gate throughput benchmark
// ---------------------------------------------------------------------

struct GateBenchConfig {
    std::size_t qubit_min = 2;
    std::size_t qubit_max = 10;
    std::size_t depth = 10;
    std::uint64_t shots = 1024;
    std::size_t repeats = 5;
    std::uint64_t seed = 1;
    /// Optional depolarizing probability applied after every gate.
    double noise_p = 0.0;
};

struct GateBenchRow {
    std::size_t qubits = 0;
    double seconds = 0.0;
};

/// The benchmark circuit: `depth` levels of H then SX on every qubit,
/// each level closed by CNOT(i, 0) for i = 1..N-1.
ParameterizedCircuit gate_bench_circuit(std::size_t qubits,
                                        std::size_t depth);

/// Times build + run + probability readout + sampling for every register
/// width in the range; each row reports the median of `repeats` runs on
/// the monotonic clock.
std::vector<GateBenchRow> gate_bench(const GateBenchConfig &config);

void write_gate_bench_csv(const std::vector<GateBenchRow> &rows,
                          const std::string &path);

// ---------------------------------------------------------------------
// Differentiation scaling benchmark
// ---------------------------------------------------------------------

struct QdpBenchConfig {
    std::size_t qubit_min = 1;
    std::size_t qubit_max = 10;
    std::size_t iters = 1000;
    double eta = 0.01;
    double shift = kDefaultShift;
    std::uint64_t seed = 1;
};

struct QdpBenchRow {
    std::size_t qubits = 0;
    double seconds = 0.0;
    double final_cost = 0.0;
};

/// One RX and one RY per qubit, parameters t0..t(2N-1) in qubit order.
ParameterizedCircuit qdp_bench_circuit(std::size_t qubits);

/// The benchmark cost: minus the index-weighted probability mass,
/// -sum_j j * |alpha_j|^2, minimized by pushing weight onto |1...1>.
double qdp_bench_cost(const Wavefunction &state);

/// For each register width, times a full gradient-descent loop (`iters`
/// shift-rule gradients and updates) and records the cost it reaches.
std::vector<QdpBenchRow> qdp_bench(const QdpBenchConfig &config);

void write_qdp_bench_csv(const std::vector<QdpBenchRow> &rows,
                         const std::string &path);

// ---------------------------------------------------------------------
// Differentiation walkthrough (one qubit, drive p1 to 1)
// ---------------------------------------------------------------------

struct TutorialConfig {
    std::size_t iters = 1000;
    double eta = 0.01;
    double shift = kDefaultShift;
    std::uint64_t seed = 11;
};

struct TutorialResult {
    std::array<double, 2> params{};
    /// Final probability of reading 1, the quantity being driven up.
    double p1 = 0.0;
    double final_cost = 0.0;
    /// Cost before each step plus one final entry (iters + 1 values).
    std::vector<double> cost_trace;
    /// Whether p1 exceeded 0.95.
    bool converged = false;
};

/// Minimizes (p1 - 1)^2 over the RX/RY angles of a single qubit by
/// shift-rule gradient descent.
TutorialResult qdp_tutorial(const TutorialConfig &config);

/// Writes "iter,cost" rows.
void write_cost_trace_csv(const std::vector<double> &trace,
                          const std::string &path);

// ---------------------------------------------------------------------
// Quantum linear regression pipeline
// ---------------------------------------------------------------------

struct LinregConfig {
    /// CSV input; empty selects the bundled synthetic dataset.
    std::string data_path;
    std::string feature_column = "x";
    std::string target_column = "y";
    double k = 10.0;
    double eta = 0.01;
    double shift = kDefaultShift;
    std::size_t iters = 1000;
    std::size_t train_rows = 400;
    std::size_t test_rows = 10;
    std::uint64_t seed = 7;
};

struct LinregResult {
    QlrModel model;
    OlsFit ols;
    double quantum_train_mse = 0.0;
    double quantum_test_mse = 0.0;
    double ols_train_mse = 0.0;
    double ols_test_mse = 0.0;
    std::vector<double> loss_trace;
    // Test-split fit table, row-aligned.
    std::vector<double> test_x;
    std::vector<double> test_y;
    std::vector<double> test_pred_quantum;
    std::vector<double> test_pred_ols;
};

/// Full pipeline: load or synthesize data, min-max scale the targets on
/// the whole set, split head/tail, train the quantum model, solve the
/// classical least squares on the same split, and evaluate both.
LinregResult run_linreg(const LinregConfig &config);

/// Writes loss_trace.csv and fit.csv into the directory.
void write_linreg_outputs(const LinregResult &result,
                          const std::string &out_dir);

// ---------------------------------------------------------------------
// Quantum neural network pipeline
// ---------------------------------------------------------------------

struct QnnRunConfig {
    /// CSV input; empty selects the bundled synthetic dataset.
    std::string data_path;
    std::vector<std::string> feature_columns = {"Age", "EstimatedSalary"};
    std::string target_column = "Purchased";
    double test_fraction = 0.2;
    QnnTrainConfig train;
    std::uint64_t seed = 0;
};

struct QnnRunResult {
    QnnTrainResult training;
    std::array<std::array<std::uint64_t, 2>, 2> train_confusion{};
    std::array<std::array<std::uint64_t, 2>, 2> test_confusion{};
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
};

/// Full pipeline: load or synthesize data, shuffle split, min-max scale
/// features on the training split (test rows are clamped into [0, 1]),
/// train with Adam, and tabulate confusion matrices for both splits.
QnnRunResult run_qnn(const QnnRunConfig &config);

/// Writes qnn_trace.csv and confusion.json into the directory.
void write_qnn_outputs(const QnnRunResult &result,
                       const std::string &out_dir);

} // namespace qvm
