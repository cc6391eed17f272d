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

// Command-line harness. Everything below talks to the shared library
// through the C interface in qvm/capi.h only.

#include "qvm/capi.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

int report_failure(qvm_status status) {
    std::fprintf(stderr, "error: %s (%s)\n", qvm_last_error(),
                 qvm_status_name(status));
    return 1;
}

std::string env_out_dir() {
    const char *dir = std::getenv("QVM_OUT_DIR");
    return dir != nullptr && dir[0] != '\0' ? dir : ".";
}

void add_out_dir_option(CLI::App *cmd, std::string &out_dir) {
    cmd->add_option("--out-dir", out_dir,
                    "Directory for generated files (default: $QVM_OUT_DIR "
                    "or the working directory)")
        ->capture_default_str();
}

/// Builds the tutorial ansatz through the C API and prints its diagram.
int print_tutorial_circuit() {
    qvm_circuit *circuit = nullptr;
    qvm_status status = qvm_circuit_create(1, &circuit);
    if (status != QVM_OK) {
        return report_failure(status);
    }
    uint32_t t0 = 0;
    uint32_t t1 = 0;
    if ((status = qvm_circuit_add_param(circuit, "t0", &t0)) == QVM_OK &&
        (status = qvm_circuit_add_param(circuit, "t1", &t1)) == QVM_OK &&
        (status = qvm_circuit_rotation(circuit, "RX", 0, t0)) == QVM_OK) {
        status = qvm_circuit_rotation(circuit, "RY", 0, t1);
    }
    if (status != QVM_OK) {
        qvm_circuit_destroy(circuit);
        return report_failure(status);
    }
    size_t needed = 0;
    qvm_circuit_format(circuit, nullptr, 0, &needed);
    std::vector<char> buffer(needed);
    status = qvm_circuit_format(circuit, buffer.data(), buffer.size(),
                                &needed);
    qvm_circuit_destroy(circuit);
    if (status != QVM_OK) {
        return report_failure(status);
    }
    std::printf("%s", buffer.data());
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qvm: statevector simulator with differentiable circuits"};
    app.require_subcommand(1);

    // ----- gate-bench ---------------------------------------------------
    auto *gate_cmd =
        app.add_subcommand("gate-bench", "Time layered H/SX/CNOT circuits "
                                         "across register widths");
    qvm_gate_bench_config gate_cfg{2, 10, 10, 1024, 5, 1, 0.0};
    std::string gate_out = env_out_dir();
    gate_cmd->add_option("--qubit-min", gate_cfg.qubit_min, "Smallest width")
        ->capture_default_str();
    gate_cmd->add_option("--qubit-max", gate_cfg.qubit_max, "Largest width")
        ->capture_default_str();
    gate_cmd->add_option("--depth", gate_cfg.depth, "Levels per circuit")
        ->capture_default_str();
    gate_cmd->add_option("--shots", gate_cfg.shots, "Samples per run")
        ->capture_default_str();
    gate_cmd->add_option("--repeats", gate_cfg.repeats,
                         "Runs per width; the median is reported")
        ->capture_default_str();
    gate_cmd->add_option("--seed", gate_cfg.seed, "Sampling seed")
        ->capture_default_str();
    gate_cmd
        ->add_option("--noise-p", gate_cfg.noise_p,
                     "Depolarizing probability applied after every gate")
        ->capture_default_str();
    add_out_dir_option(gate_cmd, gate_out);

    // ----- qdp-bench ----------------------------------------------------
    auto *qdp_cmd = app.add_subcommand(
        "qdp-bench", "Time shift-rule gradient descent across widths");
    qvm_qdp_bench_config qdp_cfg{1, 10, 1000, 0.01, 0.0, 1};
    std::string qdp_out = env_out_dir();
    qdp_cmd->add_option("--qubit-min", qdp_cfg.qubit_min, "Smallest width")
        ->capture_default_str();
    qdp_cmd->add_option("--qubit-max", qdp_cfg.qubit_max, "Largest width")
        ->capture_default_str();
    qdp_cmd->add_option("--iters", qdp_cfg.iters, "Descent iterations")
        ->capture_default_str();
    qdp_cmd->add_option("--eta", qdp_cfg.eta, "Learning rate")
        ->capture_default_str();
    qdp_cmd->add_option("--shift", qdp_cfg.shift,
                        "Parameter shift (default pi/20)");
    qdp_cmd->add_option("--seed", qdp_cfg.seed, "Init seed")
        ->capture_default_str();
    add_out_dir_option(qdp_cmd, qdp_out);

    // ----- qdp-tutorial -------------------------------------------------
    auto *tut_cmd = app.add_subcommand(
        "qdp-tutorial", "Drive a one-qubit readout to |1> by gradient "
                        "descent and assert p1 > 0.95");
    qvm_tutorial_config tut_cfg{1000, 0.01, 0.0, 11};
    std::string tut_out = env_out_dir();
    std::string dump_state;
    bool show_circuit = false;
    tut_cmd->add_option("--iters", tut_cfg.iters, "Descent iterations")
        ->capture_default_str();
    tut_cmd->add_option("--eta", tut_cfg.eta, "Learning rate")
        ->capture_default_str();
    tut_cmd->add_option("--shift", tut_cfg.shift,
                        "Parameter shift (default pi/20)");
    tut_cmd->add_option("--seed", tut_cfg.seed, "Init seed")
        ->capture_default_str();
    tut_cmd->add_option("--dump-state", dump_state,
                        "Write the final statevector to this CSV file");
    tut_cmd->add_flag("--print-circuit", show_circuit,
                      "Print the ansatz diagram and exit");
    add_out_dir_option(tut_cmd, tut_out);

    // ----- linreg ---------------------------------------------------------
    auto *lin_cmd = app.add_subcommand(
        "linreg", "Quantum linear regression against a least-squares "
                  "baseline");
    std::string lin_data;
    std::string lin_feature = "x";
    std::string lin_target = "y";
    bool diabetes_preset = false;
    qvm_linreg_config lin_cfg{nullptr, nullptr, nullptr, 10.0, 0.01,
                              0.0,     1000,    400,     10,   7};
    std::string lin_out = env_out_dir();
    lin_cmd->add_option("--data", lin_data,
                        "Input CSV (default: bundled synthetic data)");
    lin_cmd->add_option("--feature-col", lin_feature,
                        "Feature column name or 0-based index")
        ->capture_default_str();
    lin_cmd->add_option("--label-col", lin_target,
                        "Target column name or 0-based index")
        ->capture_default_str();
    lin_cmd->add_flag("--preset-diabetes", diabetes_preset,
                      "Column layout for the diabetes table: feature "
                      "index 2, target index 10, 400/10 split");
    lin_cmd->add_option("--k", lin_cfg.k, "Boundary scale")
        ->capture_default_str();
    lin_cmd->add_option("--eta", lin_cfg.eta, "Learning rate")
        ->capture_default_str();
    lin_cmd->add_option("--iters", lin_cfg.iters, "Descent iterations")
        ->capture_default_str();
    lin_cmd->add_option("--shift", lin_cfg.shift,
                        "Parameter shift (default pi/20)");
    lin_cmd->add_option("--train-rows", lin_cfg.train_rows,
                        "Leading rows used for training")
        ->capture_default_str();
    lin_cmd->add_option("--test-rows", lin_cfg.test_rows,
                        "Trailing rows used for testing")
        ->capture_default_str();
    lin_cmd->add_option("--seed", lin_cfg.seed, "Init seed")
        ->capture_default_str();
    add_out_dir_option(lin_cmd, lin_out);

    // ----- qnn ------------------------------------------------------------
    auto *qnn_cmd = app.add_subcommand(
        "qnn", "Variational classifier with Adam training");
    std::string qnn_data;
    std::string qnn_features = "Age,EstimatedSalary";
    std::string qnn_target = "Purchased";
    qvm_qnn_config qnn_cfg{nullptr, nullptr, nullptr, 0.2,  5,    150, 0.1,
                           0.0,     10.0,    0.9,     0.999, 1e-6, 0.0, 0};
    std::string qnn_out = env_out_dir();
    qnn_cmd->add_option("--data", qnn_data,
                        "Input CSV (default: bundled synthetic data)");
    qnn_cmd->add_option("--feature-cols", qnn_features,
                        "Comma-separated feature columns")
        ->capture_default_str();
    qnn_cmd->add_option("--label-col", qnn_target, "Label column")
        ->capture_default_str();
    qnn_cmd->add_option("--layers", qnn_cfg.layers, "Ansatz layers")
        ->capture_default_str();
    qnn_cmd->add_option("--iters", qnn_cfg.iters, "Adam iterations")
        ->capture_default_str();
    qnn_cmd->add_option("--eta", qnn_cfg.eta, "Adam learning rate")
        ->capture_default_str();
    qnn_cmd->add_option("--shift", qnn_cfg.shift,
                        "Parameter shift (default pi/20)");
    qnn_cmd->add_option("--test-frac", qnn_cfg.test_fraction,
                        "Held-out fraction")
        ->capture_default_str();
    qnn_cmd->add_option("--gamma", qnn_cfg.gamma, "Sigmoid sharpness")
        ->capture_default_str();
    qnn_cmd->add_option("--beta1", qnn_cfg.beta1, "Adam beta1")
        ->capture_default_str();
    qnn_cmd->add_option("--beta2", qnn_cfg.beta2, "Adam beta2")
        ->capture_default_str();
    qnn_cmd->add_option("--eps", qnn_cfg.epsilon, "Adam epsilon")
        ->capture_default_str();
    qnn_cmd->add_option("--drop-rate", qnn_cfg.drop_rate,
                        "Per-parameter dropout probability")
        ->capture_default_str();
    qnn_cmd->add_option("--seed", qnn_cfg.seed,
                        "Seed for the split, init and dropout")
        ->capture_default_str();
    add_out_dir_option(qnn_cmd, qnn_out);

    CLI11_PARSE(app, argc, argv);

    if (gate_cmd->parsed()) {
        const std::string csv = gate_out + "/gate_bench.csv";
        const qvm_status status = qvm_run_gate_bench(&gate_cfg, csv.c_str());
        if (status != QVM_OK) {
            return report_failure(status);
        }
        std::printf("wrote %s\n", csv.c_str());
        return 0;
    }

    if (qdp_cmd->parsed()) {
        const std::string csv = qdp_out + "/qdp_bench.csv";
        const qvm_status status = qvm_run_qdp_bench(&qdp_cfg, csv.c_str());
        if (status != QVM_OK) {
            return report_failure(status);
        }
        std::printf("wrote %s\n", csv.c_str());
        return 0;
    }

    if (tut_cmd->parsed()) {
        if (show_circuit) {
            return print_tutorial_circuit();
        }
        const std::string trace = tut_out + "/tutorial_trace.csv";
        qvm_tutorial_result result;
        const qvm_status status = qvm_run_qdp_tutorial(
            &tut_cfg, trace.c_str(),
            dump_state.empty() ? nullptr : dump_state.c_str(), &result);
        if (status != QVM_OK) {
            return report_failure(status);
        }
        std::printf("params: [%.6f, %.6f]\n", result.params[0],
                    result.params[1]);
        std::printf("p1: %.6f  cost: %.3e\n", result.p1, result.final_cost);
        std::printf("wrote %s\n", trace.c_str());
        if (result.converged == 0) {
            std::fprintf(stderr, "error: p1 = %.6f did not exceed 0.95\n",
                         result.p1);
            return 1;
        }
        return 0;
    }

    if (lin_cmd->parsed()) {
        if (diabetes_preset) {
            lin_feature = "2";
            lin_target = "10";
        }
        lin_cfg.data_csv = lin_data.empty() ? nullptr : lin_data.c_str();
        lin_cfg.feature_column = lin_feature.c_str();
        lin_cfg.target_column = lin_target.c_str();
        qvm_linreg_result result;
        const qvm_status status =
            qvm_run_linreg(&lin_cfg, lin_out.c_str(), &result);
        if (status != QVM_OK) {
            return report_failure(status);
        }
        std::printf("quantum: y = %.6f x + %.6f\n", result.weight,
                    result.bias);
        std::printf("ols:     y = %.6f x + %.6f\n", result.ols_slope,
                    result.ols_intercept);
        std::printf("train mse: quantum %.6e, ols %.6e\n",
                    result.quantum_train_mse, result.ols_train_mse);
        std::printf("test mse:  quantum %.6e, ols %.6e\n",
                    result.quantum_test_mse, result.ols_test_mse);
        std::printf("wrote %s/loss_trace.csv and %s/fit.csv\n",
                    lin_out.c_str(), lin_out.c_str());
        return 0;
    }

    if (qnn_cmd->parsed()) {
        qnn_cfg.data_csv = qnn_data.empty() ? nullptr : qnn_data.c_str();
        qnn_cfg.feature_columns = qnn_features.c_str();
        qnn_cfg.target_column = qnn_target.c_str();
        qvm_qnn_result result;
        const qvm_status status =
            qvm_run_qnn(&qnn_cfg, qnn_out.c_str(), &result);
        if (status != QVM_OK) {
            return report_failure(status);
        }
        std::printf("loss: %.6f -> %.6f\n", result.initial_train_loss,
                    result.final_train_loss);
        std::printf("accuracy: train %.4f, test %.4f\n",
                    result.train_accuracy, result.test_accuracy);
        std::printf("train confusion [[%llu, %llu], [%llu, %llu]]\n",
                    (unsigned long long)result.train_confusion[0][0],
                    (unsigned long long)result.train_confusion[0][1],
                    (unsigned long long)result.train_confusion[1][0],
                    (unsigned long long)result.train_confusion[1][1]);
        std::printf("test confusion  [[%llu, %llu], [%llu, %llu]]\n",
                    (unsigned long long)result.test_confusion[0][0],
                    (unsigned long long)result.test_confusion[0][1],
                    (unsigned long long)result.test_confusion[1][0],
                    (unsigned long long)result.test_confusion[1][1]);
        std::printf("wrote %s/qnn_trace.csv and %s/confusion.json\n",
                    qnn_out.c_str(), qnn_out.c_str());
        return 0;
    }

    return 0;
}
