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

#include "doctest.h"
#include "json.hpp"

#include "oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

/// Unique scratch directory removed when the test block ends.
class TempDir {
  public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("qvm_exp_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string &name) const {
        return (path_ / name).string();
    }

  private:
    std::filesystem::path path_;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_SUITE("experiments") {

TEST_CASE("default output directory honors the environment") {
    const char *previous = std::getenv("QVM_OUT_DIR");
    const std::string saved = previous != nullptr ? previous : "";

    ::setenv("QVM_OUT_DIR", "/tmp/qvm_out_test", 1);
    CHECK(qvm::default_out_dir() == "/tmp/qvm_out_test");
    ::setenv("QVM_OUT_DIR", "", 1);
    CHECK(qvm::default_out_dir() == ".");
    ::unsetenv("QVM_OUT_DIR");
    CHECK(qvm::default_out_dir() == ".");

    if (previous != nullptr) {
        ::setenv("QVM_OUT_DIR", saved.c_str(), 1);
    }
}

TEST_CASE("gate benchmark circuit layout") {
    const qvm::ParameterizedCircuit circuit = qvm::gate_bench_circuit(3, 2);
    CHECK(circuit.num_params() == 0);
    REQUIRE(circuit.num_ops() == 16);

    // One level is H,SX per qubit followed by CNOT(q, 0) for q = 1, 2.
    for (std::size_t level = 0; level < 2; ++level) {
        const std::size_t base = level * 8;
        for (std::size_t q = 0; q < 3; ++q) {
            CHECK(circuit.ops()[base + 2 * q].name == "H");
            CHECK(circuit.ops()[base + 2 * q].targets ==
                  std::vector<std::size_t>{q});
            CHECK(circuit.ops()[base + 2 * q + 1].name == "SX");
            CHECK(circuit.ops()[base + 2 * q + 1].targets ==
                  std::vector<std::size_t>{q});
        }
        CHECK(circuit.ops()[base + 6].name == "CNOT");
        CHECK(circuit.ops()[base + 6].controls ==
              std::vector<std::size_t>{1});
        CHECK(circuit.ops()[base + 6].targets == std::vector<std::size_t>{0});
        CHECK(circuit.ops()[base + 7].controls ==
              std::vector<std::size_t>{2});
    }

    CHECK_THROWS_AS(qvm::gate_bench_circuit(2, 0), std::invalid_argument);
}

TEST_CASE("gate benchmark circuit agrees with the dense oracle") {
    const qvm::ParameterizedCircuit circuit = qvm::gate_bench_circuit(2, 10);
    const qvm::Wavefunction state = qvm::run(circuit, {});
    const std::vector<oracle::complex_t> expected =
        oracle::run_dense(circuit, {});
    for (std::size_t j = 0; j < state.dim(); ++j) {
        CHECK(std::abs(state.amplitude(j) - expected[j]) < 1e-10);
    }
}

TEST_CASE("gate benchmark rows cover the requested range") {
    qvm::GateBenchConfig config;
    config.qubit_min = 2;
    config.qubit_max = 3;
    config.depth = 1;
    config.shots = 16;
    config.repeats = 1;
    const std::vector<qvm::GateBenchRow> rows = qvm::gate_bench(config);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].qubits == 2);
    CHECK(rows[1].qubits == 3);
    CHECK(rows[0].seconds > 0.0);
    CHECK(rows[1].seconds > 0.0);

    qvm::GateBenchConfig bad = config;
    bad.qubit_min = 5;
    bad.qubit_max = 3;
    CHECK_THROWS_AS(qvm::gate_bench(bad), std::invalid_argument);
}

TEST_CASE("gate benchmark csv format") {
    TempDir dir;
    const std::string path = dir.file("gate.csv");
    qvm::write_gate_bench_csv({{3, 0.25}, {4, 0.0625}}, path);
    CHECK(slurp(path) == "qubits,seconds\n3,0.250000000\n4,0.062500000\n");
}

TEST_CASE("differentiation benchmark circuit and cost") {
    const qvm::ParameterizedCircuit circuit = qvm::qdp_bench_circuit(2);
    REQUIRE(circuit.num_params() == 4);
    CHECK(circuit.param_names() ==
          std::vector<std::string>{"t0", "t1", "t2", "t3"});
    REQUIRE(circuit.num_ops() == 4);
    CHECK(circuit.ops()[0].name == "RX");
    CHECK(circuit.ops()[1].name == "RY");
    CHECK(circuit.ops()[2].targets == std::vector<std::size_t>{1});

    // On |0...0> every index j > 0 has zero mass, so the cost vanishes.
    CHECK(qvm::qdp_bench_cost(qvm::Wavefunction(3)) == 0.0);

    // For one qubit the cost is -p1, confined to [-1, 0].
    qvm::Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const qvm::Wavefunction state =
            qvm::Wavefunction::from_amplitudes(oracle::random_state(1, rng));
        const double cost = qvm::qdp_bench_cost(state);
        CHECK(cost <= 0.0);
        CHECK(cost >= -1.0);
    }
}

TEST_CASE("differentiation benchmark gradient matches finite differences") {
    const qvm::CostFunction cost(qvm::qdp_bench_circuit(2),
                                 qvm::qdp_bench_cost);
    const std::vector<double> params{0.3, -0.8, 1.1, 0.4};
    const qvm::ShiftRule rule;
    const std::vector<double> grad =
        qvm::parameter_shift_gradient(cost, params, rule);
    REQUIRE(grad.size() == 4);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double fd = oracle::central_difference(
            [&cost, &params, i](double value) {
                std::vector<double> probe = params;
                probe[i] = value;
                return cost.evaluate(probe);
            },
            params[i], 1e-6);
        CHECK(std::abs(grad[i] - fd) < 1e-5);
    }
}

TEST_CASE("differentiation benchmark drives the one-qubit cost to -1") {
    qvm::QdpBenchConfig config;
    config.qubit_min = 1;
    config.qubit_max = 1;
    const std::vector<qvm::QdpBenchRow> rows = qvm::qdp_bench(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].qubits == 1);
    CHECK(rows[0].final_cost <= -0.99);
}

TEST_CASE("differentiation benchmark csv format") {
    TempDir dir;
    const std::string path = dir.file("qdp.csv");
    qvm::write_qdp_bench_csv({{2, 0.5, -0.75}}, path);
    CHECK(slurp(path) ==
          "qubits,seconds,final_cost\n2,0.500000000,-0.75\n");
}

TEST_CASE("tutorial run converges and its trace settles monotonically") {
    const qvm::TutorialConfig config;
    const qvm::TutorialResult result = qvm::qdp_tutorial(config);

    CHECK(result.converged);
    CHECK(result.p1 > 0.95);
    CHECK(result.p1 <= 1.0);
    CHECK(result.final_cost < 2.5e-3);
    REQUIRE(result.cost_trace.size() == 1001);
    CHECK(result.cost_trace.back() == result.final_cost);

    // Individual steps may wiggle, but every 50-iteration stride must
    // be non-increasing.
    for (std::size_t i = 0; i + 50 < result.cost_trace.size(); ++i) {
        CHECK(result.cost_trace[i + 50] <= result.cost_trace[i] + 1e-15);
    }

    const qvm::TutorialResult again = qvm::qdp_tutorial(config);
    CHECK(result.params == again.params);
    CHECK(result.cost_trace == again.cost_trace);
}

TEST_CASE("cost trace csv format") {
    TempDir dir;
    const std::string path = dir.file("trace.csv");
    qvm::write_cost_trace_csv({1.0, 0.5}, path);
    CHECK(slurp(path) == "iter,cost\n0,1\n1,0.5\n");
}

TEST_CASE("linear regression pipeline beats the acceptance margins") {
    const qvm::LinregConfig config;
    const qvm::LinregResult result = qvm::run_linreg(config);

    CHECK(result.quantum_test_mse <= 1.10 * result.ols_test_mse);
    CHECK(std::abs(result.model.weight() - result.ols.slope) <= 0.05);
    CHECK(std::abs(result.model.bias() - result.ols.intercept) <= 0.05);

    REQUIRE(result.loss_trace.size() == 1000);
    CHECK(result.loss_trace.back() < result.loss_trace.front());
    REQUIRE(result.test_x.size() == 10);
    CHECK(result.test_y.size() == 10);
    CHECK(result.test_pred_quantum.size() == 10);
    CHECK(result.test_pred_ols.size() == 10);

    // Targets were min-max scaled, so every true test value sits in the
    // unit interval.
    for (double y : result.test_y) {
        CHECK(y >= 0.0);
        CHECK(y <= 1.0);
    }

    const qvm::LinregResult again = qvm::run_linreg(config);
    CHECK(result.model.coef_params == again.model.coef_params);
    CHECK(result.loss_trace == again.loss_trace);
}

TEST_CASE("linear regression output files") {
    TempDir dir;
    qvm::LinregResult result;
    result.loss_trace = {0.25};
    result.test_x = {0.5};
    result.test_y = {1.0};
    result.test_pred_quantum = {0.75};
    result.test_pred_ols = {1.25};
    qvm::write_linreg_outputs(result, dir.file(""));

    CHECK(slurp(dir.file("loss_trace.csv")) == "iter,mse\n0,0.25\n");
    CHECK(slurp(dir.file("fit.csv")) ==
          "x,y_true,y_pred_quantum,y_pred_ols\n0.5,1,0.75,1.25\n");
}

TEST_CASE("classifier pipeline shapes and bookkeeping") {
    qvm::QnnRunConfig config;
    config.train.layers = 1;
    config.train.iters = 5;
    const qvm::QnnRunResult result = qvm::run_qnn(config);

    REQUIRE(result.training.train_loss.size() == 6);
    CHECK(result.training.train_acc.size() == 6);
    CHECK(result.training.test_loss.size() == 6);
    CHECK(result.training.test_acc.size() == 6);

    // The bundled dataset has 400 rows split 320 / 80.
    const auto &train = result.train_confusion;
    const auto &test = result.test_confusion;
    CHECK(train[0][0] + train[0][1] + train[1][0] + train[1][1] == 320);
    CHECK(test[0][0] + test[0][1] + test[1][0] + test[1][1] == 80);

    CHECK(result.train_accuracy == result.training.train_acc.back());
    CHECK(result.test_accuracy == result.training.test_acc.back());

    const double tallied =
        static_cast<double>(train[0][0] + train[1][1]) / 320.0;
    CHECK(result.train_accuracy == doctest::Approx(tallied).epsilon(1e-12));
}

TEST_CASE("classifier output files") {
    TempDir dir;
    qvm::QnnRunResult result;
    result.training.train_loss = {0.5, 0.4};
    result.training.train_acc = {0.5, 0.75};
    result.training.test_loss = {0.6, 0.5};
    result.training.test_acc = {0.5, 0.5};
    result.train_confusion = {{{3, 1}, {0, 4}}};
    result.test_confusion = {{{2, 0}, {1, 5}}};
    result.train_accuracy = 0.875;
    result.test_accuracy = 0.75;
    qvm::write_qnn_outputs(result, dir.file(""));

    CHECK(slurp(dir.file("qnn_trace.csv")) ==
          "iter,train_loss,train_acc,test_loss,test_acc\n"
          "0,0.5,0.5,0.6,0.5\n"
          "1,0.4,0.75,0.5,0.5\n");

    const nlohmann::json doc =
        nlohmann::json::parse(slurp(dir.file("confusion.json")));
    CHECK(doc["train"]["accuracy"].get<double>() == 0.875);
    CHECK(doc["train"]["matrix"][0][0].get<std::uint64_t>() == 3);
    CHECK(doc["train"]["matrix"][0][1].get<std::uint64_t>() == 1);
    CHECK(doc["train"]["matrix"][1][0].get<std::uint64_t>() == 0);
    CHECK(doc["train"]["matrix"][1][1].get<std::uint64_t>() == 4);
    CHECK(doc["test"]["accuracy"].get<double>() == 0.75);
    CHECK(doc["test"]["matrix"][1][1].get<std::uint64_t>() == 5);

    // Missing test metrics are a caller error, not a silent skip.
    qvm::QnnRunResult partial;
    partial.training.train_loss = {0.5};
    partial.training.train_acc = {0.5};
    CHECK_THROWS_AS(qvm::write_qnn_outputs(partial, dir.file("")),
                    std::invalid_argument);
}

} // TEST_SUITE
