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

#include "qvm/capi.h"

#include "qvm/experiments.hpp"
#include "qvm/measurement.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

// The opaque handles wrap the C++ objects by value.
struct qvm_state {
    qvm::Wavefunction impl;
};

struct qvm_circuit {
    qvm::ParameterizedCircuit impl;
};

struct qvm_rng {
    qvm::Rng impl;
};

namespace {

thread_local std::string tl_last_error;

template <typename Fn> qvm_status guarded(Fn &&fn) {
    try {
        return fn();
    } catch (const std::invalid_argument &err) {
        tl_last_error = err.what();
        return QVM_ERROR_INVALID_ARGUMENT;
    } catch (const qvm::io_error &err) {
        tl_last_error = err.what();
        return QVM_ERROR_IO;
    } catch (const std::exception &err) {
        tl_last_error = err.what();
        return QVM_ERROR_INTERNAL;
    } catch (...) {
        tl_last_error = "unknown failure";
        return QVM_ERROR_INTERNAL;
    }
}

qvm_status fail_invalid(const char *message) {
    tl_last_error = message;
    return QVM_ERROR_INVALID_ARGUMENT;
}

qvm_status copy_string(const std::string &text, char *buf, size_t cap,
                       size_t *needed) {
    if (needed != nullptr) {
        *needed = text.size() + 1;
    }
    if (buf == nullptr || cap < text.size() + 1) {
        tl_last_error = "buffer too small (" + std::to_string(text.size() + 1) +
                        " bytes needed)";
        return QVM_ERROR_BUFFER;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return QVM_OK;
}

qvm::RotationAxis axis_from_name(const char *name) {
    const std::string_view view(name);
    if (view == "RX") {
        return qvm::RotationAxis::X;
    }
    if (view == "RY") {
        return qvm::RotationAxis::Y;
    }
    if (view == "RZ") {
        return qvm::RotationAxis::Z;
    }
    throw std::invalid_argument("unknown rotation '" + std::string(view) +
                                "' (expected RX, RY or RZ)");
}

// Zero means "use the documented default" for these fields.
template <typename T> T value_or(T value, T fallback) {
    return value == T{} ? fallback : value;
}

std::vector<std::string> split_columns(const char *joined) {
    std::vector<std::string> columns;
    std::stringstream stream(joined);
    std::string column;
    while (std::getline(stream, column, ',')) {
        columns.push_back(column);
    }
    return columns;
}

} // namespace

extern "C" {

const char *qvm_status_name(qvm_status status) {
    switch (status) {
    case QVM_OK:
        return "QVM_OK";
    case QVM_ERROR_INVALID_ARGUMENT:
        return "QVM_ERROR_INVALID_ARGUMENT";
    case QVM_ERROR_BUFFER:
        return "QVM_ERROR_BUFFER";
    case QVM_ERROR_IO:
        return "QVM_ERROR_IO";
    default:
        return "QVM_ERROR_INTERNAL";
    }
}

const char *qvm_last_error(void) { return tl_last_error.c_str(); }

qvm_status qvm_rng_create(uint64_t seed, qvm_rng **out) {
    if (out == nullptr) {
        return fail_invalid("qvm_rng_create: out is NULL");
    }
    return guarded([&] {
        *out = new qvm_rng{qvm::Rng(seed)};
        return QVM_OK;
    });
}

void qvm_rng_destroy(qvm_rng *rng) { delete rng; }

qvm_status qvm_state_create(uint32_t num_qubits, qvm_state **out) {
    if (out == nullptr) {
        return fail_invalid("qvm_state_create: out is NULL");
    }
    return guarded([&] {
        *out = new qvm_state{qvm::Wavefunction(num_qubits)};
        return QVM_OK;
    });
}

qvm_status qvm_state_clone(const qvm_state *state, qvm_state **out) {
    if (state == nullptr || out == nullptr) {
        return fail_invalid("qvm_state_clone: NULL argument");
    }
    return guarded([&] {
        *out = new qvm_state{state->impl};
        return QVM_OK;
    });
}

void qvm_state_destroy(qvm_state *state) { delete state; }

uint32_t qvm_state_num_qubits(const qvm_state *state) {
    return state == nullptr ? 0
                            : static_cast<uint32_t>(state->impl.num_qubits());
}

uint64_t qvm_state_dim(const qvm_state *state) {
    return state == nullptr ? 0 : static_cast<uint64_t>(state->impl.dim());
}

qvm_status qvm_state_amplitudes(const qvm_state *state, double *re, double *im,
                                uint64_t dim) {
    if (state == nullptr || re == nullptr || im == nullptr) {
        return fail_invalid("qvm_state_amplitudes: NULL argument");
    }
    if (dim != state->impl.dim()) {
        return fail_invalid("qvm_state_amplitudes: dim mismatch");
    }
    const auto amps = state->impl.amplitudes();
    for (uint64_t j = 0; j < dim; ++j) {
        re[j] = amps[j].real();
        im[j] = amps[j].imag();
    }
    return QVM_OK;
}

qvm_status qvm_state_probabilities(const qvm_state *state, double *probs,
                                   uint64_t dim) {
    if (state == nullptr || probs == nullptr) {
        return fail_invalid("qvm_state_probabilities: NULL argument");
    }
    if (dim != state->impl.dim()) {
        return fail_invalid("qvm_state_probabilities: dim mismatch");
    }
    const std::vector<double> values = state->impl.probabilities();
    std::memcpy(probs, values.data(), values.size() * sizeof(double));
    return QVM_OK;
}

qvm_status qvm_state_format(const qvm_state *state, char *buf, size_t cap,
                            size_t *needed) {
    if (state == nullptr) {
        return fail_invalid("qvm_state_format: state is NULL");
    }
    return guarded(
        [&] { return copy_string(state->impl.to_braket(), buf, cap, needed); });
}

qvm_status qvm_state_dump_csv(const qvm_state *state, const char *path) {
    if (state == nullptr || path == nullptr) {
        return fail_invalid("qvm_state_dump_csv: NULL argument");
    }
    return guarded([&] {
        std::ofstream out(path);
        if (!out) {
            throw qvm::io_error("cannot open '" + std::string(path) +
                                "' for writing");
        }
        state->impl.dump_csv(out);
        return QVM_OK;
    });
}

qvm_status qvm_apply_gate(qvm_state *state, const char *name,
                          uint32_t target) {
    if (state == nullptr || name == nullptr) {
        return fail_invalid("qvm_apply_gate: NULL argument");
    }
    return guarded([&] {
        const qvm::GateMatrix matrix = qvm::gate_matrix(name);
        qvm::detail::require(matrix.dim == 2,
                             "qvm_apply_gate: '" + std::string(name) +
                                 "' is not single-qubit; use "
                                 "qvm_apply_controlled for CNOT");
        qvm::apply_single(state->impl, matrix, target);
        return QVM_OK;
    });
}

qvm_status qvm_apply_rotation(qvm_state *state, const char *name,
                              uint32_t target, double angle) {
    if (state == nullptr || name == nullptr) {
        return fail_invalid("qvm_apply_rotation: NULL argument");
    }
    return guarded([&] {
        qvm::apply_single(state->impl,
                          qvm::rotation_matrix(axis_from_name(name), angle),
                          target);
        return QVM_OK;
    });
}

qvm_status qvm_apply_controlled(qvm_state *state, const char *name,
                                uint32_t control, uint32_t target) {
    if (state == nullptr || name == nullptr) {
        return fail_invalid("qvm_apply_controlled: NULL argument");
    }
    return guarded([&] {
        const qvm::GateMatrix matrix = qvm::gate_matrix(name);
        qvm::detail::require(matrix.dim == 2,
                             "qvm_apply_controlled: block must be 2x2");
        qvm::apply_controlled(state->impl, matrix, control, target);
        return QVM_OK;
    });
}

qvm_status qvm_apply_unitary(qvm_state *state, const double *re,
                             const double *im, const uint32_t *targets,
                             uint32_t num_targets) {
    if (state == nullptr || re == nullptr || im == nullptr ||
        targets == nullptr) {
        return fail_invalid("qvm_apply_unitary: NULL argument");
    }
    if (num_targets == 0 || num_targets >= 32) {
        return fail_invalid("qvm_apply_unitary: bad target count");
    }
    return guarded([&] {
        const std::size_t dim = std::size_t{1} << num_targets;
        std::vector<qvm::complex_t> elems(dim * dim);
        for (std::size_t j = 0; j < dim * dim; ++j) {
            elems[j] = qvm::complex_t{re[j], im[j]};
        }
        std::vector<std::size_t> target_list(targets, targets + num_targets);
        qvm::apply_general(state->impl, qvm::GateMatrix(dim, std::move(elems)),
                           target_list);
        return QVM_OK;
    });
}

qvm_status qvm_apply_depolarizing(qvm_state *state, uint32_t qubit, double p,
                                  qvm_rng *rng) {
    if (state == nullptr || rng == nullptr) {
        return fail_invalid("qvm_apply_depolarizing: NULL argument");
    }
    return guarded([&] {
        qvm::apply_depolarizing(state->impl, qubit, qvm::NoiseModel(p),
                                rng->impl);
        return QVM_OK;
    });
}

qvm_status qvm_prob_qubit(const qvm_state *state, uint32_t qubit, double *p0,
                          double *p1) {
    if (state == nullptr || p0 == nullptr || p1 == nullptr) {
        return fail_invalid("qvm_prob_qubit: NULL argument");
    }
    return guarded([&] {
        const qvm::QubitProbabilities probs =
            qvm::prob_one_qubit(state->impl, qubit);
        *p0 = probs.p0;
        *p1 = probs.p1;
        return QVM_OK;
    });
}

qvm_status qvm_collapse_qubit(qvm_state *state, uint32_t qubit, qvm_rng *rng,
                              int32_t *outcome) {
    if (state == nullptr || rng == nullptr || outcome == nullptr) {
        return fail_invalid("qvm_collapse_qubit: NULL argument");
    }
    return guarded([&] {
        *outcome = qvm::collapse_one_qubit(state->impl, qubit, rng->impl);
        return QVM_OK;
    });
}

qvm_status qvm_sample_counts(const qvm_state *state, uint64_t shots,
                             qvm_rng *rng, uint64_t *counts, uint64_t dim) {
    if (state == nullptr || rng == nullptr || counts == nullptr) {
        return fail_invalid("qvm_sample_counts: NULL argument");
    }
    if (dim != state->impl.dim()) {
        return fail_invalid("qvm_sample_counts: dim mismatch");
    }
    return guarded([&] {
        const auto histogram = qvm::measure_all(state->impl, shots, rng->impl);
        std::memset(counts, 0, dim * sizeof(uint64_t));
        for (const auto &[index, count] : histogram) {
            counts[index] = count;
        }
        return QVM_OK;
    });
}

qvm_status qvm_counts_format(const uint64_t *counts, uint64_t dim,
                             uint32_t num_qubits, uint64_t shots, char *buf,
                             size_t cap, size_t *needed) {
    if (counts == nullptr) {
        return fail_invalid("qvm_counts_format: counts is NULL");
    }
    if (dim != (uint64_t{1} << num_qubits)) {
        return fail_invalid("qvm_counts_format: dim is not 2^num_qubits");
    }
    return guarded([&] {
        std::map<std::uint64_t, std::uint64_t> histogram;
        for (uint64_t j = 0; j < dim; ++j) {
            if (counts[j] > 0) {
                histogram[j] = counts[j];
            }
        }
        return copy_string(qvm::counts_to_json(histogram, num_qubits, shots),
                           buf, cap, needed);
    });
}

qvm_status qvm_circuit_create(uint32_t num_qubits, qvm_circuit **out) {
    if (out == nullptr) {
        return fail_invalid("qvm_circuit_create: out is NULL");
    }
    return guarded([&] {
        *out = new qvm_circuit{qvm::ParameterizedCircuit(num_qubits)};
        return QVM_OK;
    });
}

void qvm_circuit_destroy(qvm_circuit *circuit) { delete circuit; }

qvm_status qvm_circuit_add_param(qvm_circuit *circuit, const char *name,
                                 uint32_t *index_out) {
    if (circuit == nullptr || name == nullptr) {
        return fail_invalid("qvm_circuit_add_param: NULL argument");
    }
    return guarded([&] {
        const std::size_t index = circuit->impl.add_parameter(name);
        if (index_out != nullptr) {
            *index_out = static_cast<uint32_t>(index);
        }
        return QVM_OK;
    });
}

qvm_status qvm_circuit_gate(qvm_circuit *circuit, const char *name,
                            uint32_t target) {
    if (circuit == nullptr || name == nullptr) {
        return fail_invalid("qvm_circuit_gate: NULL argument");
    }
    return guarded([&] {
        circuit->impl.add_gate(name, target);
        return QVM_OK;
    });
}

qvm_status qvm_circuit_rotation(qvm_circuit *circuit, const char *name,
                                uint32_t target, uint32_t param_index) {
    if (circuit == nullptr || name == nullptr) {
        return fail_invalid("qvm_circuit_rotation: NULL argument");
    }
    return guarded([&] {
        circuit->impl.add_rotation(axis_from_name(name), target, param_index);
        return QVM_OK;
    });
}

qvm_status qvm_circuit_fixed_rotation(qvm_circuit *circuit, const char *name,
                                      uint32_t target, double angle) {
    if (circuit == nullptr || name == nullptr) {
        return fail_invalid("qvm_circuit_fixed_rotation: NULL argument");
    }
    return guarded([&] {
        circuit->impl.add_fixed_rotation(axis_from_name(name), target, angle);
        return QVM_OK;
    });
}

qvm_status qvm_circuit_cnot(qvm_circuit *circuit, uint32_t control,
                            uint32_t target) {
    if (circuit == nullptr) {
        return fail_invalid("qvm_circuit_cnot: circuit is NULL");
    }
    return guarded([&] {
        circuit->impl.add_cnot(control, target);
        return QVM_OK;
    });
}

uint32_t qvm_circuit_num_params(const qvm_circuit *circuit) {
    return circuit == nullptr
               ? 0
               : static_cast<uint32_t>(circuit->impl.num_params());
}

uint32_t qvm_circuit_num_qubits(const qvm_circuit *circuit) {
    return circuit == nullptr
               ? 0
               : static_cast<uint32_t>(circuit->impl.num_qubits());
}

qvm_status qvm_circuit_run(const qvm_circuit *circuit, const double *params,
                           uint32_t num_params, qvm_state **out) {
    if (circuit == nullptr || out == nullptr ||
        (params == nullptr && num_params > 0)) {
        return fail_invalid("qvm_circuit_run: NULL argument");
    }
    return guarded([&] {
        *out = new qvm_state{
            qvm::run(circuit->impl, std::span(params, num_params))};
        return QVM_OK;
    });
}

qvm_status qvm_circuit_run_noisy(const qvm_circuit *circuit,
                                 const double *params, uint32_t num_params,
                                 double noise_p, uint64_t seed,
                                 qvm_state **out) {
    if (circuit == nullptr || out == nullptr ||
        (params == nullptr && num_params > 0)) {
        return fail_invalid("qvm_circuit_run_noisy: NULL argument");
    }
    return guarded([&] {
        *out = new qvm_state{qvm::run(circuit->impl,
                                      std::span(params, num_params),
                                      qvm::NoiseModel(noise_p, seed))};
        return QVM_OK;
    });
}

qvm_status qvm_circuit_apply(const qvm_circuit *circuit, qvm_state *state,
                             const double *params, uint32_t num_params) {
    if (circuit == nullptr || state == nullptr ||
        (params == nullptr && num_params > 0)) {
        return fail_invalid("qvm_circuit_apply: NULL argument");
    }
    return guarded([&] {
        qvm::apply_ops(circuit->impl, state->impl,
                       std::span(params, num_params));
        return QVM_OK;
    });
}

qvm_status qvm_circuit_format(const qvm_circuit *circuit, char *buf,
                              size_t cap, size_t *needed) {
    if (circuit == nullptr) {
        return fail_invalid("qvm_circuit_format: circuit is NULL");
    }
    return guarded([&] {
        return copy_string(qvm::visual_circuit(circuit->impl), buf, cap,
                           needed);
    });
}

qvm_status qvm_parameter_shift_gradient(const qvm_circuit *circuit,
                                        const double *params,
                                        uint32_t num_params, double shift,
                                        qvm_observable_fn observable,
                                        void *user, double *grad) {
    if (circuit == nullptr || observable == nullptr || grad == nullptr ||
        (params == nullptr && num_params > 0)) {
        return fail_invalid("qvm_parameter_shift_gradient: NULL argument");
    }
    return guarded([&] {
        qvm::detail::require(num_params == circuit->impl.num_params(),
                             "qvm_parameter_shift_gradient: parameter count "
                             "mismatch");
        const qvm::ShiftRule rule(shift);
        std::vector<double> shifted(params, params + num_params);
        const auto evaluate = [&](const std::vector<double> &values) {
            qvm_state holder{qvm::run(circuit->impl, values)};
            return observable(&holder, user);
        };
        for (uint32_t i = 0; i < num_params; ++i) {
            shifted[i] = params[i] + rule.s;
            const double plus = evaluate(shifted);
            shifted[i] = params[i] - rule.s;
            const double minus = evaluate(shifted);
            shifted[i] = params[i];
            grad[i] = rule.c * (plus - minus);
        }
        return QVM_OK;
    });
}

qvm_status qvm_run_gate_bench(const qvm_gate_bench_config *config,
                              const char *out_csv) {
    if (config == nullptr) {
        return fail_invalid("qvm_run_gate_bench: config is NULL");
    }
    return guarded([&] {
        qvm::GateBenchConfig full;
        full.qubit_min = value_or<std::size_t>(config->qubit_min, 2);
        full.qubit_max = value_or<std::size_t>(config->qubit_max, 10);
        full.depth = value_or<std::size_t>(config->depth, 10);
        full.shots = value_or<std::uint64_t>(config->shots, 1024);
        full.repeats = value_or<std::size_t>(config->repeats, 5);
        full.seed = config->seed;
        full.noise_p = config->noise_p;
        const auto rows = qvm::gate_bench(full);
        if (out_csv != nullptr) {
            qvm::write_gate_bench_csv(rows, out_csv);
        }
        return QVM_OK;
    });
}

qvm_status qvm_run_qdp_bench(const qvm_qdp_bench_config *config,
                             const char *out_csv) {
    if (config == nullptr) {
        return fail_invalid("qvm_run_qdp_bench: config is NULL");
    }
    return guarded([&] {
        qvm::QdpBenchConfig full;
        full.qubit_min = value_or<std::size_t>(config->qubit_min, 1);
        full.qubit_max = value_or<std::size_t>(config->qubit_max, 10);
        full.iters = value_or<std::size_t>(config->iters, 1000);
        full.eta = value_or(config->eta, 0.01);
        full.shift = value_or(config->shift, qvm::kDefaultShift);
        full.seed = config->seed;
        const auto rows = qvm::qdp_bench(full);
        if (out_csv != nullptr) {
            qvm::write_qdp_bench_csv(rows, out_csv);
        }
        return QVM_OK;
    });
}

qvm_status qvm_run_qdp_tutorial(const qvm_tutorial_config *config,
                                const char *trace_csv, const char *state_csv,
                                qvm_tutorial_result *result) {
    if (config == nullptr) {
        return fail_invalid("qvm_run_qdp_tutorial: config is NULL");
    }
    return guarded([&] {
        qvm::TutorialConfig full;
        full.iters = value_or<std::size_t>(config->iters, 1000);
        full.eta = value_or(config->eta, 0.01);
        full.shift = value_or(config->shift, qvm::kDefaultShift);
        full.seed = config->seed;
        const qvm::TutorialResult outcome = qvm::qdp_tutorial(full);
        if (trace_csv != nullptr) {
            qvm::write_cost_trace_csv(outcome.cost_trace, trace_csv);
        }
        if (state_csv != nullptr) {
            qvm::Wavefunction state(1);
            qvm::apply_single(
                state,
                qvm::rotation_matrix(qvm::RotationAxis::X, outcome.params[0]),
                0);
            qvm::apply_single(
                state,
                qvm::rotation_matrix(qvm::RotationAxis::Y, outcome.params[1]),
                0);
            std::ofstream out(state_csv);
            if (!out) {
                throw qvm::io_error("cannot open '" + std::string(state_csv) +
                                    "' for writing");
            }
            state.dump_csv(out);
        }
        if (result != nullptr) {
            result->params[0] = outcome.params[0];
            result->params[1] = outcome.params[1];
            result->p1 = outcome.p1;
            result->final_cost = outcome.final_cost;
            result->converged = outcome.converged ? 1 : 0;
        }
        return QVM_OK;
    });
}

qvm_status qvm_run_linreg(const qvm_linreg_config *config, const char *out_dir,
                          qvm_linreg_result *result) {
    if (config == nullptr) {
        return fail_invalid("qvm_run_linreg: config is NULL");
    }
    return guarded([&] {
        qvm::LinregConfig full;
        if (config->data_csv != nullptr) {
            full.data_path = config->data_csv;
        }
        if (config->feature_column != nullptr) {
            full.feature_column = config->feature_column;
        }
        if (config->target_column != nullptr) {
            full.target_column = config->target_column;
        }
        full.k = value_or(config->k, 10.0);
        full.eta = value_or(config->eta, 0.01);
        full.shift = value_or(config->shift, qvm::kDefaultShift);
        full.iters = value_or<std::size_t>(config->iters, 1000);
        full.train_rows = value_or<std::size_t>(config->train_rows, 400);
        full.test_rows = value_or<std::size_t>(config->test_rows, 10);
        full.seed = config->seed;
        const qvm::LinregResult outcome = qvm::run_linreg(full);
        if (out_dir != nullptr) {
            qvm::write_linreg_outputs(outcome, out_dir);
        }
        if (result != nullptr) {
            result->weight = outcome.model.weight();
            result->bias = outcome.model.bias();
            result->ols_slope = outcome.ols.slope;
            result->ols_intercept = outcome.ols.intercept;
            result->quantum_train_mse = outcome.quantum_train_mse;
            result->quantum_test_mse = outcome.quantum_test_mse;
            result->ols_train_mse = outcome.ols_train_mse;
            result->ols_test_mse = outcome.ols_test_mse;
        }
        return QVM_OK;
    });
}

qvm_status qvm_run_qnn(const qvm_qnn_config *config, const char *out_dir,
                       qvm_qnn_result *result) {
    if (config == nullptr) {
        return fail_invalid("qvm_run_qnn: config is NULL");
    }
    return guarded([&] {
        qvm::QnnRunConfig full;
        if (config->data_csv != nullptr) {
            full.data_path = config->data_csv;
        }
        if (config->feature_columns != nullptr) {
            full.feature_columns = split_columns(config->feature_columns);
        }
        if (config->target_column != nullptr) {
            full.target_column = config->target_column;
        }
        full.test_fraction = value_or(config->test_fraction, 0.2);
        full.train.layers = value_or<std::size_t>(config->layers, 5);
        full.train.iters = value_or<std::size_t>(config->iters, 150);
        full.train.eta = value_or(config->eta, 0.1);
        full.train.shift = value_or(config->shift, qvm::kDefaultShift);
        full.train.gamma = value_or(config->gamma, 10.0);
        full.train.beta1 = value_or(config->beta1, 0.9);
        full.train.beta2 = value_or(config->beta2, 0.999);
        full.train.epsilon = value_or(config->epsilon, 1e-6);
        full.train.drop_rate = config->drop_rate;
        full.seed = config->seed;
        const qvm::QnnRunResult outcome = qvm::run_qnn(full);
        if (out_dir != nullptr) {
            qvm::write_qnn_outputs(outcome, out_dir);
        }
        if (result != nullptr) {
            result->initial_train_loss = outcome.training.train_loss.front();
            result->final_train_loss = outcome.training.train_loss.back();
            result->train_accuracy = outcome.train_accuracy;
            result->test_accuracy = outcome.test_accuracy;
            for (int y = 0; y < 2; ++y) {
                for (int yhat = 0; yhat < 2; ++yhat) {
                    result->train_confusion[y][yhat] =
                        outcome.train_confusion[y][yhat];
                    result->test_confusion[y][yhat] =
                        outcome.test_confusion[y][yhat];
                }
            }
        }
        return QVM_OK;
    });
}

} // extern "C"
