/* Copyright 2026 The qvm developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

/* C interface of the qvm shared library.
 *
 * All entry points return a qvm_status; QVM_OK means success and any
 * other value leaves outputs untouched. qvm_last_error() returns a
 * thread-local message describing the most recent failure on the calling
 * thread. Objects are created through *_create functions and released
 * with the matching *_destroy; destroy functions accept NULL.
 *
 * String-returning calls follow the buffer protocol: pass a buffer and
 * its capacity, and *needed is set to the full length including the NUL
 * terminator. If the capacity is too small the call fails with
 * QVM_ERROR_BUFFER without writing past the buffer.
 */

#ifndef QVM_CAPI_H
#define QVM_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qvm_status {
    QVM_OK = 0,
    QVM_ERROR_INVALID_ARGUMENT = 1,
    QVM_ERROR_BUFFER = 2,
    QVM_ERROR_IO = 3,
    QVM_ERROR_INTERNAL = 4
} qvm_status;

/* Stable name for a status value, e.g. "QVM_ERROR_IO". */
const char *qvm_status_name(qvm_status status);

/* Message for the most recent failure on this thread, or "" if none. */
const char *qvm_last_error(void);

typedef struct qvm_state qvm_state;
typedef struct qvm_circuit qvm_circuit;
typedef struct qvm_rng qvm_rng;

/* ------------------------------------------------------------------ */
/* Random streams                                                      */
/* ------------------------------------------------------------------ */

qvm_status qvm_rng_create(uint64_t seed, qvm_rng **out);
void qvm_rng_destroy(qvm_rng *rng);

/* ------------------------------------------------------------------ */
/* States                                                              */
/* ------------------------------------------------------------------ */

/* |0...0> on num_qubits in [1, 24]. */
qvm_status qvm_state_create(uint32_t num_qubits, qvm_state **out);
qvm_status qvm_state_clone(const qvm_state *state, qvm_state **out);
void qvm_state_destroy(qvm_state *state);

uint32_t qvm_state_num_qubits(const qvm_state *state);
uint64_t qvm_state_dim(const qvm_state *state);

/* Copies the amplitudes into re/im arrays of length dim. */
qvm_status qvm_state_amplitudes(const qvm_state *state, double *re,
                                double *im, uint64_t dim);

/* Copies |amplitude|^2 per basis index into an array of length dim. */
qvm_status qvm_state_probabilities(const qvm_state *state, double *probs,
                                   uint64_t dim);

/* Bra-ket rendering of the state (see buffer protocol above). */
qvm_status qvm_state_format(const qvm_state *state, char *buf, size_t cap,
                            size_t *needed);

/* Writes "index,re,im" CSV rows for every amplitude to the path. */
qvm_status qvm_state_dump_csv(const qvm_state *state, const char *path);

/* ------------------------------------------------------------------ */
/* Gates on states                                                     */
/* ------------------------------------------------------------------ */

/* Named fixed gate: "H", "X", "Y", "Z" or "SX". */
qvm_status qvm_apply_gate(qvm_state *state, const char *name,
                          uint32_t target);

/* Rotation "RX", "RY" or "RZ" at an explicit angle. */
qvm_status qvm_apply_rotation(qvm_state *state, const char *name,
                              uint32_t target, double angle);

/* Single-control application of a named fixed gate ("X" gives CNOT). */
qvm_status qvm_apply_controlled(qvm_state *state, const char *name,
                                uint32_t control, uint32_t target);

/* Dense unitary block on k distinct targets. re/im are row-major arrays
 * of length (2^k)^2; row/column bits follow the target order with
 * targets[0] most significant. */
qvm_status qvm_apply_unitary(qvm_state *state, const double *re,
                             const double *im, const uint32_t *targets,
                             uint32_t num_targets);

/* One depolarizing event (total error probability p split evenly over
 * the Pauli axes), consuming a single draw from the stream. */
qvm_status qvm_apply_depolarizing(qvm_state *state, uint32_t qubit, double p,
                                  qvm_rng *rng);

/* ------------------------------------------------------------------ */
/* Measurement                                                         */
/* ------------------------------------------------------------------ */

/* Marginal probabilities of one qubit; p1 is exactly 1 - p0. */
qvm_status qvm_prob_qubit(const qvm_state *state, uint32_t qubit, double *p0,
                          double *p1);

/* Samples an outcome, collapses the state, stores 0 or 1 in *outcome. */
qvm_status qvm_collapse_qubit(qvm_state *state, uint32_t qubit, qvm_rng *rng,
                              int32_t *outcome);

/* Draws `shots` full-register samples (the state is not modified) and
 * fills counts[basis_index] with the tally; counts must have length dim
 * and is zeroed first. */
qvm_status qvm_sample_counts(const qvm_state *state, uint64_t shots,
                             qvm_rng *rng, uint64_t *counts, uint64_t dim);

/* Renders a counts array (as filled by qvm_sample_counts) as the JSON
 * document {"counts": {"bitstring": n, ...}, "shots": shots}. */
qvm_status qvm_counts_format(const uint64_t *counts, uint64_t dim,
                             uint32_t num_qubits, uint64_t shots, char *buf,
                             size_t cap, size_t *needed);

/* ------------------------------------------------------------------ */
/* Circuits                                                            */
/* ------------------------------------------------------------------ */

qvm_status qvm_circuit_create(uint32_t num_qubits, qvm_circuit **out);
void qvm_circuit_destroy(qvm_circuit *circuit);

/* Declares a named parameter; its index is written to *index_out. */
qvm_status qvm_circuit_add_param(qvm_circuit *circuit, const char *name,
                                 uint32_t *index_out);

qvm_status qvm_circuit_gate(qvm_circuit *circuit, const char *name,
                            uint32_t target);

/* Rotation bound to a declared parameter index. */
qvm_status qvm_circuit_rotation(qvm_circuit *circuit, const char *name,
                                uint32_t target, uint32_t param_index);

/* Rotation at a constant angle. */
qvm_status qvm_circuit_fixed_rotation(qvm_circuit *circuit, const char *name,
                                      uint32_t target, double angle);

qvm_status qvm_circuit_cnot(qvm_circuit *circuit, uint32_t control,
                            uint32_t target);

uint32_t qvm_circuit_num_params(const qvm_circuit *circuit);
uint32_t qvm_circuit_num_qubits(const qvm_circuit *circuit);

/* Runs on |0...0> with one value per declared parameter. */
qvm_status qvm_circuit_run(const qvm_circuit *circuit, const double *params,
                           uint32_t num_params, qvm_state **out);

/* Noisy run: a depolarizing event on every qubit after each gate, with
 * the trajectory drawn from a stream seeded by `seed`. */
qvm_status qvm_circuit_run_noisy(const qvm_circuit *circuit,
                                 const double *params, uint32_t num_params,
                                 double noise_p, uint64_t seed,
                                 qvm_state **out);

/* Applies the circuit to an existing state (e.g. an encoded input). */
qvm_status qvm_circuit_apply(const qvm_circuit *circuit, qvm_state *state,
                             const double *params, uint32_t num_params);

/* ASCII wire diagram of the circuit (see buffer protocol above). */
qvm_status qvm_circuit_format(const qvm_circuit *circuit, char *buf,
                              size_t cap, size_t *needed);

/* ------------------------------------------------------------------ */
/* Differentiation                                                     */
/* ------------------------------------------------------------------ */

/* Scalar observable computed from a final state. The callback must not
 * modify or retain the state handle. */
typedef double (*qvm_observable_fn)(const qvm_state *state, void *user);

/* Two-point parameter-shift gradient of observable(run(circuit, params))
 * with shift s: grad[i] = (f(p + s e_i) - f(p - s e_i)) / (2 sin s).
 * Exactly 2 * num_params circuit evaluations. grad must have length
 * num_params. */
qvm_status qvm_parameter_shift_gradient(const qvm_circuit *circuit,
                                        const double *params,
                                        uint32_t num_params, double shift,
                                        qvm_observable_fn observable,
                                        void *user, double *grad);

/* ------------------------------------------------------------------ */
/* Experiment runners (the CLI is a thin shell over these)             */
/*                                                                     */
/* Config fields left at 0 (or NULL) take the documented defaults;     */
/* noise_p, drop_rate and seed are the exceptions, where 0 is a real   */
/* value. Output paths may be NULL to skip writing that file, and the  */
/* result pointers may be NULL when only the files are wanted.         */
/* ------------------------------------------------------------------ */

typedef struct qvm_gate_bench_config {
    uint32_t qubit_min;  /* default 2 */
    uint32_t qubit_max;  /* default 10 */
    uint32_t depth;      /* default 10 */
    uint64_t shots;      /* default 1024 */
    uint32_t repeats;    /* default 5 */
    uint64_t seed;
    double noise_p;      /* 0 disables noise */
} qvm_gate_bench_config;

/* Runs the gate benchmark and writes "qubits,seconds" CSV to out_csv. */
qvm_status qvm_run_gate_bench(const qvm_gate_bench_config *config,
                              const char *out_csv);

typedef struct qvm_qdp_bench_config {
    uint32_t qubit_min;  /* default 1 */
    uint32_t qubit_max;  /* default 10 */
    uint32_t iters;      /* default 1000 */
    double eta;          /* default 0.01 */
    double shift;        /* default pi/20 */
    uint64_t seed;
} qvm_qdp_bench_config;

/* Runs the differentiation benchmark; writes
 * "qubits,seconds,final_cost" CSV to out_csv. */
qvm_status qvm_run_qdp_bench(const qvm_qdp_bench_config *config,
                             const char *out_csv);

typedef struct qvm_tutorial_config {
    uint32_t iters;      /* default 1000 */
    double eta;          /* default 0.01 */
    double shift;        /* default pi/20 */
    uint64_t seed;
} qvm_tutorial_config;

typedef struct qvm_tutorial_result {
    double params[2];
    double p1;
    double final_cost;
    int32_t converged;   /* 1 when p1 > 0.95 */
} qvm_tutorial_result;

/* Runs the one-qubit walkthrough; optionally writes the "iter,cost"
 * trace (pass NULL to skip) and/or the final state amplitudes. */
qvm_status qvm_run_qdp_tutorial(const qvm_tutorial_config *config,
                                const char *trace_csv,
                                const char *state_csv,
                                qvm_tutorial_result *result);

typedef struct qvm_linreg_config {
    const char *data_csv;        /* NULL selects the bundled dataset */
    const char *feature_column;  /* name or 0-based index, NULL = "x" */
    const char *target_column;   /* NULL = "y" */
    double k;                    /* default 10 */
    double eta;                  /* default 0.01 */
    double shift;                /* default pi/20 */
    uint32_t iters;              /* default 1000 */
    uint32_t train_rows;         /* default 400 */
    uint32_t test_rows;          /* default 10 */
    uint64_t seed;
} qvm_linreg_config;

typedef struct qvm_linreg_result {
    double weight;               /* k * <w> */
    double bias;                 /* k * <b> */
    double ols_slope;
    double ols_intercept;
    double quantum_train_mse;
    double quantum_test_mse;
    double ols_train_mse;
    double ols_test_mse;
} qvm_linreg_result;

/* Runs the regression pipeline and writes loss_trace.csv and fit.csv
 * into out_dir. */
qvm_status qvm_run_linreg(const qvm_linreg_config *config,
                          const char *out_dir, qvm_linreg_result *result);

typedef struct qvm_qnn_config {
    const char *data_csv;        /* NULL selects the bundled dataset */
    const char *feature_columns; /* comma-separated, NULL = defaults */
    const char *target_column;   /* NULL = "Purchased" */
    double test_fraction;        /* default 0.2 */
    uint32_t layers;             /* default 5 */
    uint32_t iters;              /* default 150 */
    double eta;                  /* default 0.1 */
    double shift;                /* default pi/20 */
    double gamma;                /* default 10 */
    double beta1;                /* default 0.9 */
    double beta2;                /* default 0.999 */
    double epsilon;              /* default 1e-6 */
    double drop_rate;            /* default 0 */
    uint64_t seed;
} qvm_qnn_config;

typedef struct qvm_qnn_result {
    double initial_train_loss;
    double final_train_loss;
    double train_accuracy;
    double test_accuracy;
    /* Confusion counts indexed [label][prediction]. */
    uint64_t train_confusion[2][2];
    uint64_t test_confusion[2][2];
} qvm_qnn_result;

/* Runs the classifier pipeline and writes qnn_trace.csv and
 * confusion.json into out_dir. */
qvm_status qvm_run_qnn(const qvm_qnn_config *config, const char *out_dir,
                       qvm_qnn_result *result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QVM_CAPI_H */
