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

/* Compiled as plain C to prove the public header and the exported
 * symbols are usable without a C++ toolchain. */

#include "qvm/capi.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

#define EXPECT(cond)                                                       \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "%s:%d: FAILED %s (last error: %s)\n",         \
                    __FILE__, __LINE__, #cond, qvm_last_error());          \
            return 1;                                                      \
        }                                                                  \
    } while (0)

static double z_observable(const qvm_state *state, void *user) {
    double p0 = 0.0;
    double p1 = 0.0;
    int *evals = (int *)user;
    if (evals != NULL) {
        *evals += 1;
    }
    if (qvm_prob_qubit(state, 0, &p0, &p1) != QVM_OK) {
        return 0.0;
    }
    return p0 - p1;
}

int main(void) {
    /* Bell state via the gate entry points. */
    qvm_state *state = NULL;
    EXPECT(qvm_state_create(2, &state) == QVM_OK);
    EXPECT(qvm_state_num_qubits(state) == 2);
    EXPECT(qvm_state_dim(state) == 4);
    EXPECT(qvm_apply_gate(state, "H", 0) == QVM_OK);
    EXPECT(qvm_apply_controlled(state, "X", 0, 1) == QVM_OK);

    double probs[4];
    EXPECT(qvm_state_probabilities(state, probs, 4) == QVM_OK);
    EXPECT(fabs(probs[0] - 0.5) < 1e-12);
    EXPECT(fabs(probs[3] - 0.5) < 1e-12);

    /* Buffer protocol round trip. */
    size_t needed = 0;
    EXPECT(qvm_state_format(state, NULL, 0, &needed) == QVM_ERROR_BUFFER);
    EXPECT(needed > 1);
    char text[256];
    EXPECT(needed <= sizeof(text));
    EXPECT(qvm_state_format(state, text, sizeof(text), &needed) == QVM_OK);
    EXPECT(strlen(text) == needed - 1);
    EXPECT(strstr(text, "0.707107") != NULL);

    /* Sampling and the JSON rendering of the histogram. */
    qvm_rng *rng = NULL;
    EXPECT(qvm_rng_create(6, &rng) == QVM_OK);
    uint64_t counts[4];
    EXPECT(qvm_sample_counts(state, 100, rng, counts, 4) == QVM_OK);
    EXPECT(counts[0] + counts[3] == 100);
    EXPECT(counts[1] == 0 && counts[2] == 0);
    char json[256];
    EXPECT(qvm_counts_format(counts, 4, 2, 100, json, sizeof(json),
                             &needed) == QVM_OK);
    EXPECT(strstr(json, "\"shots\":100") != NULL);

    int32_t outcome = -1;
    EXPECT(qvm_collapse_qubit(state, 0, rng, &outcome) == QVM_OK);
    EXPECT(outcome == 0 || outcome == 1);
    qvm_state_destroy(state);

    /* Errors report through status codes and the thread-local message. */
    EXPECT(qvm_state_create(0, &state) == QVM_ERROR_INVALID_ARGUMENT);
    EXPECT(strlen(qvm_last_error()) > 0);
    EXPECT(strcmp(qvm_status_name(QVM_ERROR_INVALID_ARGUMENT),
                  "QVM_ERROR_INVALID_ARGUMENT") == 0);

    /* Parameterized circuit and the shift-rule gradient. */
    qvm_circuit *circuit = NULL;
    EXPECT(qvm_circuit_create(1, &circuit) == QVM_OK);
    uint32_t t0 = 0;
    EXPECT(qvm_circuit_add_param(circuit, "t0", &t0) == QVM_OK);
    EXPECT(qvm_circuit_rotation(circuit, "RX", 0, t0) == QVM_OK);
    EXPECT(qvm_circuit_num_params(circuit) == 1);

    const double params[1] = {0.9};
    qvm_state *run_out = NULL;
    EXPECT(qvm_circuit_run(circuit, params, 1, &run_out) == QVM_OK);
    double p0 = 0.0;
    double p1 = 0.0;
    EXPECT(qvm_prob_qubit(run_out, 0, &p0, &p1) == QVM_OK);
    EXPECT(fabs((p0 - p1) - cos(0.9)) < 1e-12);
    qvm_state_destroy(run_out);

    int evals = 0;
    double grad[1] = {0.0};
    EXPECT(qvm_parameter_shift_gradient(circuit, params, 1, 0.15707963267949,
                                        z_observable, &evals, grad) ==
           QVM_OK);
    EXPECT(fabs(grad[0] + sin(0.9)) < 1e-9);
    EXPECT(evals == 2);
    qvm_circuit_destroy(circuit);
    qvm_rng_destroy(rng);

    printf("capi_c_compat: all checks passed\n");
    return 0;
}
