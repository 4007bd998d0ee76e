/* Builds the optimal scheme, prints its weights and extends f1 on the
 * benchmark interval. Link against libcnext_ffi. */
#include <math.h>
#include <stdio.h>

#include "cnext.h"

static double f1(void *user_data, double x) {
    (void)user_data;
    return 0.04 / (0.04 + x * x);
}

int main(void) {
    CnextScheme *s = NULL;
    if (cnext_scheme_new_optimal(9, 2.0, &s) != CNEXT_STATUS_OK) {
        fprintf(stderr, "scheme: %s\n", cnext_last_error());
        return 1;
    }
    double w[10];
    cnext_scheme_weights(s, w, 10);
    printf("cond %.17g\n", cnext_scheme_cond(s));
    printf("w0 %.17g\n", w[0]);

    CnextExtension1D *e = NULL;
    if (cnext_ext1d_new_benchmark(9, 2.0, 0.0, &e) != CNEXT_STATUS_OK) {
        fprintf(stderr, "extension: %s\n", cnext_last_error());
        return 1;
    }
    double kappa = 0.0;
    size_t chunks = 0;
    cnext_ext1d_kappa(e, f1, NULL, 4001, &kappa);
    cnext_ext1d_chunks(e, f1, NULL, 24, 1e-6, &chunks);
    printf("kappa %.6f\nchunks %zu\n", kappa, chunks);

    CnextStatus st = cnext_ext1d_eval(e, f1, NULL, 0.5, &kappa);
    printf("outside %d %s\n", (int)st, cnext_last_error());

    cnext_ext1d_free(e);
    cnext_scheme_free(s);
    return 0;
}
