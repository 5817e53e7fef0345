/* Build: cargo build -p cyclic-faces-ffi
 *        cc -Icrates/ffi/include crates/ffi/c/smoke.c \
 *           target/debug/libcyclic_faces_ffi.a -lpthread -ldl -lm -o smoke
 */
#include <stdio.h>
#include "cyclic_faces.h"

int main(void) {
    CfSequence *f = NULL;
    if (cf_f_vector(6, 4, CF_ROUTE_DIRECT, 16, &f) != CF_STATUS_OK) {
        char *msg = cf_last_error_message();
        fprintf(stderr, "error: %s\n", msg);
        cf_string_free(msg);
        return 1;
    }
    char *text = NULL;
    cf_sequence_to_string(f, &text);
    CfShapeReport report;
    cf_sequence_analyze(f, &report);
    printf("C(6,4): %s log-concave=%d unimodal=%d peak=%lld\n", text,
           report.log_concave, report.unimodal, (long long)report.peak_start);
    cf_string_free(text);
    cf_sequence_free(f);

    if (cf_f_vector(4, 4, CF_ROUTE_DIRECT, 16, &f) != CF_STATUS_INVALID_PARAMS) {
        return 1;
    }
    char *msg = cf_last_error_message();
    printf("rejected: %s\n", msg);
    cf_string_free(msg);
    return 0;
}
