/* Compiles as plain C and exercises the shared-library surface. */

#include <stdio.h>
#include <string.h>

#include "twistknot.h"

int main(void) {
    tk_options opts;
    tk_options_init(&opts);
    opts.run_numeric = 0;

    tk_report* report = NULL;
    tk_status st = tk_certify(-2, &opts, &report);
    if (st != TK_OK) {
        fprintf(stderr, "certify failed: %s\n", tk_status_message(st));
        return 1;
    }
    if (tk_report_consistent(report) != 1 || tk_report_q(report) != -2) {
        fprintf(stderr, "unexpected report contents\n");
        tk_report_free(report);
        return 1;
    }

    char* json = NULL;
    st = tk_report_to_json(report, &json);
    if (st != TK_OK || json == NULL || strstr(json, "\"knot\":\"J(2,-4)\"") == NULL) {
        fprintf(stderr, "serialization failed\n");
        tk_string_free(json);
        tk_report_free(report);
        return 1;
    }

    tk_string_free(json);
    tk_report_free(report);

    if (tk_certify(0, NULL, &report) != TK_ERR_INVALID_Q) {
        fprintf(stderr, "q = 0 must be rejected\n");
        return 1;
    }
    printf("capi smoke ok\n");
    return 0;
}
