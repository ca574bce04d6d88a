#ifndef TWISTKNOT_H
#define TWISTKNOT_H

/*
 * C API for the twistknot library.
 *
 * Exact verification certificates for the twist knots J(2,2q): Riley
 * polynomial, twisted Alexander coefficients at the parabolic
 * representations, gcd coprimality certificates, and genus/fibering
 * verdicts.  Every fallible call returns a tk_status; results come back
 * through opaque tk_report handles and JSON strings.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
    TK_OK = 0,
    TK_ERR_ARG = 1,            /* null pointer or malformed argument */
    TK_ERR_INVALID_Q = 2,      /* q = 0 presents the trivial knot */
    TK_ERR_DOMAIN = 3,         /* exact-arithmetic precondition violated */
    TK_ERR_NO_CONVERGENCE = 4, /* numeric root finder hit its iteration cap */
    TK_ERR_PARSE = 5,          /* malformed report JSON */
    TK_ERR_INTERNAL = 6
} tk_status;

typedef struct tk_options {
    int run_fox;     /* nonzero: run the Fox-calculus oracle (slow path) */
    int run_numeric; /* nonzero: run the floating-point root layer */
    double tol;      /* root-finder tolerance; <= 0 selects 1e-12 */
} tk_options;

/* opaque verification certificate */
typedef struct tk_report tk_report;

const char* tk_version(void);
const char* tk_status_message(tk_status status);

/* fox off, numeric on, tol 1e-12 */
void tk_options_init(tk_options* options);

/* Certify one knot.  On TK_OK the caller owns *out (tk_report_free). */
tk_status tk_certify(int32_t q, const tk_options* options, tk_report** out);

/* Rebuild a report from its JSON serialization. */
tk_status tk_report_from_json(const char* json, tk_report** out);

void tk_report_free(tk_report* report);

/* Canonical JSON serialization; caller frees *out with tk_string_free. */
tk_status tk_report_to_json(const tk_report* report, char** out);
void tk_string_free(char* s);

/* Scalar accessors.  Boolean getters return 0/1, or -1 where marked. */
int32_t tk_report_q(const tk_report* report);
int tk_report_consistent(const tk_report* report);
int tk_report_genus_detected(const tk_report* report);
int tk_report_monic_at_some_rep(const tk_report* report);
int tk_report_fibered_expected(const tk_report* report);
int tk_report_fox_agrees(const tk_report* report);  /* -1 when not run */
int tk_report_numeric_ok(const tk_report* report);  /* -1 when not run */

#ifdef __cplusplus
}
#endif

#endif /* TWISTKNOT_H */
