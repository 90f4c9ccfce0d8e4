/* tclab — exact triple-binomial congruence lab.
 *
 * C interface to the verification core. All functions return a tcl_status;
 * results come back as opaque tcl_report handles carrying a verdict string
 * and a canonical JSON payload (stable key order, exact integers as decimal
 * strings). Handles must be released with the matching _destroy call.
 */
#ifndef TCLAB_H
#define TCLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcl_status {
    TCL_OK = 0,
    TCL_EINVAL = 2,   /* invalid arguments or failed validation */
    TCL_EBUDGET = 3,  /* configured resource budget exceeded */
    TCL_EINTERNAL = 4 /* unexpected internal failure */
} tcl_status;

typedef struct tcl_ctx tcl_ctx;
typedef struct tcl_report tcl_report;

const char* tcl_version(void);

/* Context: owns run configuration and the last error message. Not
 * thread-safe; use one context per thread. */
tcl_status tcl_ctx_create(tcl_ctx** out);
void tcl_ctx_destroy(tcl_ctx* ctx);

tcl_status tcl_ctx_set_jobs(tcl_ctx* ctx, uint32_t jobs);
/* Budgets guard against runaway runs; 0 means unlimited. */
tcl_status tcl_ctx_set_tuple_budget(tcl_ctx* ctx, uint64_t max_tuples);
tcl_status tcl_ctx_set_dim_budget(tcl_ctx* ctx, uint64_t max_dim);

/* Message describing the most recent failure on this context; empty string
 * if the last call succeeded. Owned by the context. */
const char* tcl_ctx_last_error(const tcl_ctx* ctx);

/* family: "C", "C_alt", "D", "D_alt", "f" (require p, c, d, k) or
 *         "F", "G", "F_closed", "G_closed" (p ignored).
 * exploratory nonzero lifts the strict ell-domain check. */
tcl_status tcl_eval(tcl_ctx* ctx, const char* family, uint64_t p, uint64_t c,
                    uint64_t d, uint64_t k, int64_t ell, int exploratory,
                    tcl_report** out);

/* The whole sequence f(1..c+d+1-k) with residues. */
tcl_status tcl_f_table(tcl_ctx* ctx, uint64_t p, uint64_t c, uint64_t d,
                       uint64_t k, tcl_report** out);

/* scope: "theorem", "rewrites", "lemmas" or "all". Verdict "pass" when no
 * counterexample was found, "fail" otherwise (failures are listed in the
 * payload). */
tcl_status tcl_verify(tcl_ctx* ctx, const char* scope, uint64_t p_max,
                      uint64_t max_cd, tcl_report** out);

/* method: "closed", "rank" or "both". "both" compares the two and carries
 * verdict "pass"/"fail"; single methods report "evaluated". */
tcl_status tcl_rep_decompose(tcl_ctx* ctx, uint64_t p, uint64_t c, uint64_t d,
                             const char* method, tcl_report** out);

/* Generator checks for the module of dimension 2p-lambda_k. */
tcl_status tcl_rep_generator(tcl_ctx* ctx, uint64_t p, uint64_t c, uint64_t d,
                             uint64_t k, tcl_report** out);

/* "pass", "fail" or "evaluated". Owned by the report. */
const char* tcl_report_verdict(const tcl_report* report);
/* Canonical JSON payload, UTF-8, no trailing newline. Owned by the report. */
const char* tcl_report_payload(const tcl_report* report);
/* Wall-clock seconds spent producing the report (never part of the payload). */
double tcl_report_wall_seconds(const tcl_report* report);
void tcl_report_destroy(tcl_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TCLAB_H */
