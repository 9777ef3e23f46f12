/* fiberprod: Betti numbers and Poincare series of fiber products of
 * power-series quotient rings, with a brute-force Koszul-homology oracle
 * for monomial ideals.
 *
 * C interface to the shared library. All state lives behind the opaque
 * fp_session handle; every entry point reports an fp_status. Rendered
 * reports and error strings stay owned by the session and are valid until
 * the next call on the same session.
 */
#ifndef FIBERPROD_H
#define FIBERPROD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fp_session fp_session;

/* Values 0..4 match the CLI exit codes documented for the fp tool. */
typedef enum fp_status {
  FP_OK = 0,
  FP_ERR_DISAGREEMENT = 1,       /* oracle/formula mismatch, failed check, or
                                    inconsistent Betti data */
  FP_ERR_PARSE = 2,              /* spec-file syntax or validation failure */
  FP_ERR_MISSING_BETTI = 3,      /* non-monomial J without a betti_J override */
  FP_ERR_ORACLE_UNSUPPORTED = 4, /* oracle on non-monomial data or over limits */
  FP_ERR_RANGE = 5,              /* value does not fit the caller's buffer */
  FP_ERR_BAD_ARGUMENT = 6,
  FP_ERR_NO_RESULT = 7,          /* getter before a successful fp_run */
  FP_ERR_INTERNAL = 8
} fp_status;

fp_session* fp_session_new(void);
void fp_session_free(fp_session* s);

/* Options, all optional:
 *   "field"      "q" or "gf:<prime>" (overrides the spec file's field line)
 *   "max-gens"   decimal generator cap for the oracle path (default 14)
 *   "max-degree" decimal per-generator term degree cap (default 50)
 *   "seed"       decimal, echoed into reports
 *   "oracle"     "0" or "1": run the brute-force cross-check in "betti"
 */
fp_status fp_session_set_option(fp_session* s, const char* key, const char* value);

fp_status fp_session_load_spec_text(fp_session* s, const char* text);
fp_status fp_session_load_spec_file(fp_session* s, const char* path);

/* command: "reduce", "betti", "poincare", "ranks" or "verify".
 * Returns FP_OK when a report was produced, including reports whose checks
 * failed; fp_exit_code() then carries the CLI exit code (0 or 1). Hard
 * failures (parse errors, missing Betti input, ...) return their status and
 * leave an error message. */
fp_status fp_run(fp_session* s, const char* command);

const char* fp_last_error(const fp_session* s);
const char* fp_report_text(const fp_session* s);
const char* fp_report_json(const fp_session* s);
int fp_exit_code(const fp_session* s);

/* Typed getters, valid after a successful fp_run. */
fp_status fp_get_pq(const fp_session* s, int32_t* p, int32_t* q);

/* key: "betti_formula", "betti_oracle", "betti_J", "betti_J'", "poincare" or
 * "cone_ranks". Writes up to cap entries and the true length to *out_len.
 * FP_ERR_RANGE if cap is too small or an entry exceeds uint64;
 * FP_ERR_NO_RESULT if the last command did not compute that sequence. */
fp_status fp_get_sequence(const fp_session* s, const char* key, uint64_t* buf, size_t cap,
                          size_t* out_len);

const char* fp_library_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FIBERPROD_H */
