#ifndef KRONCOEFF_H
#define KRONCOEFF_H

/* C interface to the Kronecker / reduced-Kronecker / Littlewood-Richardson
 * library.  All numbers cross the boundary as decimal strings (values can
 * exceed any fixed-width integer) and all partitions as bracket syntax:
 * "[4,2,1]", "[]".  Exceptions never cross; every call reports a kc_status
 * and leaves a message under kc_last_error on failure.
 *
 * A context is cheap and not meant to be shared between threads without
 * external locking.  Computation memos live process-wide and are safe to
 * share. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kc_context kc_context;

typedef enum kc_status {
    KC_OK = 0,
    KC_ERR_PARSE = 1,        /* malformed partition text */
    KC_ERR_ARGUMENT = 2,     /* bad algorithm/method/suite/parameter */
    KC_ERR_NO_PLATEAU = 3,   /* stabilization gave up below its ceiling */
    KC_ERR_DISAGREEMENT = 4, /* independent routes disagree (a bug) */
    KC_ERR_INTERNAL = 5
} kc_status;

kc_context* kc_context_new(void);
void kc_context_free(kc_context* ctx);

/* Message of the last failing call on this context; "" if none.  Owned by
 * the context, valid until the next call on it. */
const char* kc_last_error(const kc_context* ctx);

const char* kc_version(void);

/* Strings returned through out-parameters are heap copies; release them
 * here.  NULL is fine. */
void kc_string_free(char* s);

/* Caps the accepted |partition| in parsed text, process-wide.  Rejects
 * negative limits. */
kc_status kc_set_max_input_size(kc_context* ctx, int limit);

/* Canonical (strip/validate) form of one partition. */
kc_status kc_partition_canonical(kc_context* ctx, const char* text,
                                 char** out);

kc_status kc_partition_size(kc_context* ctx, const char* text,
                            long long* size_out);

/* All partitions of n, one bracket rendering per line. */
kc_status kc_partitions_of(kc_context* ctx, long long n, char** out);

/* Kronecker coefficient.  algorithm: "char", "mlr", "ct" force one route,
 * "auto" or NULL picks one (memoized).  Triples of unequal sizes give "0".
 * algorithm_out (optional) receives the route that produced the value. */
kc_status kc_kron(kc_context* ctx, const char* lambda, const char* mu,
                  const char* nu, const char* algorithm, char** value_out,
                  char** algorithm_out);

/* k'(lambda,mu,nu) = k(lambda,mu,nu') — the third component transposed. */
kc_status kc_kron_prime(kc_context* ctx, const char* lambda, const char* mu,
                        const char* nu, const char* algorithm,
                        char** value_out, char** algorithm_out);

/* Reduced Kronecker coefficient; sizes may differ.  method: "bdo" (NULL),
 * "stab", or "both" (cross-checked, KC_ERR_DISAGREEMENT on mismatch).
 * window <= 0 takes the default plateau window. */
kc_status kc_reduced(kc_context* ctx, const char* alpha, const char* beta,
                     const char* gamma, const char* method, int window,
                     char** value_out);

/* Littlewood-Richardson coefficient c^outer_{inner,type}. */
kc_status kc_lr(kc_context* ctx, const char* outer, const char* inner,
                const char* type, char** value_out);

/* Iterated multi-LR coefficient of shape against nblocks blocks. */
kc_status kc_multi_lr(kc_context* ctx, const char* shape,
                      const char* const* blocks, size_t nblocks,
                      char** value_out);

/* Normalized cache keys: kron is invariant under reorderings and paired
 * transpositions, reduced under reorderings. */
kc_status kc_kron_canonical_key(kc_context* ctx, const char* lambda,
                                const char* mu, const char* nu, char** out);
kc_status kc_reduced_canonical_key(kc_context* ctx, const char* alpha,
                                   const char* beta, const char* gamma,
                                   char** out);

int kc_verify_suite_count(void);
/* NULL past the end. */
const char* kc_verify_suite_name(int index);

/* Runs one suite, or every suite for name "all".  profile: "quick",
 * "default" (NULL), "thorough".  format: "text" (NULL) or "json".
 * passed_out (optional) gets 1/0.  A failing suite still returns KC_OK:
 * the failure is data, in the report. */
kc_status kc_verify_suite(kc_context* ctx, const char* name,
                          const char* profile, const char* format,
                          char** report_out, int* passed_out);

#ifdef __cplusplus
}
#endif

#endif
