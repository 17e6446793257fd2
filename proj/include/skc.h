/* C API for the secret-key capacity toolkit.
 *
 * All functions return skc_status; results come back through out
 * parameters. Sources are opaque handles released with skc_source_free.
 * Report functions produce JSON strings owned by the library; release
 * them with skc_string_free. On failure, skc_last_error() returns a
 * thread-local description of what went wrong.
 */
#ifndef SKC_H
#define SKC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skc_status {
    SKC_OK = 0,
    SKC_ERROR_PARSE = 1,      /* malformed model document */
    SKC_ERROR_DOMAIN = 2,     /* violated precondition or bad argument */
    SKC_ERROR_INTERNAL = 3,   /* broken invariant inside the library */
    SKC_ERROR_IO = 4          /* file could not be read or written */
} skc_status;

typedef struct skc_source skc_source;

const char* skc_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* skc_last_error(void);

void skc_string_free(char* s);
void skc_source_free(skc_source* source);

/* Model documents (JSON; see README for the grammar). */
skc_status skc_source_parse(const char* json_text, skc_source** out);
skc_status skc_source_read_file(const char* path, skc_source** out);
skc_status skc_source_serialize(const skc_source* source, char** json_out);

/* Generator families: "complete" (m,t), "cycle" (m), "harary" (m,k),
 * "sts" (m), "chan" (m), "omni" (m,p). params_json example: {"m":7}. */
skc_status skc_source_generate(const char* family, const char* params_json,
                               skc_source** out);

int skc_source_terminal_count(const skc_source* source);

/* H(X_A) in bits for the subset given as a bitmask (terminal i = bit i-1). */
skc_status skc_source_entropy(const skc_source* source, uint32_t subset_mask,
                              double* out_bits);

/* Copy of the source with the float comparison tolerance replaced.
 * Affects pmf-backed sources; exact models pass through unchanged. */
skc_status skc_source_with_tolerance(const skc_source* source, double tolerance,
                                     skc_source** out);

/* JSON reports. */
skc_status skc_info_report(const skc_source* source, char** json_out);
skc_status skc_classify_report(const skc_source* source, char** json_out);
skc_status skc_rsk_report(const skc_source* source, char** json_out);
skc_status skc_omnivocality_report(const skc_source* source, char** json_out);

/* Spanning-tree XOR protocol on the n-fold expansion of a PIN graph. */
skc_status skc_protocol_report(const skc_source* source, int n, uint64_t seed,
                               char** json_out);

/* Allocation-algorithm certification for the (m,t) hyperedge table. */
skc_status skc_allocation_report(int m, int t, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SKC_H */
