/* C interface to the antichain-lattice library.
 *
 * All values are immutable once created; handles are safe to share across
 * threads.  Functions return ACLAT_OK on success; on failure the result
 * out-parameters are untouched and aclat_last_error() describes the problem
 * (thread-local).  Strings returned through char** are owned by the caller
 * and must be released with aclat_string_free().
 */
#ifndef ACLAT_H
#define ACLAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    ACLAT_OK = 0,
    ACLAT_ERR_PARSE = 1,        /* malformed antichain text */
    ACLAT_ERR_USAGE = 2,        /* arguments never make sense */
    ACLAT_ERR_PRECONDITION = 3, /* documented precondition violated */
    ACLAT_ERR_BUDGET = 4,       /* enumeration budget exceeded */
    ACLAT_ERR_VERIFY = 5        /* a verification suite found a failure */
} aclat_status;

/* Opaque canonical antichain over a universe {1..n}. */
typedef struct aclat_antichain aclat_antichain;

const char* aclat_last_error(void);
void aclat_string_free(char* s);
void aclat_antichain_free(aclat_antichain* a);

/* Text must already be an antichain; comparable pairs are rejected. */
aclat_status aclat_antichain_parse(int n, const char* text, aclat_antichain** out);
/* Accepts any family of sets and keeps only the maximal ones. */
aclat_status aclat_antichain_parse_family(int n, const char* text, aclat_antichain** out);
aclat_status aclat_antichain_format(const aclat_antichain* a, char** out);

/* Lattice operations; operands must share one universe. */
aclat_status aclat_join(const aclat_antichain* a, const aclat_antichain* b, aclat_antichain** out);
aclat_status aclat_meet(const aclat_antichain* a, const aclat_antichain* b, aclat_antichain** out);
aclat_status aclat_direct_product(const aclat_antichain* a, const aclat_antichain* b,
                                  aclat_antichain** out);
aclat_status aclat_leq(const aclat_antichain* a, const aclat_antichain* b, int* out);
/* Largest antichain dominating no member of a. */
aclat_status aclat_nondominating(const aclat_antichain* a, aclat_antichain** out);

/* Size of [bottom, top] as a decimal string.
 * method: "brute" | "even" | "odd" | "auto" | "pivot:K" | "multi:K1,K2,..." */
aclat_status aclat_interval_size(const aclat_antichain* bottom, const aclat_antichain* top,
                                 const char* method, int threads, char** out_decimal);

/* Underlying poset, one "level k: ..." line per level. */
aclat_status aclat_interval_poset(const aclat_antichain* bottom, const aclat_antichain* top,
                                  char** out);

/* Canonical layers of chi in [bottom, top], printed as "m:{...} ... M:{...}". */
aclat_status aclat_interval_decompose(const aclat_antichain* bottom, const aclat_antichain* top,
                                      const aclat_antichain* chi, char** out);

/* Dedekind number M(n) as a decimal string.
 * method: "brute" | "levels" | "product"; split: "s,t" sizes with s+t = n
 * (product only; NULL picks the balanced split). */
aclat_status aclat_dedekind(int n, const char* method, const char* split, int threads,
                            char** out_decimal);

/* Partition reports as CSV (key,bottom,top,size).
 * kind "nondominating": arg is the antichain text generating the blocks.
 * kind "product": arg is the split "s,t". */
aclat_status aclat_partition_csv(int n, const char* kind, const char* arg, char** out);

/* Runs a randomized theorem suite ("partitions" | "directjoin" | "updown" |
 * "all").  *out gets a PASS/FAIL report; *all_pass is 1 when every check
 * passed.  Returns ACLAT_OK even when checks fail. */
aclat_status aclat_verify(const char* suite, int n, uint64_t seed, int trials,
                          char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* ACLAT_H */
