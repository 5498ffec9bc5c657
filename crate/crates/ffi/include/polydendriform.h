#ifndef POLYDENDRIFORM_H
#define POLYDENDRIFORM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a call.
typedef enum PdStatus {
  PD_STATUS_OK = 0,
  // Well-formed input violating a structural requirement.
  PD_STATUS_DOMAIN_ERROR = 1,
  // Input that could not be parsed.
  PD_STATUS_MALFORMED_INPUT = 2,
  PD_STATUS_NULL_POINTER = 3,
  // A bug inside the library; the panic was caught at the boundary.
  PD_STATUS_PANIC = 4,
} PdStatus;

typedef struct PdConstruct PdConstruct;

typedef struct PdDelegation PdDelegation;

typedef struct PdHypergraph PdHypergraph;

typedef struct PdLinear PdLinear;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Kind of the last error on this thread, or null if the last call succeeded.
const char *pd_last_error_kind(void);

// Message of the last error on this thread, or null. Valid until the next call.
const char *pd_last_error_message(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed.
void pd_string_free(char *s);

// The member of a universe (`"gamma:2"`, `"simplex"`, …) on a carrier
// (`"1..5"`, `"1,3,5"`).
//
// # Safety
// Strings must be nul-terminated; `out` must be writable.
enum PdStatus pd_universe_member(const char *universe,
                                 const char *carrier,
                                 struct PdHypergraph **out);

// Reads a hypergraph from `{"vertices":[…],"hyperedges":[[…]…]}`.
//
// # Safety
// `json` must be nul-terminated; `out` must be writable.
enum PdStatus pd_hypergraph_from_json(const char *json, struct PdHypergraph **out);

// # Safety
// `h` must be a live handle; `out` must be writable.
enum PdStatus pd_hypergraph_to_json(const struct PdHypergraph *h, char **out);

// # Safety
// `h` must come from this library and not have been freed.
void pd_hypergraph_free(struct PdHypergraph *h);

// Number of faces, i.e. of constructs. Fails with `TooLarge` past 64 bits.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum PdStatus pd_count_constructs(const struct PdHypergraph *h, uint64_t *out);

// All constructs as a JSON array of construct objects.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum PdStatus pd_enumerate_json(const struct PdHypergraph *h, char **out);

// Parses a construct in the compact notation, e.g. `"23(1,4)"`.
//
// # Safety
// `text` must be nul-terminated; `out` must be writable.
enum PdStatus pd_construct_parse(const char *text, struct PdConstruct **out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum PdStatus pd_construct_to_string(const struct PdConstruct *c, char **out);

// Writes whether `c` is a construct of `h`. An invalid construct is not an
// error; the reason is left in the last-error message.
//
// # Safety
// Handles must be live; `out` must be writable.
enum PdStatus pd_construct_validate(const struct PdHypergraph *h,
                                    const struct PdConstruct *c,
                                    bool *out);

// # Safety
// `c` must come from this library and not have been freed.
void pd_construct_free(struct PdConstruct *c);

// Reads a delegation from
// `{"universe":tag,"parts":[construct…],"whole":[…],"mode":"strict"|"semistrict"}`.
//
// # Safety
// `json` must be nul-terminated; `out` must be writable.
enum PdStatus pd_delegation_from_json(const char *json, struct PdDelegation **out);

// # Safety
// `d` must come from this library and not have been freed.
void pd_delegation_free(struct PdDelegation *d);

// The product of a delegation. With `substitute_q` false, strict teams keep
// `q` formal and semi-strict ones use `q = -1`; otherwise `q = q_value`.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum PdStatus pd_shuffle(const struct PdDelegation *d,
                         bool substitute_q,
                         int64_t q_value,
                         struct PdLinear **out);

// Number of terms of a linear construct.
//
// # Safety
// `l` must be a live handle or null (giving 0).
size_t pd_linear_len(const struct PdLinear *l);

// `[{"construct":…,"coeff":{"exponent":k,…}}…]`.
//
// # Safety
// `l` must be a live handle; `out` must be writable.
enum PdStatus pd_linear_to_json(const struct PdLinear *l, char **out);

// Human-readable form such as `2(1(3(4))) + q 23(1,4)`.
//
// # Safety
// `l` must be a live handle; `out` must be writable.
enum PdStatus pd_linear_to_string(const struct PdLinear *l, char **out);

// # Safety
// `l` must come from this library and not have been freed.
void pd_linear_free(struct PdLinear *l);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYDENDRIFORM_H */
