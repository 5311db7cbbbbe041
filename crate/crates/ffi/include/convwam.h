#ifndef CONVWAM_H
#define CONVWAM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CwFormat {
  CW_FORMAT_TEXT = 0,
  CW_FORMAT_JSON = 1,
} CwFormat;

typedef enum CwKind {
  CW_KIND_BLOCK = 0,
  CW_KIND_CONV = 1,
  CW_KIND_QUANTUM = 2,
} CwKind;

// Status codes. Zero is success.
typedef enum CwStatus {
  CW_STATUS_OK = 0,
  CW_STATUS_NULL_POINTER = 1,
  CW_STATUS_INVALID_UTF8 = 2,
  CW_STATUS_PARSE = 3,
  CW_STATUS_INVALID_INPUT = 4,
  CW_STATUS_BUDGET = 5,
  CW_STATUS_ARITHMETIC = 6,
  CW_STATUS_PANIC = 7,
} CwStatus;

// Opaque handle to a parsed code.
typedef struct CwCode CwCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a block, convolutional or quantum code file. The kind is
// detected from the contents.
//
// # Safety
//
// `text` must be a NUL-terminated string and `out` a valid pointer.
// On success `*out` owns a handle that must be released with
// `cw_code_free`.
enum CwStatus cw_code_parse(const char *text, struct CwCode **out);

// # Safety
//
// `code` must be null or a handle from `cw_code_parse` that has not
// been freed.
void cw_code_free(struct CwCode *code);

// # Safety
//
// `code` must be a live handle and `out` a valid pointer.
enum CwStatus cw_code_kind(const struct CwCode *code, enum CwKind *out);

// Caps the number of words any exhaustive enumeration may visit.
//
// # Safety
//
// `code` must be a live handle.
enum CwStatus cw_code_set_budget(struct CwCode *code, uint64_t budget);

// Weight enumerator of the code: the Hamming enumerator for block codes,
// the weight adjacency matrix otherwise.
//
// # Safety
//
// `code` must be a live handle and `out` a valid pointer. `*out` must be
// released with `cw_string_free`.
enum CwStatus cw_wam(const struct CwCode *code, enum CwFormat format, char **out);

// Enumerator of the dual code, computed by the MacWilliams transform.
//
// # Safety
//
// Same contract as `cw_wam`.
enum CwStatus cw_dual_wam(const struct CwCode *code, enum CwFormat format, char **out);

// Checks the duality identities against exhaustive oracles. `*report`
// receives one "PASS name" or "FAIL name: detail" line per check and
// `*passed` is set to 1 when all of them hold.
//
// # Safety
//
// `code` must be a live handle; `report` and `passed` must be valid
// pointers. `*report` must be released with `cw_string_free`.
enum CwStatus cw_verify(const struct CwCode *code, uint32_t d_max, char **report, int32_t *passed);

// Message for the last failure on this thread, or null if none. The
// returned string must be released with `cw_string_free`.
char *cw_last_error(void);

// # Safety
//
// `s` must be null or a string returned by this library that has not
// already been freed.
void cw_string_free(char *s);

// Library version, a static string that must not be freed.
const char *cw_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONVWAM_H */
