#ifndef SEMLAT_H
#define SEMLAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum SemlatStatus {
  SEMLAT_STATUS_OK = 0,
  // No model or solution exists.
  SEMLAT_STATUS_INFEASIBLE = 1,
  // Bad argument or precondition violation.
  SEMLAT_STATUS_USAGE = 2,
  // The atom budget was exceeded.
  SEMLAT_STATUS_RESOURCE = 3,
  // Text input failed to parse; the message carries the code and position.
  SEMLAT_STATUS_PARSE = 4,
  // A required pointer was null or a string was not UTF-8.
  SEMLAT_STATUS_INVALID_ARGUMENT = 5,
  // An internal panic was caught.
  SEMLAT_STATUS_INTERNAL = 6,
} SemlatStatus;

// Opaque embedding handle.
typedef struct SemlatEmbedding SemlatEmbedding;

// Opaque atomized model handle.
typedef struct SemlatModel SemlatModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; empty after a success.
// The pointer stays valid until the next semlat call on this thread.
const char *semlat_last_error_message(void);

// Library version as a static string.
const char *semlat_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from a semlat out-parameter and not have been freed.
void semlat_string_free(char *s);

// Parses an embedding document.
//
// # Safety
// `text` is a NUL-terminated string; `out` is writable.
enum SemlatStatus semlat_embedding_parse(const char *text, struct SemlatEmbedding **out);

// Builds a bundled problem from a description such as `nqueens m=4 variant=2`.
//
// # Safety
// `spec` is a NUL-terminated string; `out` is writable.
enum SemlatStatus semlat_embedding_generate(const char *spec, struct SemlatEmbedding **out);

// Canonical document text of an embedding.
//
// # Safety
// `e` is a live handle; `out` is writable.
enum SemlatStatus semlat_embedding_serialize(const struct SemlatEmbedding *e, char **out);

// Number of duples in the separator set Γ.
//
// # Safety
// `e` is null or a live handle. Returns 0 for null.
size_t semlat_embedding_gamma_len(const struct SemlatEmbedding *e);

// # Safety
// `e` is null or a handle not yet freed.
void semlat_embedding_free(struct SemlatEmbedding *e);

// Builds the freest model of R⁺. `budget` 0 selects the default atom budget.
//
// # Safety
// `e` is a live handle; `out` is writable.
enum SemlatStatus semlat_freest_model(const struct SemlatEmbedding *e,
                                      size_t budget,
                                      struct SemlatModel **out);

// Reads a model dump.
//
// # Safety
// `text` is a NUL-terminated string; `out` is writable.
enum SemlatStatus semlat_model_parse(const char *text, struct SemlatModel **out);

// Number of canonical atoms; 0 for null.
//
// # Safety
// `m` is null or a live handle.
size_t semlat_model_atom_count(const struct SemlatModel *m);

// Canonical model dump.
//
// # Safety
// `m` is a live handle; `out` is writable.
enum SemlatStatus semlat_model_dump(const struct SemlatModel *m, char **out);

// Atom-size histogram as `size<TAB>count` lines.
//
// # Safety
// `m` is a live handle; `out` is writable.
enum SemlatStatus semlat_model_spectrum(const struct SemlatModel *m, char **out);

// # Safety
// `m` is null or a handle not yet freed.
void semlat_model_free(struct SemlatModel *m);

// Classification report as JSON. Solutions come from the problem oracle when
// the embedding names a bundled problem, else from exhaustive enumeration
// (|Γ| ≤ 16).
//
// # Safety
// `e` is a live handle; `out` is writable.
enum SemlatStatus semlat_classify(const struct SemlatEmbedding *e, size_t budget, char **out);

// Solves with `seeds` seeded selection runs, or a depth-first search when
// `exhaustive` is nonzero. Writes one solution per line as comma-separated
// Γ indices in braces. Returns `Infeasible` when nothing is found.
//
// # Safety
// `e` is a live handle; `out` is writable.
enum SemlatStatus semlat_solve(const struct SemlatEmbedding *e,
                               uint32_t seeds,
                               int32_t exhaustive,
                               size_t budget,
                               char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEMLAT_H */
