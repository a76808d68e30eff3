#ifndef MDEPTH_H
#define MDEPTH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the numeric values match the command-line exit codes.
 */
typedef enum MdStatus {
  MD_STATUS_OK = 0,
  MD_STATUS_CONSISTENCY = 1,
  MD_STATUS_MALFORMED = 2,
  MD_STATUS_CAP_EXCEEDED = 3,
  MD_STATUS_PRECONDITION = 4,
  MD_STATUS_NULL_ARGUMENT = 5,
  MD_STATUS_PANIC = 6,
} MdStatus;

/**
 * A monomial ideal together with its ring.
 */
typedef struct MdIdeal MdIdeal;

/**
 * Computed invariants of a quotient ring.
 */
typedef struct MdProfile MdProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. The pointer stays valid
 * until the next failing call on the same thread.
 */
const char *md_last_error(void);

/**
 * Parses generator text, ideal JSON, facet JSON or an edge list.
 * `characteristic` 0 selects the rationals.
 *
 * # Safety
 * `input` must be a nul-terminated string and `out` a valid pointer.
 */
enum MdStatus md_ideal_parse(const char *input, uint64_t characteristic, struct MdIdeal **out);

/**
 * Edge ideal of a graph given as `n=5; edges=1-2,2-3`.
 *
 * # Safety
 * `edges` must be a nul-terminated string and `out` a valid pointer.
 */
enum MdStatus md_ideal_from_edges(const char *edges, uint64_t characteristic, struct MdIdeal **out);

/**
 * # Safety
 * `ideal` must come from this library and not be used afterwards.
 */
void md_ideal_free(struct MdIdeal *ideal);

/**
 * Number of ring variables, or 0 for a null handle.
 *
 * # Safety
 * `ideal` must be null or a live handle.
 */
size_t md_ideal_nvars(const struct MdIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MdStatus md_profile_compute(const struct MdIdeal *ideal, struct MdProfile **out);

/**
 * # Safety
 * `profile` must come from this library and not be used afterwards.
 */
void md_profile_free(struct MdProfile *profile);

/**
 * Krull dimension; 0 for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
size_t md_profile_dim(const struct MdProfile *profile);

/**
 * Depth; 0 for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
size_t md_profile_depth(const struct MdProfile *profile);

/**
 * Smallest dimension of an associated prime; 0 for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
size_t md_profile_mdepth(const struct MdProfile *profile);

/**
 * Whether depth equals mdepth; false for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
bool md_profile_maximal_depth(const struct MdProfile *profile);

/**
 * Whether depth equals dimension; false for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
bool md_profile_cohen_macaulay(const struct MdProfile *profile);

/**
 * Whether all associated primes have the top dimension; false for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
bool md_profile_unmixed(const struct MdProfile *profile);

/**
 * Whether every lower local cohomology module has finite length; false for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
bool md_profile_generalized_cm(const struct MdProfile *profile);

/**
 * Number of associated primes; 0 for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
size_t md_profile_ass_count(const struct MdProfile *profile);

/**
 * Profile as JSON. Free the string with `md_string_free`.
 *
 * # Safety
 * `profile` must be a live handle and `out` a valid pointer.
 */
enum MdStatus md_profile_to_json(const struct MdProfile *profile, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void md_string_free(char *s);

/**
 * Sequential Cohen-Macaulay decision: `*out` is 1, 0, or -1 when undecided
 * (non-squarefree input).
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MdStatus md_seqcm(const struct MdIdeal *ideal, int32_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MDEPTH_H */
