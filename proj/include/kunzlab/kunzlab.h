/* C interface to the kunzlab library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every fallible call returns a kl_status; on failure the message of the most
 * recent error on the calling thread is available from kl_last_error().
 * Strings handed out through char** parameters are heap allocated and must be
 * released with kl_string_free(). Word indices are 1-based throughout.
 */
#ifndef KUNZLAB_H
#define KUNZLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KUNZLAB_BUILDING)
#    define KL_API __declspec(dllexport)
#  else
#    define KL_API __declspec(dllimport)
#  endif
#else
#  define KL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kl_status {
    KL_OK = 0,
    KL_ERR_INVALID_ARGUMENT = 1,
    KL_ERR_PARSE = 2,
    KL_ERR_NOT_COFINITE = 3,
    KL_ERR_NOT_KUNZ = 4,
    KL_ERR_DOMAIN = 5,
    KL_ERR_RESOURCE_BOUND = 6,
    KL_ERR_LETTER_OUT_OF_ALPHABET = 7,
    KL_ERR_INVALID_DECOMPOSITION = 8,
    KL_ERR_STEP_BUDGET_EXCEEDED = 9,
    KL_ERR_INTERNAL = 10
} kl_status;

typedef struct kl_word kl_word;
typedef struct kl_semigroup kl_semigroup;
typedef struct kl_machine kl_machine;
typedef struct kl_run kl_run;

KL_API const char* kl_version(void);
KL_API const char* kl_status_name(kl_status status);
KL_API const char* kl_last_error(void);
KL_API void kl_string_free(char* s);

/* ---- words ---- */
KL_API kl_status kl_word_parse(const char* text, kl_word** out);
KL_API kl_status kl_word_from_letters(const uint32_t* letters, size_t length, kl_word** out);
KL_API void kl_word_free(kl_word* w);
KL_API size_t kl_word_length(const kl_word* w);
KL_API kl_status kl_word_letter(const kl_word* w, size_t index, uint32_t* out);
KL_API kl_status kl_word_format(const kl_word* w, char** out);
KL_API int kl_word_is_kunz(const kl_word* w);
KL_API uint32_t kl_word_depth(const kl_word* w);
/* {"word","is_kunz","depth","violations"} */
KL_API kl_status kl_word_validate_json(const kl_word* w, char** out_json);
KL_API kl_status kl_witness_kunz(uint32_t q, size_t n, kl_word** out);
KL_API kl_status kl_witness_nonkunz(uint32_t q, size_t n, size_t m, kl_word** out);

/* ---- numerical semigroups ---- */
KL_API kl_status kl_semigroup_from_generators(const int64_t* gens, size_t count, kl_semigroup** out);
KL_API kl_status kl_semigroup_from_word(const kl_word* w, kl_semigroup** out);
KL_API kl_status kl_semigroup_to_word(const kl_semigroup* s, kl_word** out);
KL_API void kl_semigroup_free(kl_semigroup* s);
KL_API int kl_semigroup_contains(const kl_semigroup* s, int64_t x);
KL_API int64_t kl_semigroup_multiplicity(const kl_semigroup* s);
KL_API int64_t kl_semigroup_conductor(const kl_semigroup* s);
KL_API int64_t kl_semigroup_frobenius(const kl_semigroup* s);
KL_API int64_t kl_semigroup_depth(const kl_semigroup* s);
KL_API int64_t kl_semigroup_genus(const kl_semigroup* s);
KL_API kl_status kl_semigroup_json(const kl_semigroup* s, char** out_json);
/* JSON array of semigroup objects, brute force over gap sets. */
KL_API kl_status kl_enumerate_semigroups_json(int max_multiplicity, int max_depth, uint64_t max_candidates,
                                              char** out_json);

/* ---- languages ---- */
KL_API kl_status kl_count_kunz(uint32_t q, size_t length, uint64_t max_candidates, uint64_t* out);
/* JSON array of words in wire format. */
KL_API kl_status kl_enumerate_kunz_json(uint32_t q, size_t length, uint64_t max_candidates, char** out_json);
/* "q,length,count" with a single row. */
KL_API kl_status kl_census_csv(uint32_t q, size_t length, uint64_t max_candidates, char** out_csv);
KL_API kl_status kl_dfa_accepts(uint32_t q, const kl_word* w, int* accepted);
KL_API kl_status kl_nerode_json(uint32_t q, size_t max_prefix, char** out_json, int* all_separated);
KL_API kl_status kl_pumping_json(uint32_t q, uint64_t p, size_t k_max, uint64_t max_candidates, char** out_json,
                                 int* all_refuted);

/* ---- linear bounded automata ---- */
KL_API kl_status kl_machine_k3(kl_machine** out);
KL_API kl_status kl_machine_kn(uint32_t n, kl_machine** out);
KL_API void kl_machine_free(kl_machine* m);
KL_API int kl_machine_track_count(const kl_machine* m);
KL_API uint32_t kl_machine_max_letter(const kl_machine* m);
KL_API kl_status kl_machine_run(const kl_machine* m, const kl_word* w, uint64_t max_steps, int want_trace,
                                kl_run** out);
KL_API void kl_run_free(kl_run* r);
KL_API int kl_run_accepted(const kl_run* r);
KL_API uint64_t kl_run_steps(const kl_run* r);
KL_API uint64_t kl_run_cells_used(const kl_run* r);
KL_API uint64_t kl_run_bound(const kl_run* r);
/* {"verdict","steps","cells_used","bound"} */
KL_API kl_status kl_run_json(const kl_run* r, char** out_json);
/* One tab-separated line per recorded step; empty when no trace was requested. */
KL_API kl_status kl_run_trace_tsv(const kl_run* r, char** out_tsv);
KL_API int kl_run_trace_truncated(const kl_run* r);

#ifdef __cplusplus
}
#endif

#endif /* KUNZLAB_H */
