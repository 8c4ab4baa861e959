#ifndef HKL_HKL_H
#define HKL_HKL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HKL_API __declspec(dllexport)
#else
#define HKL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hkl_status {
  HKL_OK = 0,
  HKL_ERR_INVALID_ARGUMENT = 1,
  HKL_ERR_PARSE = 2,
  HKL_ERR_IO = 3,
  HKL_ERR_VALIDATION = 4,
  HKL_ERR_CHECK_FAILED = 5,
  HKL_ERR_INTERNAL = 6
} hkl_status;

typedef enum hkl_format { HKL_FORMAT_TSV = 0, HKL_FORMAT_JSON = 1 } hkl_format;

/* Data directory, seed and the lazily loaded Niemeier catalog. */
typedef struct hkl_context hkl_context;
typedef struct hkl_lattice hkl_lattice;

/* Message for the last failing call on this thread; "" if none. Owned by the library. */
HKL_API const char* hkl_last_error(void);
HKL_API const char* hkl_version(void);
/* Every char** out parameter below is released with this. */
HKL_API void hkl_string_free(char* s);

HKL_API hkl_status hkl_context_new(const char* data_dir, uint64_t seed, hkl_context** out);
HKL_API void hkl_context_free(hkl_context* ctx);

/* Lattices. Specs look like "E8+U^2+A1", "tpqr(2,3,7)", "<-4>". */
HKL_API hkl_status hkl_lattice_parse(const char* spec, hkl_lattice** out);
HKL_API void hkl_lattice_free(hkl_lattice* l);
HKL_API hkl_status hkl_lattice_rank(const hkl_lattice* l, size_t* out);
HKL_API hkl_status hkl_lattice_invariants_match(const hkl_lattice* a, const hkl_lattice* b, int* out);
HKL_API hkl_status hkl_lattice_root_count(const hkl_lattice* l, size_t* out);
HKL_API hkl_status hkl_lattice_invariants(const char* spec, hkl_format fmt, char** out);
HKL_API hkl_status hkl_lattice_roots(const char* spec, int extended, hkl_format fmt, char** out);

/* Niemeier catalog and the Type II boundary. */
/* name selects one entry ("A11+D7+E6", "Leech"); NULL or "" lists all 24. */
HKL_API hkl_status hkl_niemeier_catalog(hkl_context* ctx, const char* name, hkl_format fmt, char** out);
HKL_API hkl_status hkl_niemeier_labels(hkl_context* ctx, hkl_format fmt, char** out);
HKL_API hkl_status hkl_niemeier_dimensions(hkl_context* ctx, hkl_format fmt, char** out);
HKL_API hkl_status hkl_niemeier_match(hkl_context* ctx, hkl_format fmt, char** out);

/* GIT of quartic surfaces. */
HKL_API hkl_status hkl_git_zero_weight(hkl_format fmt, char** out);
HKL_API hkl_status hkl_git_sigma_dims(hkl_context* ctx, hkl_format fmt, char** out);
/* mu(f, lambda) for a quartic over x0..x3 and a sum-zero weight vector. */
HKL_API hkl_status hkl_git_mu(const char* quartic, const long weights[4], long* out);
/* Largest mu over sum-zero diagonal 1-PS with entries in [-box, box], in the
   fixed coordinate frame. Coordinate changes are not searched. */
HKL_API hkl_status hkl_git_worst_case(const char* quartic, long box, long weights_out[4], long* mu_out);
HKL_API hkl_status hkl_git_limits(hkl_format fmt, char** out);
HKL_API hkl_status hkl_git_e12_example(hkl_format fmt, char** out);

/* SL2 representations. Rationals are passed as "p" or "p/q". */
HKL_API hkl_status hkl_rep_decompose(const int* weights, size_t n, char** out);
HKL_API hkl_status hkl_rep_table(hkl_format fmt, char** out);
HKL_API hkl_status hkl_rep_tangent(const char* a, const char* b, hkl_format fmt, char** out);
HKL_API hkl_status hkl_rep_slices(hkl_format fmt, char** out);

/* Triangle singularities. */
HKL_API hkl_status hkl_dolgachev_table(hkl_format fmt, char** out);
HKL_API hkl_status hkl_dolgachev_checks(hkl_format fmt, char** out);

/* Weighted blow-ups. Weights like "2,3" or "4^9,6^13"; points like "1,1/2". */
HKL_API hkl_status hkl_blowup_fan(hkl_context* ctx, const char* weights, hkl_format fmt, char** out);
HKL_API hkl_status hkl_blowup_fan_json(hkl_context* ctx, const char* weights, char** out);
HKL_API hkl_status hkl_blowup_wp_equiv(const char* weights, const char* x, const char* y, int* out);

/* Flip schedule. */
HKL_API hkl_status hkl_schedule_table1(hkl_format fmt, char** out);
HKL_API hkl_status hkl_schedule_betas(hkl_format fmt, char** out);
HKL_API hkl_status hkl_schedule_flip(const char* beta, hkl_format fmt, char** out);
/* type is "I", "II", "III", "IV", a stratum id such as "IV(0a)", or NULL/"" for all. */
HKL_API hkl_status hkl_schedule_strata(const char* type, hkl_format fmt, char** out);
HKL_API hkl_status hkl_schedule_towers(hkl_format fmt, char** out);
HKL_API hkl_status hkl_schedule_checks(hkl_context* ctx, hkl_format fmt, char** out);

/* Table 1, Table 2 and the boundary dimension table. */
HKL_API hkl_status hkl_report(hkl_context* ctx, hkl_format fmt, char** out);
/* The twelve acceptance checks. *failures receives the number of failed checks. */
HKL_API hkl_status hkl_verify(hkl_context* ctx, hkl_format fmt, char** out, int* failures);

#ifdef __cplusplus
}
#endif

#endif
