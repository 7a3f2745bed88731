/*
 * shorbounds C API.
 *
 * Every function returns an sb_status; SB_OK means the out-parameters were
 * written. On failure a description is available from sb_last_error() on the
 * calling thread until the next API call on that thread.
 *
 * Objects returned through out-parameters are owned by the caller and must be
 * released with the matching *_free function. Strings returned as char** are
 * released with sb_string_free.
 */
#ifndef SHORBOUNDS_H
#define SHORBOUNDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SHORBOUNDS_BUILDING)
#    define SB_API __declspec(dllexport)
#  else
#    define SB_API __declspec(dllimport)
#  endif
#else
#  define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_NULL_ARGUMENT = 1,
  SB_ERR_DOMAIN = 2,
  SB_ERR_NOT_A_UNIT = 3,
  SB_ERR_OUT_OF_RANGE = 4,
  SB_ERR_ENUMERATION_TOO_LARGE = 5,
  SB_ERR_UNSUPPORTED_EVEN_MODULUS = 6,
  SB_ERR_PRIME_POWER_UNSUPPORTED = 7,
  SB_ERR_NOT_SQUAREFREE = 8,
  SB_ERR_NOT_SEMIPRIME = 9,
  SB_ERR_INSUFFICIENT_DATA = 10,
  SB_ERR_OVERFLOW = 11,
  SB_ERR_USAGE = 12,
  SB_ERR_BUFFER_TOO_SMALL = 13,
  SB_ERR_VERIFY_FAILED = 14,
  SB_ERR_INTERNAL = 15
} sb_status;

typedef enum sb_order_mode { SB_ORDER_EXACT = 0, SB_ORDER_SAMPLED = 1 } sb_order_mode;
typedef enum sb_format { SB_FORMAT_JSON = 0, SB_FORMAT_CSV = 1 } sb_format;

typedef struct sb_factorization sb_factorization;
typedef struct sb_profile sb_profile;
typedef struct sb_document sb_document;

typedef struct sb_tally {
  uint64_t trials;
  uint64_t a_coprime;
  uint64_t a_r_ok;
  uint64_t even_order;
  uint64_t success;
  uint64_t lucky;
  uint64_t seed;
} sb_tally;

SB_API const char* sb_version(void);
SB_API const char* sb_status_name(sb_status status);
SB_API const char* sb_last_error(void);
SB_API void sb_string_free(char* s);

/* ---- integer primitives ---- */

SB_API int sb_is_prime(uint64_t n);
SB_API uint64_t sb_gcd(uint64_t a, uint64_t b);
SB_API sb_status sb_lcm(uint64_t a, uint64_t b, uint64_t* out);
SB_API sb_status sb_mod_pow(uint64_t a, uint64_t exp, uint64_t m, uint64_t* out);
SB_API sb_status sb_multiplicative_order(uint64_t a, uint64_t m, uint64_t* out);
SB_API sb_status sb_v2_split(uint64_t m, uint32_t* t, uint64_t* s);
SB_API sb_status sb_euler_phi(uint64_t n, uint64_t* out);

SB_API sb_status sb_factorize(uint64_t n, sb_factorization** out);
SB_API uint64_t sb_factorization_n(const sb_factorization* f);
SB_API size_t sb_factorization_count(const sb_factorization* f);
SB_API sb_status sb_factorization_at(const sb_factorization* f, size_t index, uint64_t* p,
                                     uint32_t* e);
SB_API void sb_factorization_free(sb_factorization* f);

/* ---- group profiles ---- */

/* Profile of an odd n with at least two distinct prime factors. */
SB_API sb_status sb_profile_create(uint64_t n, sb_profile** out);
/* Abstract profile from 2-exponents alone (k >= 2, every tau >= 1). */
SB_API sb_status sb_profile_from_taus(const uint32_t* taus, size_t k, sb_profile** out);
SB_API uint64_t sb_profile_n(const sb_profile* g); /* 0 for abstract profiles */
SB_API uint32_t sb_profile_k(const sb_profile* g);
SB_API uint32_t sb_profile_tau_min(const sb_profile* g);
SB_API uint32_t sb_profile_tau_sum(const sb_profile* g);
SB_API int sb_profile_squarefree(const sb_profile* g);
SB_API sb_status sb_profile_prime_at(const sb_profile* g, size_t index, uint64_t* p,
                                     uint32_t* e, uint32_t* tau, uint64_t* sigma);
SB_API void sb_profile_free(sb_profile* g);

/* ---- exact probabilities, rendered as "num/den" ---- */

SB_API sb_status sb_fraction_equal_valuation(const sb_profile* g, char** out);
SB_API sb_status sb_success_conditional(const sb_profile* g, char** out);
SB_API sb_status sb_shor_conditional(uint32_t k, char** out);
SB_API sb_status sb_bound_gap(const sb_profile* g, char** out);

SB_API sb_status sb_count_equal_valuation(const sb_profile* g, uint64_t* out);
SB_API sb_status sb_equal_valuation_bruteforce(uint64_t n, uint64_t cap, uint32_t workers,
                                               uint64_t* count, uint64_t* total);
/* counts[t] for t in [0, *len); *len is capacity on input, entries written on output. */
SB_API sb_status sb_census_mod_p(uint64_t p, uint64_t cap, uint64_t* counts, size_t* len);

SB_API sb_status sb_ps_lower_bound(const sb_profile* g, double* out);
SB_API sb_status sb_repetitions_lower_bound(const sb_profile* g, double epsilon, double* out);
SB_API sb_status sb_shor_repetitions(uint32_t k, uint64_t n, double epsilon, double* out);

/* ---- Monte Carlo ---- */

SB_API sb_status sb_run_trials(uint64_t n, uint64_t trials, uint64_t seed, sb_order_mode mode,
                               uint32_t workers, sb_tally* out);
SB_API sb_status sb_run_exhaustive(uint64_t n, sb_tally* out);
SB_API sb_status sb_conditional_estimate(const sb_tally* t, double* p_hat, double* std_err);

/* ---- report documents ---- */

typedef struct sb_analyze_options {
  uint64_t n;
  double epsilon;
  int ceil_n;
} sb_analyze_options;

typedef struct sb_verify_options {
  const uint64_t* values;
  size_t value_count;
  int use_range;
  uint64_t range_lo;
  uint64_t range_hi;
  int squarefree_only;
  uint64_t max_enumeration;
  uint32_t workers;
} sb_verify_options;

typedef struct sb_simulate_options {
  uint64_t n;
  uint64_t trials;
  uint64_t seed;
  sb_order_mode mode;
  uint32_t workers;
} sb_simulate_options;

typedef struct sb_sweep_options {
  uint32_t k;
  uint32_t tau_max;
  sb_format format;
} sb_sweep_options;

/*
 * Each report call always produces a document when `out` is non-null. On
 * failure the document holds a machine-readable error object and the return
 * value names the failure. sb_verify returns SB_ERR_VERIFY_FAILED when any
 * item mismatched or errored.
 */
SB_API sb_status sb_analyze(const sb_analyze_options* opts, sb_document** out);
SB_API sb_status sb_verify(const sb_verify_options* opts, sb_document** out);
SB_API sb_status sb_simulate(const sb_simulate_options* opts, sb_document** out);
SB_API sb_status sb_sweep(const sb_sweep_options* opts, sb_document** out);

SB_API const char* sb_document_text(const sb_document* doc);
/* Diagnostic text meant for stderr; empty when there is none. */
SB_API const char* sb_document_note(const sb_document* doc);
SB_API void sb_document_free(sb_document* doc);

#ifdef __cplusplus
}
#endif

#endif /* SHORBOUNDS_H */
