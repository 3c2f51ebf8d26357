/*
 * C interface to the coxcount engine: exact counts of integral points of
 * bounded height on the blow-up of P^3 along a conic, for the two plane
 * complements D1 (b = 0) and D2 (a = 0), plus the independently computed
 * factors of the predicted B log B leading constants.
 *
 * All functions return a coxcount_status; results go through out-pointers.
 * The engine handle carries run configuration (shard count) and is not
 * thread-safe; distinct handles may be used concurrently.
 */
#ifndef COXCOUNT_H
#define COXCOUNT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  COXCOUNT_OK = 0,
  COXCOUNT_ERR_INVALID = 1,        /* bad argument or precondition */
  COXCOUNT_ERR_OVERFLOW = 2,       /* exact-arithmetic guard tripped */
  COXCOUNT_ERR_NO_CONVERGENCE = 3, /* quadrature budget exhausted */
  COXCOUNT_ERR_CHECK_FAILED = 4,   /* a verification check failed */
  COXCOUNT_ERR_INTERNAL = 5
} coxcount_status;

typedef enum { COXCOUNT_D1 = 1, COXCOUNT_D2 = 2 } coxcount_divisor;
typedef enum { COXCOUNT_METHOD_FAST = 0, COXCOUNT_METHOD_ORACLE = 1 } coxcount_method;

typedef struct coxcount_engine coxcount_engine;

coxcount_engine* coxcount_engine_new(void);
void coxcount_engine_free(coxcount_engine* engine);
coxcount_status coxcount_engine_set_shards(coxcount_engine* engine, int shards);

typedef struct {
  int divisor;
  int64_t bound;
  int64_t count;
  int method;
  double elapsed_seconds;
} coxcount_count_result;

/* Exact N_i(bound). method COXCOUNT_METHOD_ORACLE runs the brute-force box
 * enumeration instead (bound <= 500). */
coxcount_status coxcount_count(coxcount_engine* engine, int divisor, int64_t bound,
                               int method, coxcount_count_result* out);

typedef struct {
  int64_t num;
  int64_t den;
} coxcount_rational;

/* #U_i(F_p) and the exact local density #U_i(F_p) / p^3. p prime, <= 10^4. */
coxcount_status coxcount_fp_point_count(int divisor, int64_t prime, int64_t* out);
coxcount_status coxcount_local_density(int divisor, int64_t prime, coxcount_rational* out);

/* Effective-cone alpha factor (1/6 for this variety). */
coxcount_status coxcount_alpha(coxcount_rational* out);

/* Renormalized Euler product over primes <= prime_bound, with a rigorous
 * bound on the log of the omitted tail. */
coxcount_status coxcount_euler_product(int divisor, int64_t prime_bound, double* partial,
                                       double* tail_bound);

/* Archimedean boundary volume by adaptive quadrature (within tol), and the
 * closed-form region decomposition (three exact pieces plus the total). */
coxcount_status coxcount_archimedean_volume(coxcount_engine* engine, int divisor, double tol,
                                            double* value);
coxcount_status coxcount_archimedean_regions(int divisor, coxcount_rational pieces[3],
                                             coxcount_rational* total);

typedef struct {
  int divisor;
  coxcount_rational alpha;
  double tau_infinity_quadrature;
  double tau_infinity_regions;
  double euler_partial;
  double euler_tail_bound;
  double prediction;
  double prediction_low;
  double prediction_high;
} coxcount_breakdown;

/* Assembled leading-constant prediction with an enclosing interval. */
coxcount_status coxcount_predicted_constant(coxcount_engine* engine, int divisor,
                                            int64_t prime_bound, double tol,
                                            coxcount_breakdown* out);

typedef struct {
  int64_t bound;
  int64_t count;
  double ratio;          /* count / (B ln B) */
  double prediction;
  double relative_gap;   /* |ratio - prediction| / prediction */
  double residual_per_b; /* (count - prediction * B ln B) / B */
} coxcount_convergence_row;

/* Fills rows_out (caller-allocated, length n) ordered by bound. */
coxcount_status coxcount_convergence_table(const int64_t* bounds, const int64_t* counts,
                                           size_t n, double prediction,
                                           coxcount_convergence_row* rows_out);

/* Least-squares fit count ~ c1 * B ln B + c2 * B (n >= 3). */
coxcount_status coxcount_fit_two_term(const int64_t* bounds, const int64_t* counts, size_t n,
                                      double* c1, double* c2);

/* Verification checks: COXCOUNT_OK if the check passed,
 * COXCOUNT_ERR_CHECK_FAILED if it ran and failed. */
coxcount_status coxcount_check_grading(void);
coxcount_status coxcount_check_densities(int64_t max_prime);
coxcount_status coxcount_check_oracle(coxcount_engine* engine, int divisor, int64_t max_bound);
coxcount_status coxcount_check_volumes(coxcount_engine* engine, double tol);

const char* coxcount_status_string(coxcount_status status);

#ifdef __cplusplus
}
#endif

#endif /* COXCOUNT_H */
