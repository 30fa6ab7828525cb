/*
 * colbn -- exact and asymptotic computations on (c,m)-colored B_n set
 * partitions: count tables, block-count polynomials with exact root
 * certificates, moments of the number of non-zero-blocks, saddle-point
 * asymptotics, and an exact-uniform sampler.
 *
 * C API over an opaque-handle core. Every function returns a status code
 * (COLBN_OK on success); results come back through out-parameters. Counts
 * exceed 64 bits quickly, so they are passed as decimal strings allocated
 * by the library; release them with colbn_free (arrays of strings with
 * colbn_free_strings). A failing call leaves a human-readable message in
 * colbn_last_error() (thread-local).
 */

#ifndef COLBN_H
#define COLBN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum colbn_status {
    COLBN_OK = 0,
    COLBN_EINVAL = 1,   /* invalid argument or domain violation */
    COLBN_ERANGE = 2,   /* index/rank outside its valid range */
    COLBN_ENOCONV = 3,  /* iterative solver hit its iteration cap */
    COLBN_EINTERNAL = 4 /* invariant failure inside the library */
};

/* Short name of a status code, e.g. "COLBN_EINVAL". */
const char* colbn_errstr(int status);

/* Message from the last failing call on this thread ("" if none). */
const char* colbn_last_error(void);

/* Release a single string returned by this library. NULL is a no-op. */
void colbn_free(char* p);

/* Release an array of n strings returned by this library. */
void colbn_free_strings(char** strings, size_t n);

/* ------------------------------------------------------------------ */
/* Count tables: T_{n,k} for 0 <= k <= n <= n_max at palette sizes
 * (c, m), c >= 1, m >= 1.                                             */

typedef struct colbn_table colbn_table;

int colbn_table_create(unsigned c, unsigned m, unsigned n_max, colbn_table** out);
void colbn_table_destroy(colbn_table* table);

unsigned colbn_table_n_max(const colbn_table* table);

/* T_{n,k} as a decimal string. */
int colbn_table_entry(const colbn_table* table, unsigned n, unsigned k, char** out);

/* T_n = sum_k T_{n,k} as a decimal string. */
int colbn_table_total(const colbn_table* table, unsigned n, char** out);

/* Natural log of T_n (1e-12 relative). */
int colbn_table_log_total(const colbn_table* table, unsigned n, double* out);

/* ------------------------------------------------------------------ */
/* Independent counting routes (no table handle needed).               */

/* T_n via a rolling recurrence row (O(n) memory). */
int colbn_total(unsigned c, unsigned m, unsigned n, char** out);

/* T_n via sum_k C(n,k) c^{n-k} sum_j m^{k-j} S(k,j). */
int colbn_closed_form_total(unsigned c, unsigned m, unsigned n, char** out);

/* T_n by explicit enumeration of set partitions of [n] u {0}; n <= 10. */
int colbn_brute_force_total(unsigned c, unsigned m, unsigned n, char** out);

/* n! [z^n] exp((e^{mz}-1)/m + cz) for n = 0..n_max as decimal strings;
 * *out receives a malloc'd array of n_max+1 strings. */
int colbn_egf_series_totals(unsigned c, unsigned m, unsigned n_max,
                            char*** out, size_t* out_len);

/* Stirling number of the second kind S(n,k). */
int colbn_stirling2(unsigned n, unsigned k, char** out);

/* ------------------------------------------------------------------ */
/* Block-count polynomials T_n(x) = sum_k T_{n,k} x^k. Coefficients are
 * the table rows; these calls certify their structure.                */

/* ok = 1 iff T_n(x) == (x+c) T_{n-1}(x) + m x T'_{n-1}(x) exactly; n >= 1. */
int colbn_poly_recurrence_ok(const colbn_table* table, unsigned n, int* ok);

/* Distinct real roots of T_n(x) in (-inf, 0) by an exact Sturm chain,
 * plus deg gcd(T_n, T_n') (0 means square-free); n >= 1. */
int colbn_poly_negative_roots(const colbn_table* table, unsigned n,
                              unsigned* distinct_negative, unsigned* gcd_degree);

/* ok = 1 iff Newton's inequalities hold along row n; n >= 2. */
int colbn_poly_newton_ok(const colbn_table* table, unsigned n, int* ok);

/* ------------------------------------------------------------------ */
/* Moments and distribution of the number of non-zero-blocks.          */

typedef struct {
    double e;          /* expectation, double shadow */
    double v;          /* variance, double shadow */
    char* e_rational;  /* exact value, canonical "p/q" or integer string */
    char* v_rational;
} colbn_moments;

/* Frees the strings inside (the struct itself is caller-owned). */
void colbn_moments_clear(colbn_moments* moments);

/* Moment sums over row n. */
int colbn_moments_direct(const colbn_table* table, unsigned n, colbn_moments* out);

/* Theorem-style ratio route; requires n + 2 <= n_max of the table. */
int colbn_moments_ratio(const colbn_table* table, unsigned n, colbn_moments* out);

/* sup_k |P(xi_n <= k) - Phi((k + 1/2 - E_n)/sqrt(V_n))| from the exact pmf.
 * Fails with COLBN_EINVAL when V_n = 0 (n = 0). */
int colbn_ks_to_normal(const colbn_table* table, unsigned n, double* out);

/* ------------------------------------------------------------------ */
/* Saddle-point asymptotics. c may be 0 here.                          */

/* Unique positive root of r (e^{mr} + c) = x, x >= 1;
 * |residual| <= 1e-12 x on success. */
int colbn_solve_saddle(unsigned c, unsigned m, double x, double* r, double* residual);

typedef struct {
    double r;
    double log_value; /* sum of the six terms */
    double terms[6];  /* m n r, -n, n/(m r), 2 c r, -(1+c)/m, -log(m r+1)/2 */
} colbn_log_estimate;

/* Log-scale saddle-point approximation of T_n; n >= 2. */
int colbn_log_total_asymptotic(unsigned c, unsigned m, unsigned n,
                               colbn_log_estimate* out);

/* Natural log of the exact T_n (rolling computation); c >= 1. */
int colbn_log_total_exact(unsigned c, unsigned m, unsigned n, double* out);

typedef struct {
    double t0, t1, t2;                    /* f(t_i) = n + i */
    double res61, res62, res63, res64;    /* root-spacing estimate residuals */
} colbn_lemma_residuals;

/* Residuals of the root-spacing estimates for f(x) = x(e^{mx}+c); n >= 3. */
int colbn_lemma_residuals_eval(unsigned c, unsigned m, unsigned n,
                               colbn_lemma_residuals* out);

typedef struct {
    double r;
    double d1; /* |m r / log n - 1| */
    double d2; /* |n log(n/r) - (m r n + c r)| */
} colbn_growth_diag;

/* Saddle growth diagnostics; n >= 3. */
int colbn_saddle_growth_check(unsigned c, unsigned m, unsigned n,
                              colbn_growth_diag* out);

/* Second divided difference h[a,b,c] (equals h''(s)/2 for some s in (a,b));
 * nodes must be pairwise distinct. */
int colbn_second_divided_difference(double (*h)(double x, void* ctx), void* ctx,
                                    double a, double b, double c, double* out);

/* ------------------------------------------------------------------ */
/* Partitions, ranking, sampling. Partitions travel as canonical text:
 * the zero-block first as "0" or "0:(e,c),...", then the non-zero
 * blocks "(e,c),..." joined with "/"; members sorted by element, blocks
 * by minimum. Example: "0:(1,2)/(2,1),(3,2)".                          */

/* Partition of rank `rank_decimal` (0 <= rank < T_n); table must reach n. */
int colbn_unrank(const colbn_table* table, unsigned n, const char* rank_decimal,
                 char** out_text);

/* Rank of a canonical-text partition under the same bijection. */
int colbn_rank(const colbn_table* table, const char* partition_text,
               char** out_rank_decimal);

/* ok = 1 iff text parses and satisfies every partition invariant for
 * (c, m, n). Malformed text fails with COLBN_EINVAL. */
int colbn_validate(unsigned c, unsigned m, unsigned n, const char* partition_text,
                   int* ok);

/* All T_n partitions as canonical text, enumeration order; n <= 7. */
int colbn_enumerate(unsigned c, unsigned m, unsigned n, char*** out, size_t* out_len);

typedef struct colbn_sampler colbn_sampler;

/* Exact-uniform sampler over the T_n partitions; owns its own table.
 * Identical (c, m, n, seed) reproduce the identical stream. */
int colbn_sampler_create(unsigned c, unsigned m, unsigned n, uint64_t seed,
                         colbn_sampler** out);
void colbn_sampler_destroy(colbn_sampler* sampler);

/* Next draw: canonical text, its rank (decimal), and its non-zero-block
 * count. Any out-pointer may be NULL to skip that field. */
int colbn_sampler_next(colbn_sampler* sampler, char** out_text,
                       char** out_rank_decimal, unsigned* out_k);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COLBN_H */
