/*
 * chz: exact spectral zeta values of the regular Coulomb wave function, their
 * Hankel determinants, and the real/complex zero classification of F_L(eta, .).
 *
 * Plain C interface. Every object is an opaque handle owned by the caller and
 * released with the matching *_free function. Exact inputs are passed as
 * strings "p/q" or "p"; decimals are rejected. Functions return a chz_status;
 * on failure chz_last_error() describes the violated precondition. The message
 * is thread-local and valid until the next failing call on the same thread.
 */
#ifndef CHZ_H
#define CHZ_H

#include <stddef.h>

#if defined(CHZ_BUILDING_LIBRARY)
#define CHZ_API __attribute__((visibility("default")))
#else
#define CHZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chz_status {
  CHZ_OK = 0,
  CHZ_E_INVALID_ARGUMENT = 1,
  CHZ_E_PARSE = 2,
  CHZ_E_SINGULAR_PARAMETER = 3,
  CHZ_E_EXCLUDED_PARAMETER = 4,
  CHZ_E_BOUNDARY_PARAMETER = 5,
  CHZ_E_UNSUPPORTED_ELL = 6,
  CHZ_E_DEGENERATE_RECURSION = 7,
  CHZ_E_SINGULAR_B = 8,
  CHZ_E_NO_CONVERGENCE = 9,
  CHZ_E_CONTOUR_TOO_CLOSE = 10,
  CHZ_E_NEWTON_DIVERGED = 11,
  CHZ_E_VERIFICATION_FAILED = 12,
  CHZ_E_INTERNAL = 99
} chz_status;

CHZ_API const char* chz_version(void);
CHZ_API const char* chz_status_name(chz_status status);
CHZ_API const char* chz_last_error(void);

/* ---- exact rationals ---------------------------------------------------- */

typedef struct chz_rational chz_rational;

CHZ_API chz_status chz_rational_parse(const char* text, chz_rational** out);
/* Lowest terms, "p/q" or "p". Owned by the handle. */
CHZ_API const char* chz_rational_str(const chz_rational* x);
CHZ_API int chz_rational_sign(const chz_rational* x);
CHZ_API int chz_rational_equal(const chz_rational* a, const chz_rational* b);
CHZ_API double chz_rational_to_double(const chz_rational* x);
CHZ_API void chz_rational_free(chz_rational* x);

/* ---- spectral zeta, Rayleigh, Bernoulli, Genocchi ---------------------- */

typedef struct chz_zeta_table chz_zeta_table;

/* zeta_L(2..kmax) for exact L, eta. */
CHZ_API chz_status chz_zeta_table_create(const char* L, const char* eta, int kmax, chz_zeta_table** out);
/* Grows the table in place; never recomputes stored entries. */
CHZ_API chz_status chz_zeta_table_extend(chz_zeta_table* table, int kmax);
CHZ_API int chz_zeta_table_kmax(const chz_zeta_table* table);
CHZ_API chz_status chz_zeta_table_get(const chz_zeta_table* table, int k, chz_rational** out);
CHZ_API void chz_zeta_table_free(chz_zeta_table* table);

/* sigma_{2k}(nu) */
CHZ_API chz_status chz_rayleigh(const char* nu, int k, chz_rational** out);
/* B_{2n} and G_{2n}, n >= 1 */
CHZ_API chz_status chz_bernoulli(int n, chz_rational** out);
CHZ_API chz_status chz_genocchi(int n, chz_rational** out);

/* ---- Hankel determinants ------------------------------------------------ */

typedef enum chz_method {
  CHZ_METHOD_DIRECT = 0,  /* exact determinant of the assembled matrix */
  CHZ_METHOD_CLOSED = 1,  /* closed product formula */
  CHZ_METHOD_MOMENTS = 2, /* Coulomb only: zeta_L(2)^n times products of a_j */
  CHZ_METHOD_DJ = 3       /* Rayleigh only: Desnanot-Jacobi recursion in ell */
} chz_method;

/* det H_n(L, eta) */
CHZ_API chz_status chz_hankel_det(const char* L, const char* eta, int n, chz_method method, chz_rational** out);
/* det H_n^(ell)(nu). CLOSED accepts ell in {0,1,2,3}. */
CHZ_API chz_status chz_rayleigh_det(const char* nu, int ell, int n, chz_method method, chz_rational** out);
/* det(B_{2(i+j+ell-1)}/(2(i+j+ell-1))!), ell in {0,1}. DIRECT also checks the
 * closed form and fails with CHZ_E_VERIFICATION_FAILED on mismatch. */
CHZ_API chz_status chz_bernoulli_det(int ell, int n, chz_method method, chz_rational** out);
CHZ_API chz_status chz_genocchi_det(int ell, int n, chz_method method, chz_rational** out);

/* out[0..3] = odd lhs, odd rhs, even lhs, even rhs of the parity splitting of
 * det H_{2n+1}(nu-1/2, 0) and det H_{2n}(nu-1/2, 0). */
CHZ_API chz_status chz_parity_split(const char* nu, int n, chz_rational* out[4]);

/* ---- zero classification ------------------------------------------------ */

/* D_{n-1} D_n with D_n := det H_{n+1}(L, eta), D_{-1} := 1; n >= 0. */
CHZ_API chz_status chz_dd_product(const char* L, const char* eta, int n, chz_rational** out);

typedef struct chz_classification chz_classification;

/* nmax <= 0 selects the automatic bound max(ceil(-L)+2, 3). */
CHZ_API chz_status chz_classify(const char* L, const char* eta, int nmax, chz_classification** out);
CHZ_API int chz_classification_pair_count(const chz_classification* c);
CHZ_API int chz_classification_all_real(const chz_classification* c);
CHZ_API int chz_classification_predicted(const chz_classification* c);
CHZ_API int chz_classification_nmax(const chz_classification* c);
/* Sign (+1/-1) of D_{n-1} D_n for n in [0, nmax]; 0 when n is out of range. */
CHZ_API int chz_classification_sign(const chz_classification* c, int n);
CHZ_API void chz_classification_free(chz_classification* c);

typedef struct chz_hurwitz {
  int complex_zeros;
  /* 1: two of them are purely imaginary, 0: none are, -1: no complex zeros */
  int imaginary_pair;
} chz_hurwitz;

CHZ_API chz_status chz_hurwitz_counts(const char* nu, chz_hurwitz* out);

/* ---- floating-point evaluation and zero search ------------------------- */

typedef struct chz_complex {
  double re;
  double im;
} chz_complex;

typedef struct chz_rect {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
} chz_rect;

CHZ_API chz_status chz_phi(double L, double eta, chz_complex rho, double tol, chz_complex* out);
CHZ_API chz_rect chz_default_search_region(double L);
CHZ_API chz_status chz_count_zeros(double L, double eta, chz_rect region, double tol, int* out);

typedef struct chz_zero {
  chz_complex point;
  int multiplicity;
  int is_real;
  int purely_imaginary;
  int mirrored; /* conjugate of a zero found in the upper half-plane */
  int resolved; /* 0 when Newton failed and point is a cell centre */
} chz_zero;

typedef struct chz_zero_report chz_zero_report;

/* region may be NULL for the default search rectangle. */
CHZ_API chz_status chz_find_zeros(double L, double eta, const chz_rect* region, double tol, chz_zero_report** out);
CHZ_API chz_rect chz_zero_report_region(const chz_zero_report* r);
CHZ_API size_t chz_zero_report_size(const chz_zero_report* r);
CHZ_API chz_status chz_zero_report_get(const chz_zero_report* r, size_t index, chz_zero* out);
CHZ_API int chz_zero_report_real_count(const chz_zero_report* r);
CHZ_API int chz_zero_report_complex_pairs(const chz_zero_report* r);
CHZ_API int chz_zero_report_imaginary_pairs(const chz_zero_report* r);
CHZ_API int chz_zero_report_winding_count(const chz_zero_report* r);
CHZ_API void chz_zero_report_free(chz_zero_report* r);

/* ---- verification grid -------------------------------------------------- */

typedef struct chz_verify_report chz_verify_report;

/* Runs the "full" or "quick" grid of the JSON config file. Identity failures
 * are recorded in the report; the call itself only fails for a bad config. */
CHZ_API chz_status chz_verify_all(const char* config_path, int quick, chz_verify_report** out);
CHZ_API size_t chz_verify_report_families(const chz_verify_report* r);
CHZ_API const char* chz_verify_report_name(const chz_verify_report* r, size_t family);
CHZ_API size_t chz_verify_report_checks(const chz_verify_report* r, size_t family);
CHZ_API size_t chz_verify_report_failures(const chz_verify_report* r, size_t family);
CHZ_API const char* chz_verify_report_detail(const chz_verify_report* r, size_t family);
CHZ_API int chz_verify_report_passed(const chz_verify_report* r);
CHZ_API void chz_verify_report_free(chz_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* CHZ_H */
