/* sigma2min C API
 *
 * Closed-form solvers for the constrained minimal value problem
 *   f(x) = -b sum_i x_i - sum_{i<j} x_i x_j,   sum_i a_i x_i + C = 0,
 * elementary symmetric function machinery with Garding-cone queries, the
 * sigma_2 point-estimate algebra, and curvature sampling of star-shaped
 * surfaces in R^3.
 *
 * All functions return s2m_status; outputs are written through pointers.
 * Objects handed out as opaque pointers are freed with the matching *_free.
 * Strings returned through char** are heap-allocated; release them with
 * s2m_string_free. On failure s2m_last_error() describes the problem
 * (thread-local).
 */

#ifndef SIGMA2MIN_H
#define SIGMA2MIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum s2m_status {
    S2M_OK = 0,
    S2M_ERR_INVALID_ARGUMENT = 1, /* bad input or domain violation */
    S2M_ERR_NOT_WELL_POSED = 2,   /* solver precondition failed; query the class */
    S2M_ERR_PARSE = 3,            /* malformed JSON or wrong schema */
    S2M_ERR_NOT_TWO_CONVEX = 4,   /* sigma_2 <= 0 at some surface sample */
    S2M_ERR_GRID = 5,             /* degenerate grid geometry */
    S2M_ERR_INTERNAL = 6
} s2m_status;

typedef enum s2m_class {
    S2M_WELL_POSED = 0,
    S2M_DEGENERATE_BOUNDED = 1,
    S2M_DEGENERATE_UNBOUNDED = 2,
    S2M_UNBOUNDED = 3
} s2m_class;

typedef enum s2m_method {
    S2M_METHOD_EIGEN = 0,
    S2M_METHOD_LAGRANGE = 1,
    S2M_METHOD_ORACLE = 2
} s2m_method;

const char* s2m_version(void);
const char* s2m_last_error(void);
void s2m_string_free(char* s);

/* ---- elementary symmetric functions -------------------------------- */

/* sigma_k(lam); 1 for k = 0, 0 for k > n. n >= 2, k >= 0. */
s2m_status s2m_sigma(int k, const double* lam, int n, double* out);

/* sigma_k of lam with the 1-based indices excl[0..n_excl) removed (n_excl <= 2). */
s2m_status s2m_sigma_del(int k, const double* lam, int n, const int* excl, int n_excl,
                         double* out);

/* out[i] = sigma_{m-1}(lam | i+1), the gradient of sigma_m at a diagonal matrix. */
s2m_status s2m_sigma_grad(int m, const double* lam, int n, double* out);

/* sum_{i!=j} v_ij^2 - sum_{i!=j} v_ii v_jj for symmetric v (row-major n x n). */
s2m_status s2m_sigma2_hessian_quadform(const double* v, int n, double* out);

/* *out = 1 iff sigma_i(lam) > 0 for all 1 <= i <= k (strict, no tolerance). */
s2m_status s2m_in_gamma_k(const double* lam, int n, int k, int* out);

/* ---- minimal value problem ------------------------------------------ */

typedef struct s2m_problem s2m_problem;
typedef struct s2m_solution s2m_solution;

s2m_status s2m_problem_create(int n, double b, double cap_c, const double* a, s2m_problem** out);
/* {"n": int, "b": float, "C": float, "a": [float, ...]} */
s2m_status s2m_problem_from_json(const char* json, s2m_problem** out);
void s2m_problem_free(s2m_problem* p);
int s2m_problem_dim(const s2m_problem* p);
s2m_status s2m_problem_to_json(const s2m_problem* p, char** json);

/* D = (sum a)^2 - (N-1) sum a^2 and its class. */
s2m_status s2m_check_conditions(const s2m_problem* p, double* discriminant, s2m_class* cls);

s2m_status s2m_evaluate_f(const s2m_problem* p, const double* x, int n, double* out);

/* Closed-form minimum; S2M_ERR_NOT_WELL_POSED unless the class is WellPosed. */
s2m_status s2m_min_value_closed_form(const s2m_problem* p, double* out);

/* Solve by the chosen route. All three agree on WellPosed problems. */
s2m_status s2m_solve(const s2m_problem* p, s2m_method method, s2m_solution** out);
void s2m_solution_free(s2m_solution* s);
double s2m_solution_value(const s2m_solution* s);
double s2m_solution_multiplier(const s2m_solution* s);
s2m_method s2m_solution_method(const s2m_solution* s);
int s2m_solution_dim(const s2m_solution* s);
s2m_status s2m_solution_minimizer(const s2m_solution* s, double* out);
/* {"value":..., "x":[...], "mu":..., "method":"...", "class":"WellPosed"} */
s2m_status s2m_solution_to_json(const s2m_solution* s, char** json);

/* ---- cross-validation ------------------------------------------------ */

typedef struct s2m_verify_summary {
    unsigned long long seed;
    long long trials;
    int n_min, n_max;
    double max_value_dev;
    double max_minimizer_dev;
    double max_multiplier_dev;
    double max_constraint_residual;
    long long lower_bound_violations;
    long long uniqueness_violations;
    int pass;
} s2m_verify_summary;

/* Seeded fuzz comparison of all solver routes on random well-posed
 * instances; report_json (optional) additionally carries the worst instance
 * for replay. */
s2m_status s2m_verify_run(unsigned long long seed, long long trials, int n_min, int n_max,
                          s2m_verify_summary* out, char** report_json);

/* Identity suites over seeded random draws; *pass is 1 iff every family met
 * its tolerance. */
s2m_status s2m_symcheck_run(unsigned long long seed, long long trials, int* pass,
                            char** report_json);

/* ---- sigma_2 point-estimate algebra ---------------------------------- */

typedef struct s2m_point_data s2m_point_data;

/* lambda must lie in Gamma_2; the largest entry is moved to slot 1 together
 * with the matching tangent / phi_grad components. */
s2m_status s2m_point_data_create(int n, const double* lambda, double h111, double support,
                                 const double* tangent, double varphi, const double* varphi_grad,
                                 double alpha, s2m_point_data** out);
/* {"n":..,"lambda":[..],"h111":..,"support":..,"tangent":[..],"phi":..,
 *  "phi_grad":[..],"alpha":..} */
s2m_status s2m_point_data_from_json(const char* json, s2m_point_data** out);
void s2m_point_data_free(s2m_point_data* pd);

/* The (n-1)-variable point problem with a_i = sigma_1(lambda|i), b = h111,
 * C = [sigma_1(lambda|1) lambda_1 - alpha sigma_2](h111/lambda_1) - phi_1 s^alpha. */
s2m_status s2m_build_point_problem(const s2m_point_data* pd, s2m_problem** out);

/* Residuals of the two deleted-index sum identities (see docs). */
s2m_status s2m_identity_checks(const double* lam, int n, double* r1, double* r2);

s2m_status s2m_coeff_identity_residual(const double* lam, int n, double alpha, double* out);

/* Minimum of the point problem via the specialized denominator
 * 2[(n-1) lambda_1^2 + 2(n-2) sigma_2]. */
s2m_status s2m_sigma2_point_minimum(const s2m_point_data* pd, double* out);

s2m_status s2m_remark42_bound(const double* lam, int n, double b, double cap_c, double* out);

/* Final curvature bound lead*h^2 <= b1*h + b0; returns the lead coefficient
 * and the largest admissible h. Requires alpha < 1 + delta, delta in (0,1]. */
s2m_status s2m_final_bound(const s2m_point_data* pd, double delta, double b1, double b0,
                           double* lead, double* h_bound);

/* sigma_k analogue explorer. *value is NaN when no finite minimum exists;
 * minimizer (optional, length n-1) is filled only for WellPosed outcomes. */
s2m_status s2m_explore_k(const double* lam, int n, int k, double b, double cap_c, s2m_class* cls,
                         double* value, double* minimizer);

/* CSV spooled from the seeded explorer sweep (fixture rows first). */
s2m_status s2m_explore_csv(int n, int k, unsigned long long seed, long long trials, char** csv);

/* ---- star-shaped surfaces in R^3 ------------------------------------- */

typedef struct s2m_surface s2m_surface;

typedef struct s2m_sample {
    double theta, phi;
    double position[3];
    double normal[3];
    double kappa1, kappa2; /* kappa1 >= kappa2; unit sphere has +1 */
    double support;        /* <X, N>, positive for star-shaped surfaces */
    double radius2;        /* |X|^2 */
} s2m_sample;

typedef struct s2m_surface_summary {
    long long n_samples;
    double delta; /* min <X,N>^2 / |X|^2 */
    double sup_kappa;
    double min_sigma2;
    double min_support;
    int two_convex;
} s2m_surface_summary;

s2m_status s2m_surface_ellipsoid(const double axes[3], int n_theta, int n_phi, s2m_surface** out);
/* rho row-major [n_theta][n_phi] on theta_j = (j+1/2) pi/n_theta, phi_i = 2 pi i/n_phi. */
s2m_status s2m_surface_radial_grid(int n_theta, int n_phi, const double* rho, s2m_surface** out);
/* {"kind":"ellipsoid","axes":[a,b,c]} or
 * {"kind":"radial_grid","n_theta":...,"n_phi":...,"rho":[[...],...]} */
s2m_status s2m_surface_from_json(const char* json, s2m_surface** out);
void s2m_surface_free(s2m_surface* s);

long long s2m_surface_sample_count(const s2m_surface* s);
s2m_status s2m_surface_samples(const s2m_surface* s, s2m_sample* out);
s2m_status s2m_surface_summary_get(const s2m_surface* s, s2m_surface_summary* out);
s2m_status s2m_surface_report_json(const s2m_surface* s, char** json);

/* phi = sigma_2(kappa)/<X,N>^alpha per sample; S2M_ERR_NOT_TWO_CONVEX names
 * the offending sample when sigma_2 <= 0 somewhere. */
s2m_status s2m_inverse_phi(const s2m_surface* s, double alpha, double* out);

/* Per-sample CSV: theta,phi,X1..X3,N1..N3,kappa1,kappa2,support,sigma2,phi_value. */
s2m_status s2m_surface_csv(const s2m_surface* s, double alpha, char** csv);

/* Codazzi finite-difference residual; radial grids only. */
s2m_status s2m_codazzi_residual(const s2m_surface* s, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SIGMA2MIN_H */
