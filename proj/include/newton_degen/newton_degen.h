#ifndef NEWTON_DEGEN_H
#define NEWTON_DEGEN_H

/*
 * C interface of the newton_degen shared library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns an nd_status; on failure the message is available
 * from nd_last_error() (per thread) until the next failing call. Strings
 * handed out through char** parameters are owned by the caller and released
 * with nd_string_free(). Text formats are the ones the CLI reads and writes.
 * A term_limit of 0 means the library default.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef ND_BUILDING_LIBRARY
#    define ND_API __declspec(dllexport)
#  else
#    define ND_API __declspec(dllimport)
#  endif
#else
#  define ND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nd_status {
    ND_OK = 0,
    ND_ERR_PARSE = 1,
    ND_ERR_INVALID_ARGUMENT = 2,
    ND_ERR_BUDGET_EXCEEDED = 3,
    ND_ERR_ZERO_POLYNOMIAL = 4,
    ND_ERR_INVALID_FACE = 5,
    ND_ERR_INTERNAL = 6
} nd_status;

typedef struct nd_circuit nd_circuit;
typedef struct nd_poly nd_poly;

/* ---- status and memory ---------------------------------------------------- */

ND_API const char* nd_version(void);
/* "ok", "parse", "invalid_argument", "budget_exceeded", ... */
ND_API const char* nd_status_name(nd_status status);
ND_API const char* nd_last_error(void);
ND_API void nd_string_free(char* s);

/* ---- circuits ------------------------------------------------------------- */

ND_API nd_status nd_circuit_parse(const char* text, nd_circuit** out);
ND_API nd_status nd_circuit_serialize(const nd_circuit* c, char** out);
ND_API void nd_circuit_free(nd_circuit* c);

ND_API size_t nd_circuit_size(const nd_circuit* c);
ND_API size_t nd_circuit_num_variables(const nd_circuit* c);
/* NULL when i is out of range. The pointer lives as long as the circuit. */
ND_API const char* nd_circuit_variable(const nd_circuit* c, size_t i);
ND_API int nd_circuit_is_monotone(const nd_circuit* c);
ND_API int nd_circuit_is_weakly_skew(const nd_circuit* c);

/* values[i] is a rational such as "3" or "-2/5" for variable i. */
ND_API nd_status nd_circuit_evaluate(const nd_circuit* c, const char* const* values, size_t count, char** out);

/* ---- polynomials ---------------------------------------------------------- */

ND_API nd_status nd_expand(const nd_circuit* c, size_t term_limit, nd_poly** out);
ND_API nd_status nd_poly_parse(const char* text, nd_poly** out);
ND_API void nd_poly_free(nd_poly* p);

ND_API size_t nd_poly_num_terms(const nd_poly* p);
/* One term per line, lexicographic exponent order. */
ND_API nd_status nd_poly_format(const nd_poly* p, char** out);
/* Single line, leading term first, e.g. "x11*x22 + x12*x21". */
ND_API nd_status nd_poly_to_string(const nd_poly* p, char** out);
/* Equal as polynomials, matching variables by name. */
ND_API int nd_poly_equal(const nd_poly* a, const nd_poly* b);

/* `# vars:` line followed by one exponent vector per line. */
ND_API nd_status nd_poly_support(const nd_poly* p, char** out);
/* Terms minimizing <a,e>; the minimum goes to *value. */
ND_API nd_status nd_poly_face(const nd_poly* p, const int64_t* direction, size_t length, int64_t* value, nd_poly** out);
/* Terms tight on every equality of the system text. */
ND_API nd_status nd_poly_restrict(const nd_poly* p, const char* equalities, nd_poly** out);
/* Lists the support points breaking a row of the system; *violations counts them. */
ND_API nd_status nd_poly_check_support(const nd_poly* p, const char* system, size_t* violations, char** report);

/* Integer points of a bounded system, in the support format. */
ND_API nd_status nd_system_lattice_points(const char* system, char** out);

/* ---- face restriction ----------------------------------------------------- */

typedef struct nd_degen_options {
    size_t term_limit;
    int64_t max_nodes;
    int has_b_hint;
    int64_t b_hint;
    int check_validity;
} nd_degen_options;

ND_API void nd_degen_options_init(nd_degen_options* options);

/* options may be NULL for the defaults; b may be NULL. */
ND_API nd_status nd_degen(const nd_circuit* c, const int64_t* direction, size_t length, const nd_degen_options* options,
                          nd_circuit** out, int64_t* b);
ND_API nd_status nd_degen_monotone(const nd_circuit* c, const int64_t* direction, size_t length, nd_circuit** out);
ND_API nd_status nd_degen_equalities(const nd_circuit* c, const char* equalities, const nd_degen_options* options,
                                     nd_circuit** out);
/* *finite is 0 when the bound is +infinity. */
ND_API nd_status nd_tropical_bound(const nd_circuit* c, const int64_t* direction, size_t length, int64_t* value, int* finite);

/* Coefficient of param^k. Without an interval the syntactic degree bounds
   of the circuit are used. */
ND_API nd_status nd_extract(const nd_circuit* c, const char* param, int64_t k, int has_interval, int64_t lo, int64_t hi,
                            int64_t max_nodes, nd_circuit** out);

/* ---- generators ------------------------------------------------------------ */

/* Graphs use the "n m" header followed by edge lines; vertex sets one per line. */
ND_API nd_status nd_gen_tutte_det(const char* graph, nd_circuit** out);
ND_API nd_status nd_gen_pfaffian(const char* graph, nd_poly** out);
/* odd_sets and deleted may be NULL. */
ND_API nd_status nd_gen_pfaffian_face(const char* graph, const char* odd_sets, const char* deleted,
                                      const nd_degen_options* options, nd_circuit** out);
/* Without odd sets every odd subset of size >= 3 is listed. */
ND_API nd_status nd_gen_edmonds_system(const char* graph, const char* odd_sets, char** out);

ND_API nd_status nd_gen_kronecker(int n, int m, int d, uint64_t seed, size_t term_limit, nd_circuit** out, int* attempts);
ND_API nd_status nd_gen_magic_squares(int n, int m, int d, char** out);

ND_API nd_status nd_gen_elementary(int n, int l, nd_circuit** out);
ND_API nd_status nd_gen_schur(const int* parts, size_t length, int n, nd_circuit** out);
/* chain: one vertex set per line. direction receives the face direction. */
ND_API nd_status nd_gen_face_factors(const int* parts, size_t length, int n, const char* chain, nd_circuit** out,
                                     char** direction);
ND_API nd_status nd_gen_trace(const int* word, size_t length, int n, nd_circuit** out);

ND_API nd_status nd_gen_subspace(const int64_t* source_dims, const int64_t* sigma_plus, size_t sources, int64_t sink_dim,
                                 int64_t sigma_minus, nd_circuit** out);
ND_API nd_status nd_gen_subspace_system(const int64_t* source_dims, const int64_t* sigma_plus, size_t sources,
                                        int64_t sink_dim, int64_t sigma_minus, char** out);
/* Quivers use vertex / arrow / dimV / dimW lines. */
ND_API nd_status nd_gen_schofield(const char* quiver, nd_circuit** out);
ND_API nd_status nd_gen_schofield_system(const char* quiver, char** out);

ND_API nd_status nd_gen_random(uint64_t seed, int monotone, int weakly_skew, nd_circuit** out);
/* *param is a caller-owned string. */
ND_API nd_status nd_gen_permanent_demo(int n, nd_circuit** out, char** param, int64_t* exponent);

/* ---- acceptance suites ----------------------------------------------------- */

ND_API size_t nd_check_suite_count(void);
ND_API const char* nd_check_suite_name(size_t i);
/* *line is the PASS/FAIL report line. */
ND_API nd_status nd_check_run(const char* name, uint64_t seed, size_t term_limit, int* passed, char** line);

#ifdef __cplusplus
}
#endif

#endif
