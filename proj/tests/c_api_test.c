#include <newton_degen/newton_degen.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

static const char* mixed =
    "g1 = input x1\n"
    "g2 = input x2\n"
    "g3 = mul g1 g2\n"
    "g4 = add g3 g1\n"
    "g5 = mul g2 g2\n"
    "g6 = add g4 g5\n"
    "output g6\n";

static void expect_string(char* s, const char* expected) {
    EXPECT(s != NULL);
    if (s) {
        if (strcmp(s, expected) != 0) fprintf(stderr, "  got '%s', expected '%s'\n", s, expected);
        EXPECT(strcmp(s, expected) == 0);
    }
    nd_string_free(s);
}

static void test_circuits(void) {
    nd_circuit* c = NULL;
    EXPECT(nd_circuit_parse(mixed, &c) == ND_OK);
    EXPECT(nd_circuit_size(c) == 6);
    EXPECT(nd_circuit_num_variables(c) == 2);
    EXPECT(strcmp(nd_circuit_variable(c, 1), "x2") == 0);
    EXPECT(nd_circuit_variable(c, 2) == NULL);
    EXPECT(nd_circuit_is_monotone(c) == 1);
    EXPECT(nd_circuit_is_weakly_skew(c) == 1);

    const char* values[] = {"1/2", "3"};
    char* value = NULL;
    EXPECT(nd_circuit_evaluate(c, values, 2, &value) == ND_OK);
    expect_string(value, "11");

    char* text = NULL;
    EXPECT(nd_circuit_serialize(c, &text) == ND_OK);
    expect_string(text, mixed);
    nd_circuit_free(c);

    nd_circuit* bad = NULL;
    EXPECT(nd_circuit_parse("g1 = mul g2 g2\noutput g1\n", &bad) == ND_ERR_PARSE);
    EXPECT(bad == NULL);
    EXPECT(strlen(nd_last_error()) > 0);
    EXPECT(strcmp(nd_status_name(ND_ERR_PARSE), "parse") == 0);
    EXPECT(strcmp(nd_status_name(ND_OK), "ok") == 0);
    EXPECT(nd_circuit_parse(NULL, &bad) == ND_ERR_INVALID_ARGUMENT);
    nd_circuit_free(NULL);
}

static void test_polynomials(void) {
    nd_circuit* c = NULL;
    nd_poly* p = NULL;
    EXPECT(nd_circuit_parse(mixed, &c) == ND_OK);
    EXPECT(nd_expand(c, 0, &p) == ND_OK);
    EXPECT(nd_poly_num_terms(p) == 3);

    char* s = NULL;
    EXPECT(nd_poly_to_string(p, &s) == ND_OK);
    expect_string(s, "x1*x2 + x1 + x2^2");

    nd_poly* same = NULL;
    EXPECT(nd_poly_parse("1 x2^2\n1 x1\n1 x1*x2\n", &same) == ND_OK);
    EXPECT(nd_poly_equal(p, same) == 1);
    nd_poly_free(same);

    const int64_t a[] = {1, 1};
    int64_t b = -1;
    nd_poly* face = NULL;
    EXPECT(nd_poly_face(p, a, 2, &b, &face) == ND_OK);
    EXPECT(b == 1);
    EXPECT(nd_poly_to_string(face, &s) == ND_OK);
    expect_string(s, "x1");
    nd_poly_free(face);

    nd_poly* restricted = NULL;
    EXPECT(nd_poly_restrict(p, "1 1 = 1\n", &restricted) == ND_OK);
    EXPECT(nd_poly_num_terms(restricted) == 1);
    nd_poly_free(restricted);
    EXPECT(nd_poly_restrict(p, "1 1 = 2\n", &restricted) == ND_ERR_INVALID_FACE);

    size_t violations = 0;
    char* report = NULL;
    EXPECT(nd_poly_check_support(p, "1 0 >= 1\n", &violations, &report) == ND_OK);
    EXPECT(violations == 1);
    nd_string_free(report);

    char* points = NULL;
    EXPECT(nd_system_lattice_points("1 0 >= 0\n0 1 >= 0\n1 1 = 1\n", &points) == ND_OK);
    EXPECT(points != NULL && strstr(points, "0 1") != NULL && strstr(points, "1 0") != NULL);
    nd_string_free(points);

    nd_poly* tiny = NULL;
    EXPECT(nd_expand(c, 1, &tiny) == ND_ERR_BUDGET_EXCEEDED);
    nd_poly_free(p);
    nd_circuit_free(c);
}

static void test_degeneration(void) {
    nd_circuit* c = NULL;
    EXPECT(nd_circuit_parse(mixed, &c) == ND_OK);
    const int64_t a[] = {1, 1};

    nd_circuit* out = NULL;
    int64_t b = 0;
    EXPECT(nd_degen(c, a, 2, NULL, &out, &b) == ND_OK);
    EXPECT(b == 1);
    nd_poly* p = NULL;
    char* s = NULL;
    EXPECT(nd_expand(out, 0, &p) == ND_OK);
    EXPECT(nd_poly_to_string(p, &s) == ND_OK);
    expect_string(s, "x1");
    nd_poly_free(p);
    nd_circuit_free(out);

    EXPECT(nd_degen_monotone(c, a, 2, &out) == ND_OK);
    EXPECT(nd_circuit_size(out) <= nd_circuit_size(c));
    nd_circuit_free(out);

    nd_degen_options options;
    nd_degen_options_init(&options);
    options.check_validity = 1;
    EXPECT(nd_degen_equalities(c, "1 1 = 1\n", &options, &out) == ND_OK);
    nd_circuit_free(out);
    EXPECT(nd_degen_equalities(c, "1 1 = 2\n", &options, &out) == ND_ERR_INVALID_FACE);

    int64_t bound = 0;
    int finite = 0;
    EXPECT(nd_tropical_bound(c, a, 2, &bound, &finite) == ND_OK);
    EXPECT(finite == 1 && bound == 1);
    EXPECT(nd_degen(c, a, 1, NULL, &out, &b) == ND_ERR_INVALID_ARGUMENT);
    nd_circuit_free(c);

    nd_circuit* zero = NULL;
    EXPECT(nd_circuit_parse("g1 = input x\ng2 = sub g1 g1\noutput g2\n", &zero) == ND_OK);
    const int64_t one[] = {1};
    EXPECT(nd_degen(zero, one, 1, NULL, &out, &b) == ND_ERR_ZERO_POLYNOMIAL);
    EXPECT(strlen(nd_last_error()) > 0);
    nd_circuit_free(zero);
}

static void test_generators(void) {
    nd_circuit* demo = NULL;
    char* param = NULL;
    int64_t exponent = 0;
    EXPECT(nd_gen_permanent_demo(2, &demo, &param, &exponent) == ND_OK);
    EXPECT(exponent == 12);
    nd_circuit* perm = NULL;
    EXPECT(nd_extract(demo, param, exponent, 0, 0, 0, 512, &perm) == ND_OK);
    nd_poly* p = NULL;
    char* s = NULL;
    EXPECT(nd_expand(perm, 0, &p) == ND_OK);
    EXPECT(nd_poly_to_string(p, &s) == ND_OK);
    expect_string(s, "x11*x22 + x12*x21");
    nd_poly_free(p);
    nd_circuit_free(perm);
    EXPECT(nd_extract(demo, param, exponent, 0, 0, 0, 2, &perm) == ND_ERR_BUDGET_EXCEEDED);
    nd_string_free(param);
    nd_circuit_free(demo);

    const int parts[] = {2, 1};
    nd_circuit* schur = NULL;
    EXPECT(nd_gen_schur(parts, 2, 3, &schur) == ND_OK);
    EXPECT(nd_expand(schur, 0, &p) == ND_OK);
    EXPECT(nd_poly_num_terms(p) == 7);
    nd_poly_free(p);
    nd_circuit_free(schur);

    nd_poly* pf = NULL;
    EXPECT(nd_gen_pfaffian("4 4\n1 2\n2 3\n3 4\n1 4\n", &pf) == ND_OK);
    EXPECT(nd_poly_num_terms(pf) == 2);
    nd_poly_free(pf);
    EXPECT(nd_gen_pfaffian("4 4\n1 2\n", &pf) == ND_ERR_PARSE);

    nd_circuit* sub = NULL;
    const int64_t dims[] = {1};
    const int64_t sigma[] = {1};
    EXPECT(nd_gen_subspace(dims, sigma, 1, 2, 1, &sub) == ND_ERR_INVALID_ARGUMENT);

    nd_circuit* kron = NULL;
    int attempts = 0;
    EXPECT(nd_gen_kronecker(2, 2, 1, 3, 0, &kron, &attempts) == ND_OK);
    EXPECT(attempts >= 1);
    EXPECT(nd_circuit_is_weakly_skew(kron) == 1);
    nd_circuit_free(kron);
}

static void test_checks(void) {
    EXPECT(nd_check_suite_count() == 9);
    EXPECT(strcmp(nd_check_suite_name(7), "permanent") == 0);
    EXPECT(nd_check_suite_name(9) == NULL);
    int passed = 0;
    char* line = NULL;
    EXPECT(nd_check_run("permanent", 0, 0, &passed, &line) == ND_OK);
    EXPECT(passed == 1);
    EXPECT(line != NULL && strncmp(line, "PASS [8]", 8) == 0);
    nd_string_free(line);
    EXPECT(nd_check_run("nonsense", 0, 0, &passed, &line) == ND_ERR_INVALID_ARGUMENT);
}

int main(void) {
    printf("newton_degen %s\n", nd_version());
    test_circuits();
    test_polynomials();
    test_degeneration();
    test_generators();
    test_checks();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("all C interface checks passed\n");
    return 0;
}
