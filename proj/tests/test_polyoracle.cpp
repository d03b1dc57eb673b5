#include "helpers.hpp"

#include "newton_degen/determinant.hpp"
#include "newton_degen/generators.hpp"
#include "newton_degen/polyoracle.hpp"
#include "newton_degen/quiver_polytopes.hpp"
#include "newton_degen/reference.hpp"

using namespace nd;
using namespace nd::test;

namespace {

// x1*x2 + x1 + x2^2, monotone
const char* mixed_text = R"(g1 = input x1
g2 = input x2
g3 = mul g1 g2
g4 = add g3 g1
g5 = mul g2 g2
g6 = add g4 g5
output g6
)";

SymbolicMatrix generic_matrix(std::size_t n) {
    Names vars;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) vars.push_back("x" + std::to_string(i) + std::to_string(j));
    }
    SymbolicMatrix m(n, n, vars);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.add(i, j, 1, {vars[i * n + j]});
    }
    return m;
}

} // namespace

TEST_CASE("expand") {
    const Circuit sq = parse_circuit("g1 = input x\ng2 = input y\ng3 = add g1 g2\ng4 = mul g3 g3\noutput g4\n");
    CHECK(expand_as(sq, {"x", "y"}) == poly("1 x^2\n2 x*y\n1 y^2", {"x", "y"}));

    const SymbolicMatrix m = generic_matrix(3);
    const SparsePoly det3 = expand(determinant_circuit(m)).with_variables(m.variables);
    CHECK(det3.num_terms() == 6);
    CHECK(det3 == reference::leibniz_determinant(m));
    CHECK(det3.coefficient({1, 0, 0, 0, 1, 0, 0, 0, 1}) == 1);
    CHECK(det3.coefficient({0, 1, 0, 1, 0, 0, 0, 0, 1}) == -1);

    const Circuit cancel = parse_circuit("g1 = input x\ng2 = sub g1 g1\noutput g2\n");
    CHECK(expand(cancel).is_zero());
}

TEST_CASE("expand budget") {
    const SymbolicMatrix m = generic_matrix(4);
    const Circuit det4 = determinant_circuit(m);
    CHECK(expand(det4).num_terms() == 24);
    CHECK(kind_of([&] { expand(det4, 10); }) == ErrorKind::budget_exceeded);
    try {
        expand(det4, 10);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("gate g") != std::string::npos);
    }
}

TEST_CASE("face_min") {
    const SparsePoly p = expand(parse_circuit(mixed_text));
    const Direction a{1, 1};
    const FaceRestriction f = face_min(p, a);
    CHECK(f.value == 1);
    CHECK(f.restricted == poly("1 x1", {"x1", "x2"}));

    const Direction zero{0, 0};
    CHECK(face_min(p, zero).restricted == p);
    CHECK(face_min(p, zero).value == 0);

    const Direction b{-1, 0};
    CHECK(face_min(p, b).value == -1);
    CHECK(face_min(p, b).restricted == poly("1 x1*x2\n1 x1", {"x1", "x2"}));

    const Direction wrong{1};
    CHECK(kind_of([&] { face_min(p, wrong); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([&] { face_min(SparsePoly({"x"}), Direction{1}); }) == ErrorKind::zero_polynomial);
}

TEST_CASE("restrict_by_equalities") {
    const SparsePoly p = expand(parse_circuit(mixed_text));
    const Names vars{"x1", "x2"};
    CHECK(restrict_by_equalities(p, {{{1, 1}, 1}}) == poly("1 x1", vars));
    CHECK(restrict_by_equalities(p, {}) == p);
    // x1 >= 0 holds everywhere; tight only at x2^2
    CHECK(restrict_by_equalities(p, {{{1, 0}, 0}}) == poly("1 x2^2", vars));
    CHECK(restrict_by_equalities(p, {{{1, 1}, 1}, {{0, 1}, 0}}) == poly("1 x1", vars));
    // x1 <= 1 and x1 + x2 <= 2 meet at x1*x2
    CHECK(restrict_to_face(p, FaceSpec{EqualitySet{{{-1, 0}, -1}, {{-1, -1}, -2}}}) == poly("1 x1*x2", vars));

    // x1 + x2 >= 2 fails at x1
    CHECK(kind_of([&] { restrict_by_equalities(p, {{{1, 1}, 2}}); }) == ErrorKind::invalid_face);
    CHECK(kind_of([&] { restrict_by_equalities(p, {{{1}, 0}}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("coefficient_complexity") {
    CHECK(coefficient_complexity({{{1, 1}, 1}}) == 3);
    CHECK(coefficient_complexity({}) == 0);
    CHECK(coefficient_complexity({{{1, -2}, 3}}) == 6);
    CHECK(coefficient_complexity({{{0, 0}, -4}, {{2, 0}, 0}}) == 6);
}

TEST_CASE("check_support") {
    // the single edge: its Pfaffian x1_2 is the one matching
    const Graph edge = Graph::make(2, {{1, 2}});
    const auto pf = pfaffian_poly(edge).support();
    CHECK(check_support(pf, edmonds_system(edge)).empty());

    // the path 1-2-3 has no perfect matching and a zero determinant
    const Graph path = Graph::make(3, {{1, 2}, {2, 3}});
    const SparsePoly det = expand(tutte_det_circuit(path).circuit);
    CHECK(det.is_zero());
    CHECK(check_support(det.support(), edmonds_system(path)).empty());

    InequalitySystem sys;
    sys.variables = {"x1", "x2"};
    sys.add_equality({1, 1}, 1);
    sys.add_inequality({1, 0}, 0);
    sys.add_inequality({0, 1}, 0);
    const std::vector<Exponent> bad{{2, 0}, {1, 0}};
    const auto v = check_support(bad, sys);
    REQUIRE(v.size() == 1);
    CHECK(v[0].point == Exponent{2, 0});
    CHECK(v[0].equality);
    CHECK(v[0].index == 0);
    CHECK(v[0].lhs == 2);
    CHECK(v[0].rhs == 1);

    const std::vector<Exponent> negative{{-1, 2}};
    const auto w = check_support(negative, sys);
    REQUIRE(w.size() == 1);
    CHECK_FALSE(w[0].equality);
    CHECK(check_support(std::vector<Exponent>{}, sys).empty());
}

TEST_CASE("integral_points") {
    const InequalitySystem magic = magic_square_system(1, 2, 1);
    CHECK(integral_points(magic, implied_box(magic)) == std::vector<Exponent>{{0, 1}, {1, 0}});

    InequalitySystem empty;
    empty.variables = {"x"};
    empty.add_inequality({1}, 0);
    empty.add_equality({1}, 1);
    empty.add_upper_bound({1}, 0);
    CHECK(integral_points(empty, implied_box(empty)).empty());

    // the 4-cycle has two perfect matchings
    const Graph c4 = Graph::make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const InequalitySystem sys = edmonds_system(c4);
    CHECK(integral_points(sys, implied_box(sys)) == std::vector<Exponent>{{0, 1, 0, 1}, {1, 0, 1, 0}});

    InequalitySystem open;
    open.variables = {"x"};
    open.add_inequality({1}, 0);
    CHECK(kind_of([&] { implied_box(open); }) == ErrorKind::invalid_argument);

    const InequalitySystem big = magic_square_system(3, 3, 3);
    CHECK(kind_of([&] { integral_points(big, implied_box(big), 50); }) == ErrorKind::budget_exceeded);
}

TEST_CASE("in_convex_hull") {
    const std::vector<Exponent> tri{{0, 0}, {2, 0}, {0, 2}};
    CHECK(in_convex_hull(tri, {1, 1}));
    CHECK(in_convex_hull(tri, {1, 0}));
    CHECK(in_convex_hull(tri, {0, 2}));
    CHECK_FALSE(in_convex_hull(tri, {2, 2}));
    CHECK_FALSE(in_convex_hull(tri, {-1, 0}));

    const std::vector<Exponent> segment{{0, 0, 0}, {2, 2, 2}};
    CHECK(in_convex_hull(segment, {1, 1, 1}));
    CHECK_FALSE(in_convex_hull(segment, {1, 1, 0}));
    CHECK_FALSE(in_convex_hull(std::vector<Exponent>{}, {0}));
}

TEST_CASE("system text format") {
    InequalitySystem sys;
    sys.variables = {"a", "b"};
    sys.add_equality({1, 1}, 2);
    sys.add_inequality({1, 0}, 0);
    sys.add_upper_bound({0, 1}, 5);
    const InequalitySystem back = parse_system(format_system(sys));
    CHECK(back.variables == sys.variables);
    CHECK(back.equalities == sys.equalities);
    CHECK(back.inequalities == sys.inequalities);

    const InequalitySystem le = parse_system("1 2 <= 3\n");
    REQUIRE(le.inequalities.size() == 1);
    CHECK(le.inequalities[0] == LinearConstraint{{-1, -2}, -3});

    CHECK(kind_of([] { parse_system("1 2 3\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_system("1 2 = 3\n1 = 1\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_system("1 x = 3\n"); }) == ErrorKind::parse);

    CHECK(parse_direction("1 -2  3\n") == Direction{1, -2, 3});
    CHECK(kind_of([] { parse_direction("1 a"); }) == ErrorKind::parse);
}

TEST_CASE("term format") {
    const Names vars{"x", "y"};
    const SparsePoly p = poly("3/2 x^2*y\n-1 y\n4 1", vars);
    CHECK(parse_terms(format_terms(p), vars) == p);
    CHECK(to_string(p) == "3/2*x^2*y - y + 4");
    CHECK(to_string(SparsePoly(vars)) == "0");
    CHECK(parse_terms("2 b*a").variables() == Names{"b", "a"});
    CHECK(kind_of([] { parse_terms("1 z", {"x"}); }) == ErrorKind::parse);
    CHECK(kind_of([&] { p.with_variables({"x"}); }) == ErrorKind::invalid_argument);
    CHECK(p.with_variables({"y", "z", "x"}).coefficient({1, 0, 2}) == q(3, 2));
}
