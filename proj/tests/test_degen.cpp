#include "helpers.hpp"

#include "newton_degen/degen.hpp"
#include "newton_degen/generators.hpp"
#include "newton_degen/reference.hpp"

using namespace nd;
using namespace nd::test;

namespace {

// x1*x2 + x1 + x2^2
const char* mixed_text = R"(g1 = input x1
g2 = input x2
g3 = mul g1 g2
g4 = add g3 g1
g5 = mul g2 g2
g6 = add g4 g5
output g6
)";

// x1*x2 - x2^3 + x1^2
const char* signed_text = R"(g1 = input x1
g2 = input x2
g3 = mul g1 g2
g4 = mul g2 g2
g5 = mul g4 g2
g6 = sub g3 g5
g7 = mul g1 g1
g8 = add g6 g7
output g8
)";

const char* cancel_text = "g1 = input x\ng2 = const -1\ng3 = mul g2 g1\ng4 = add g1 g3\noutput g4\n";

} // namespace

TEST_CASE("tropical bound") {
    const Circuit c = parse_circuit(mixed_text);
    CHECK(tropical_bound(c, Direction{1, 1}) == 1);
    CHECK(tropical_bound(c, Direction{0, 0}) == 0);
    CHECK(tropical_bound(c, Direction{-1, 2}) == -1);
    // only a lower bound once terms cancel
    CHECK(tropical_bound(parse_circuit(cancel_text), Direction{1}) == 1);
    CHECK_FALSE(tropical_bound(parse_circuit("g1 = input x\ng2 = const 0\ng3 = mul g1 g2\noutput g3\n"), Direction{1}));
    CHECK(kind_of([&] { tropical_bound(c, Direction{1}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("monotone degeneration") {
    const Circuit c = parse_circuit(mixed_text);
    const Names vars{"x1", "x2"};
    const Circuit face = monotone_newton_degenerate(c, Direction{1, 1});
    CHECK(expand_as(face, vars) == poly("1 x1", vars));
    CHECK(face.size() <= c.size());
    CHECK(expand_as(monotone_newton_degenerate(c, Direction{0, 0}), vars) == expand_as(c, vars));
    CHECK(expand_as(monotone_newton_degenerate(c, Direction{0, -1}), vars) == poly("1 x2^2", vars));
    CHECK(expand_as(monotone_newton_degenerate(c, Direction{-1, 0}), vars) == poly("1 x1*x2\n1 x1", vars));
    CHECK(kind_of([] { monotone_newton_degenerate(parse_circuit(signed_text), Direction{1, 1}); }) ==
          ErrorKind::invalid_argument);
}

TEST_CASE("one-parameter substitution") {
    const Circuit sum = parse_circuit("g1 = input x1\ng2 = input x2\ng3 = add g1 g2\noutput g3\n");
    const auto s = one_param_substitute(sum, Direction{0, 2}, "t");
    CHECK(s.offset == 0);
    CHECK(expand_as(s.circuit, {"x1", "x2", "t"}) == poly("1 x1\n1 x2*t^2", {"x1", "x2", "t"}));
    CHECK(s.circuit.annotations().at("param") == "t");

    // x -> t^-1 x is cleared by the shift t^1
    const Circuit x = parse_circuit("g1 = input x\ng2 = const 1\ng3 = add g1 g2\noutput g3\n");
    const auto neg = one_param_substitute(x, Direction{-1}, "t");
    CHECK(neg.offset == 1);
    CHECK(neg.circuit.annotations().at("param-offset") == "1");
    CHECK(expand_as(neg.circuit, {"x", "t"}) == poly("1 x\n1 t", {"x", "t"}));

    const Circuit mixed = parse_circuit(mixed_text);
    const auto id = one_param_substitute(mixed, Direction{0, 0}, "t");
    CHECK(id.offset == 0);
    CHECK(expand_as(id.circuit, {"x1", "x2", "t"}) == expand(mixed).with_variables({"x1", "x2", "t"}));

    CHECK(kind_of([&] { one_param_substitute(mixed, Direction{0, 0}, "x1"); }) == ErrorKind::invalid_argument);
    CHECK(is_weakly_skew(one_param_substitute(mixed, Direction{2, -3}, "t").circuit));
}

TEST_CASE("coefficient extraction") {
    // (x + t)^2
    const Circuit sq = parse_circuit("g1 = input x\ng2 = input t\ng3 = add g1 g2\ng4 = mul g3 g3\noutput g4\n");
    const Circuit c1 = extract_coefficient(sq, "t", 1, degree_interval(sq, "t"));
    CHECK(c1.variables() == Names{"x"});
    CHECK(expand_as(c1, {"x"}) == poly("2 x", {"x"}));
    CHECK(expand_as(extract_coefficient(sq, "t", 0, {0, 2}), {"x"}) == poly("1 x^2", {"x"}));
    CHECK(expand_as(extract_coefficient(sq, "t", 2, {0, 2}), {"x"}) == poly("1 1", {"x"}));

    // t^2 x + t^3 x^2, interval [2,3]
    const Circuit shifted = parse_circuit(R"(g1 = input t
g2 = input x
g3 = mul g1 g1
g4 = mul g3 g2
g5 = mul g3 g1
g6 = mul g2 g2
g7 = mul g5 g6
g8 = add g4 g7
output g8
)");
    CHECK(degree_interval(shifted, "t") == DegreeInterval{2, 3});
    CHECK(expand_as(extract_coefficient(shifted, "t", 2, {2, 3}), {"x"}) == poly("1 x", {"x"}));
    CHECK(expand_as(extract_coefficient(shifted, "t", 3, {2, 3}), {"x"}) == poly("1 x^2", {"x"}));

    CHECK(kind_of([&] { extract_coefficient(sq, "t", 5, {0, 2}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([&] { extract_coefficient(sq, "s", 0, {0, 2}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([&] { extract_coefficient(sq, "t", 1, {0, 2}, 2); }) == ErrorKind::budget_exceeded);
}

TEST_CASE("permanent as a coefficient") {
    const PermanentDemo demo = permanent_coefficient_demo(2);
    CHECK(demo.exponent == 12);
    const Circuit perm = extract_coefficient(demo.circuit, demo.param, demo.exponent,
                                             degree_interval(demo.circuit, demo.param));
    const Names vars{"x11", "x12", "x21", "x22"};
    CHECK(expand_as(perm, vars) == poly("1 x11*x22\n1 x12*x21", vars));
    CHECK(to_string(expand_as(perm, vars)) == "x11*x22 + x12*x21");
}

TEST_CASE("general degeneration") {
    const Circuit c = parse_circuit(signed_text);
    const Names vars{"x1", "x2"};
    const Degeneration d = newton_degenerate_detailed(c, Direction{1, 1});
    CHECK(d.b == 2);
    CHECK(expand_as(d.circuit, vars) == poly("1 x1*x2\n1 x1^2", vars));
    CHECK(expand_as(newton_degenerate(c, Direction{0, -1}), vars) == poly("-1 x2^3", vars));
    CHECK(expand_as(newton_degenerate(c, Direction{0, 0}), vars) == expand_as(c, vars));

    // a hint equal to the true minimum gives the same face
    DegenOptions hinted;
    hinted.b_hint = 2;
    CHECK(expand_as(newton_degenerate(c, Direction{1, 1}, hinted), vars) == poly("1 x1*x2\n1 x1^2", vars));
    // one outside the degree range yields zero
    hinted.b_hint = 100;
    CHECK(expand(newton_degenerate(c, Direction{1, 1}, hinted)).is_zero());

    CHECK(kind_of([] { newton_degenerate(parse_circuit(cancel_text), Direction{1}); }) == ErrorKind::zero_polynomial);
    CHECK(kind_of([] { newton_degenerate(parse_circuit("g1 = const 0\noutput g1\n"), Direction{}); }) ==
          ErrorKind::zero_polynomial);

    // (x+y)(x-y) + x*y^2 + y^2 = x^2 + x*y^2
    const Circuit lifted = parse_circuit(R"(g1 = input x
g2 = input y
g3 = add g1 g2
g4 = sub g1 g2
g5 = mul g3 g4
g6 = mul g1 g2
g7 = mul g6 g2
g8 = add g5 g7
g9 = mul g2 g2
g10 = add g8 g9
output g10
)");
    const Degeneration e = newton_degenerate_detailed(lifted, Direction{1, 1});
    CHECK(e.b == 2);
    CHECK(expand_as(e.circuit, {"x", "y"}) == poly("1 x^2", {"x", "y"}));
    // along (2,1) the tropical start is 2 and the true minimum 4
    CHECK(tropical_bound(lifted, Direction{2, 1}) == 2);
    const Degeneration f = newton_degenerate_detailed(lifted, Direction{2, 1});
    CHECK(f.b == 4);
    CHECK(expand_as(f.circuit, {"x", "y"}) == poly("1 x^2\n1 x*y^2", {"x", "y"}));
}

TEST_CASE("degeneration by equalities") {
    const Circuit c = parse_circuit(mixed_text);
    const Names vars{"x1", "x2"};
    CHECK(expand_as(face_restrict_by_equalities(c, {{{1, 1}, 1}}), vars) == poly("1 x1", vars));
    CHECK(expand_as(face_restrict_by_equalities(c, {}), vars) == expand_as(c, vars));
    CHECK(expand_as(face_restrict_by_equalities(c, {{{-1, 0}, -1}, {{-1, -1}, -2}}), vars) == poly("1 x1*x2", vars));

    DegenOptions check;
    check.check_validity = true;
    CHECK(kind_of([&] { face_restrict_by_equalities(c, {{{1, 1}, 2}}, check); }) == ErrorKind::invalid_face);
    CHECK(kind_of([&] { face_restrict_by_equalities(c, {{{1}, 2}}); }) == ErrorKind::invalid_argument);

    // the 4-cycle with the edge 12 deleted keeps one matching, squared
    const Graph c4 = Graph::make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const auto rows = edmonds_equalities(c4, {}, {{1, 2}});
    const Circuit det = tutte_det_circuit(c4).circuit;
    const Names edges = c4.edge_variables();
    const SparsePoly face = expand_as(face_restrict_by_equalities(det, rows), edges);
    const SparsePoly kept = reference::filtered_matching_sum(c4, {}, {{1, 2}});
    CHECK(face == kept * kept);
    CHECK(face == poly("1 x2_3^2*x1_4^2", edges));
}

TEST_CASE("zero test and fresh names") {
    CHECK(is_identically_zero(parse_circuit(cancel_text)));
    CHECK_FALSE(is_identically_zero(parse_circuit(mixed_text)));
    CHECK(is_identically_zero(parse_circuit("g1 = const 0\noutput g1\n")));

    CHECK(fresh_parameter(parse_circuit(mixed_text)) == "t");
    CHECK(fresh_parameter(parse_circuit("g1 = input t\ng2 = input t1\ng3 = add g1 g2\noutput g3\n")) == "t2");
}
