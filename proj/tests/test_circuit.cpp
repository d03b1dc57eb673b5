#include "helpers.hpp"

#include "newton_degen/circuit.hpp"
#include "newton_degen/degen.hpp"

using namespace nd;
using namespace nd::test;

namespace {

const char* square_text = "g1 = input x\ng2 = mul g1 g1\noutput g2\n";

const char* det2_text = R"(g1 = input x11
g2 = input x12
g3 = input x21
g4 = input x22
g5 = mul g1 g4
g6 = mul g2 g3
g7 = sub g5 g6
output g7
)";

} // namespace

TEST_CASE("parse and serialize") {
    const Circuit c = parse_circuit(square_text);
    CHECK(c.size() == 2);
    CHECK(c.variables() == Names{"x"});
    CHECK(c.gate(1).kind == GateKind::mul);
    CHECK(serialize_circuit(c) == square_text);

    const Circuit k = parse_circuit("g1 = const 3/2\noutput g1\n");
    CHECK(k.gate(0).kind == GateKind::constant);
    CHECK(k.constant_value(k.gate(0)) == q(3, 2));

    // comments, blank lines and gaps in the labels are accepted
    const Circuit gaps = parse_circuit("# a comment\n\ng3 = input y\ng10 = add g3 g3\noutput g10\n");
    CHECK(gaps.size() == 2);
}

TEST_CASE("parse errors") {
    CHECK(kind_of([] { parse_circuit("g1 = mul g2 g2\ng2 = input x\noutput g1\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_circuit("g1 = input x\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_circuit("g1 = input x\ng2 = input x\noutput g2\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_circuit("g1 = pow g1\noutput g1\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_circuit("g1 = const 1/0\noutput g1\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_circuit("g2 = input x\ng1 = input y\noutput g1\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_circuit("g1 = input x\noutput g1\ng2 = input y\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_circuit("g1 = input x\ng2 = add g1\noutput g2\n"); }) == ErrorKind::parse);

    try {
        parse_circuit("g1 = input x\ng2 = mul g1 g7\noutput g2\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("annotations round-trip") {
    Circuit c = parse_circuit(square_text);
    c.set_annotation("param-offset", "3");
    const Circuit back = parse_circuit(serialize_circuit(c));
    CHECK(back.annotations().at("param-offset") == "3");
}

TEST_CASE("evaluate") {
    CHECK(evaluate(parse_circuit(square_text), {{"x", q(3)}}) == 9);

    const Circuit sum = parse_circuit("g1 = input x\ng2 = input y\ng3 = add g1 g2\noutput g3\n");
    CHECK(evaluate(sum, {{"x", q(1, 2)}, {"y", q(1, 3)}}) == q(5, 6));
    const std::vector<Rational> positional{q(1, 2), q(1, 3)};
    CHECK(evaluate(sum, positional) == q(5, 6));

    const Circuit det2 = parse_circuit(det2_text);
    CHECK(evaluate(det2, {{"x11", q(1)}, {"x12", q(0)}, {"x21", q(0)}, {"x22", q(1)}}) == 1);
    CHECK(evaluate(det2, {{"x11", q(1)}, {"x12", q(2)}, {"x21", q(3)}, {"x22", q(4)}}) == -2);

    CHECK(kind_of([&] { evaluate(sum, {{"x", q(1)}}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("monotone and weakly skew") {
    CHECK(is_monotone(parse_circuit(square_text)));
    CHECK_FALSE(is_monotone(parse_circuit(det2_text)));
    CHECK(is_monotone(parse_circuit("g1 = const 0\noutput g1\n")));
    CHECK_FALSE(is_monotone(parse_circuit("g1 = input x\ng2 = const -1\ng3 = mul g1 g2\noutput g3\n")));

    // a formula is weakly skew
    CHECK(is_weakly_skew(parse_circuit(det2_text)));
    // (x*y) * (x*y) with the product shared
    CHECK_FALSE(is_weakly_skew(parse_circuit("g1 = input x\ng2 = input y\ng3 = mul g1 g2\ng4 = mul g3 g3\noutput g4\n")));
    // x * x multiplies two leaves
    CHECK(is_weakly_skew(parse_circuit(square_text)));
    // (x+y)*(x+y) with two separately built sums
    CHECK(is_weakly_skew(parse_circuit(
        "g1 = input x\ng2 = input y\ng3 = add g1 g2\ng4 = add g1 g2\ng5 = mul g3 g4\noutput g5\n")));
    // the sum also feeds the output through another path
    CHECK_FALSE(is_weakly_skew(parse_circuit(
        "g1 = input x\ng2 = input y\ng3 = add g1 g2\ng4 = add g1 g2\ng5 = mul g3 g4\ng6 = add g5 g3\n"
        "g7 = add g6 g4\noutput g7\n")));

    // row vector times a chain of 2x2 matrices: each product has a leaf operand
    CircuitBuilder b;
    std::vector<GateId> v{b.constant(1), b.constant(0)};
    for (int m = 1; m <= 3; ++m) {
        std::vector<GateId> next;
        for (int j = 1; j <= 2; ++j) {
            std::vector<GateId> terms;
            for (int i = 1; i <= 2; ++i) {
                terms.push_back(b.mul(v[i - 1], b.variable("x" + std::to_string(m) + "_" + std::to_string(i) + "_" +
                                                             std::to_string(j))));
            }
            next.push_back(b.sum(terms));
        }
        v = next;
    }
    CHECK(is_weakly_skew(std::move(b).finish(b.add(v[0], v[1]))));
}

TEST_CASE("builder folding") {
    CircuitBuilder b;
    const GateId x = b.variable("x");
    CHECK(b.add(x, b.constant(0)) == x);
    CHECK(b.mul(b.constant(1), x) == x);
    CHECK(b.constant_of(b.mul(x, b.constant(0))) == Rational(0));
    CHECK(b.constant_of(b.add(b.constant(2), b.constant(3))) == Rational(5));
    CHECK(b.constant(7) == b.constant(7));
    CHECK(b.variable("x") == x);
    CHECK(b.constant_of(b.product({})) == Rational(1));
    CHECK(b.constant_of(b.sum({})) == Rational(0));

    CircuitBuilder v(CircuitBuilder::Mode::verbatim);
    const GateId y = v.variable("y");
    CHECK(v.add(y, v.constant(0)) != y);
    CHECK(kind_of([&] { v.variable("y"); }) == ErrorKind::invalid_argument);
}

TEST_CASE("power and import") {
    CircuitBuilder b;
    const GateId x = b.variable("x");
    const Circuit cube = std::move(b).finish(b.power(x, 3));
    CHECK(expand_as(cube, {"x"}) == poly("1 x^3", {"x"}));

    CircuitBuilder outer;
    const GateId y = outer.variable("y");
    const GateId shifted = outer.add(y, outer.constant(1));
    const std::vector<GateId> map{shifted};
    const Circuit composed = std::move(outer).finish(outer.import(cube, map));
    CHECK(expand_as(composed, {"y"}) == poly("1 y^3\n3 y^2\n3 y\n1 1", {"y"}));
}

TEST_CASE("degree intervals") {
    // t*x + t^3
    const Circuit a = parse_circuit(
        "g1 = input t\ng2 = input x\ng3 = mul g1 g2\ng4 = mul g1 g1\ng5 = mul g4 g1\ng6 = add g3 g5\noutput g6\n");
    CHECK(degree_interval(a, "t") == DegreeInterval{1, 3});
    // (t+1)(t+2)
    const Circuit b = parse_circuit(
        "g1 = input t\ng2 = const 1\ng3 = const 2\ng4 = add g1 g2\ng5 = add g1 g3\ng6 = mul g4 g5\noutput g6\n");
    CHECK(degree_interval(b, "t") == DegreeInterval{0, 2});
    // t*x - t*x: the bounds are syntactic
    const Circuit c = parse_circuit("g1 = input t\ng2 = input x\ng3 = mul g1 g2\ng4 = sub g3 g3\noutput g4\n");
    CHECK(degree_interval(c, "t") == DegreeInterval{1, 1});
    // a parameter that does not occur
    CHECK(kind_of([] { degree_interval(parse_circuit(square_text), "t"); }) == ErrorKind::invalid_argument);
    CHECK(degree_interval(parse_circuit(square_text), "x").width() == 1);
}

TEST_CASE("linear substitution") {
    const Circuit sq = parse_circuit(square_text);
    const Circuit image = substitute_linear(sq, {"u", "v"}, {{"x", AffineForm{q(1), {{"u", q(2)}, {"v", q(3)}}}}});
    CHECK(expand_as(image, {"u", "v"}) == poly("4 u^2\n12 u*v\n9 v^2\n4 u\n6 v\n1 1", {"u", "v"}));

    // identity when the map is empty
    const Circuit det2 = parse_circuit(det2_text);
    const Names names = det2.variables();
    CHECK(expand_as(substitute_linear(det2, names, {}), names) == expand_as(det2, names));

    // zeroing the anti-diagonal
    const Circuit diag = substitute_linear(det2, names, {{"x12", AffineForm{}}, {"x21", AffineForm{}}});
    CHECK(expand_as(diag, names) == poly("1 x11*x22", names));

    CHECK(kind_of([&] { substitute_linear(sq, {"u"}, {}); }) == ErrorKind::invalid_argument);
}
