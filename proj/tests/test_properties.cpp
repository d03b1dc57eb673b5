#include "helpers.hpp"

#include "newton_degen/degen.hpp"
#include "newton_degen/random_circuits.hpp"

#include <random>

using namespace nd;
using namespace nd::test;

namespace {

constexpr int rounds = 120;

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 6);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> out(n);
    for (auto& x : out) x = random_rational(rng);
    return out;
}

// The circuit obtained by moving the output to `gate`.
Circuit rooted_at(const Circuit& c, GateId gate) {
    std::string text = serialize_circuit(c);
    const auto at = text.rfind("output ");
    text.replace(at, std::string::npos, "output g" + std::to_string(gate + 1) + "\n");
    return parse_circuit(text);
}

Rational power(const Rational& base, std::int64_t k) {
    Rational out = 1;
    for (std::int64_t i = 0; i < k; ++i) out *= base;
    return out;
}

} // namespace

TEST_CASE("serialization round-trips") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < rounds; ++i) {
        RandomCircuitOptions opts;
        opts.weakly_skew = i % 2 == 0;
        const Circuit c = random_circuit(rng, opts);
        const Circuit back = parse_circuit(serialize_circuit(c));
        CHECK(back == c);
        CHECK(serialize_circuit(back) == serialize_circuit(c));
    }
}

TEST_CASE("evaluation agrees with the expansion") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < rounds; ++i) {
        const Circuit c = random_circuit(rng);
        const SparsePoly p = expand(c);
        CHECK(p.variables() == c.variables());
        for (int k = 0; k < 3; ++k) {
            const auto point = random_point(rng, c.variables().size());
            CHECK(evaluate(c, point) == p.evaluate(point));
        }
    }
}

TEST_CASE("degree intervals contain the true degrees") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < rounds; ++i) {
        const Circuit c = random_circuit(rng);
        const SparsePoly p = expand(c);
        if (p.is_zero()) continue;
        for (std::size_t v = 0; v < c.variables().size(); ++v) {
            const DegreeInterval d = degree_interval(c, c.variables()[v]);
            for (const auto& [e, coeff] : p.terms()) {
                CHECK(d.lo <= e[v]);
                CHECK(e[v] <= d.hi);
            }
        }
    }
}

TEST_CASE("expansion respects products and sums") {
    std::mt19937_64 rng(4);
    int checked = 0;
    for (int i = 0; i < rounds; ++i) {
        const Circuit c = random_circuit(rng);
        const Names& vars = c.variables();
        for (GateId g = 0; g < c.size(); ++g) {
            const Gate& gate = c.gate(g);
            if (gate.kind != GateKind::mul && gate.kind != GateKind::add) continue;
            const SparsePoly whole = expand_as(rooted_at(c, g), vars);
            const SparsePoly lhs = expand_as(rooted_at(c, gate.lhs), vars);
            const SparsePoly rhs = expand_as(rooted_at(c, gate.rhs), vars);
            CHECK(whole == (gate.kind == GateKind::mul ? lhs * rhs : lhs + rhs));
            ++checked;
        }
    }
    CHECK(checked > rounds);
}

TEST_CASE("restriction by valid rows keeps the tight terms") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < rounds; ++i) {
        const Circuit c = random_circuit(rng);
        const SparsePoly p = expand(c);
        if (p.is_zero()) continue;
        const std::size_t m = p.num_variables();
        const Direction a = random_direction(rng, m);
        const Direction b = random_direction(rng, m);
        EqualitySet rows{LinearConstraint{a, face_min(p, a).value}, LinearConstraint{b, face_min(p, b).value}};
        SparsePoly expected(p.variables());
        for (const auto& [e, coeff] : p.terms()) {
            if (rows[0].lhs_at(e) == rows[0].rhs && rows[1].lhs_at(e) == rows[1].rhs) expected.add_term(e, coeff);
        }
        CHECK(restrict_by_equalities(p, rows) == expected);
        CHECK(expand_as(face_restrict_by_equalities(c, rows), p.variables()) == expected);
    }
}

TEST_CASE("tropical bound is a lower bound, exact on monotone circuits") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < rounds; ++i) {
        RandomCircuitOptions opts;
        const bool monotone = i % 2 == 0;
        if (monotone) opts.min_constant = 0;
        const Circuit c = random_circuit(rng, opts);
        const SparsePoly p = expand(c);
        const Direction a = random_direction(rng, c.variables().size());
        const TropicalValue t = tropical_bound(c, a);
        if (p.is_zero()) {
            if (monotone) CHECK_FALSE(t);
            continue;
        }
        REQUIRE(t);
        CHECK(*t <= face_min(p, a).value);
        if (monotone) CHECK(*t == face_min(p, a).value);
    }
}

TEST_CASE("monotone pass agrees with the general construction") {
    std::mt19937_64 rng(7);
    int nonzero = 0;
    for (int i = 0; i < rounds; ++i) {
        RandomCircuitOptions opts;
        opts.min_constant = 0;
        opts.weakly_skew = i % 2 == 0;
        const Circuit c = random_circuit(rng, opts);
        const SparsePoly p = expand(c);
        const Direction a = random_direction(rng, c.variables().size());
        const Circuit face = monotone_newton_degenerate(c, a);
        CHECK(face.size() <= c.size());
        if (opts.weakly_skew) CHECK(is_weakly_skew(face));
        if (p.is_zero()) {
            CHECK(expand(face).is_zero());
            continue;
        }
        ++nonzero;
        const SparsePoly expected = face_min(p, a).restricted;
        CHECK(expand_as(face, p.variables()) == expected);
        CHECK(expand_as(newton_degenerate(c, a), p.variables()) == expected);
    }
    CHECK(nonzero > rounds / 2);
}

TEST_CASE("general degeneration matches the face of the expansion") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < rounds; ++i) {
        const Circuit c = random_circuit(rng);
        const SparsePoly p = expand(c);
        const Direction a = random_direction(rng, c.variables().size());
        if (p.is_zero()) {
            CHECK(kind_of([&] { newton_degenerate(c, a); }) == ErrorKind::zero_polynomial);
            continue;
        }
        const FaceRestriction f = face_min(p, a);
        const Degeneration d = newton_degenerate_detailed(c, a);
        CHECK(d.b == f.value);
        CHECK(d.circuit.variables() == c.variables());
        CHECK(expand_as(d.circuit, p.variables()) == f.restricted);

        // restricting twice along the same direction changes nothing
        const SparsePoly twice = expand_as(newton_degenerate(d.circuit, a), p.variables());
        CHECK(twice == f.restricted);
    }
}

TEST_CASE("substitution scales every variable by a power of t") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < rounds; ++i) {
        RandomCircuitOptions opts;
        opts.weakly_skew = i % 2 == 0;
        const Circuit c = random_circuit(rng, opts);
        const std::size_t m = c.variables().size();
        const Direction a = random_direction(rng, m);
        const ParamSubstitution s = one_param_substitute(c, a, "t");
        if (opts.weakly_skew) CHECK(is_weakly_skew(s.circuit));
        CHECK(s.offset >= 0);

        const auto x = random_point(rng, m);
        Rational t = random_rational(rng);
        if (t == 0) t = 3;
        std::vector<Rational> scaled(m);
        std::map<std::string, Rational> at;
        for (std::size_t j = 0; j < m; ++j) {
            scaled[j] = x[j] * (a[j] >= 0 ? power(t, a[j]) : 1 / power(t, -a[j]));
            at[c.variables()[j]] = x[j];
        }
        at["t"] = t;
        CHECK(evaluate(s.circuit, at) == power(t, s.offset) * evaluate(c, scaled));
    }
}

TEST_CASE("coefficient extraction is exact and linear") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < rounds; ++i) {
        RandomCircuitOptions opts;
        opts.max_degree = 6;
        const Circuit c1 = random_circuit(rng, opts);
        const Circuit c2 = random_circuit(rng, opts);
        if (c1.variables().size() < 2 || c2.variables().size() < 2) continue;

        // c1 + c2 over the union of their variables, with x1 as the parameter
        CircuitBuilder b;
        const auto wire = [&](const Circuit& c) {
            std::vector<GateId> inputs;
            for (const auto& name : c.variables()) inputs.push_back(b.variable(name));
            return b.import(c, inputs);
        };
        const GateId l = wire(c1);
        const GateId r = wire(c2);
        const Circuit sum = std::move(b).finish(b.add(l, r));

        const DegreeInterval whole = degree_interval(sum, "x1");
        const Names& vars = sum.variables();
        const SparsePoly p = expand(sum);
        for (std::int64_t k = whole.lo; k <= whole.hi; ++k) {
            const Circuit coeff = extract_coefficient(sum, "x1", k, whole);
            Names rest(vars.begin() + 1, vars.end());
            REQUIRE(coeff.variables() == rest);

            SparsePoly expected(rest);
            for (const auto& [e, q] : p.terms()) {
                if (e[0] == k) expected.add_term(Exponent(e.begin() + 1, e.end()), q);
            }
            const SparsePoly got = expand_as(coeff, rest);
            CHECK(got == expected);

            SparsePoly parts(rest);
            for (const Circuit* c : {&c1, &c2}) {
                const DegreeInterval d = degree_interval(*c, "x1");
                if (k < d.lo || k > d.hi) continue;
                const Circuit part = extract_coefficient(*c, "x1", k, d);
                parts += expand(part).with_variables(rest);
            }
            CHECK(got == parts);
        }
    }
}
