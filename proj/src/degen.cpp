#include "newton_degen/degen.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nd {

namespace {

void check_direction(const Circuit& circuit, std::span<const std::int64_t> direction) {
    if (direction.size() != circuit.variables().size()) {
        fail(ErrorKind::invalid_argument, "direction has length " + std::to_string(direction.size()) + " but the circuit has " +
                                              std::to_string(circuit.variables().size()) + " variables");
    }
}

// Declares every variable of `circuit` except `skip`, in order.
void declare_variables(CircuitBuilder& builder, const Circuit& circuit, std::string_view skip = {}) {
    for (const auto& name : circuit.variables()) {
        if (name != skip) builder.variable(name);
    }
}

Circuit zero_circuit(const Circuit& like, std::string_view skip = {}) {
    CircuitBuilder builder;
    declare_variables(builder, like, skip);
    const GateId zero = builder.constant(Rational(0));
    return std::move(builder).finish(zero);
}

std::vector<TropicalValue> tropical_values(const Circuit& circuit, std::span<const std::int64_t> direction) {
    check_direction(circuit, direction);
    std::vector<TropicalValue> value(circuit.size());
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        switch (g.kind) {
        case GateKind::input: value[i] = direction[g.lhs]; break;
        case GateKind::constant:
            value[i] = circuit.constant_value(g) == 0 ? TropicalValue{} : TropicalValue{0};
            break;
        case GateKind::add: {
            const auto& u = value[g.lhs];
            const auto& w = value[g.rhs];
            value[i] = !u ? w : !w ? u : TropicalValue{std::min(*u, *w)};
            break;
        }
        case GateKind::mul: {
            const auto& u = value[g.lhs];
            const auto& w = value[g.rhs];
            value[i] = (u && w) ? TropicalValue{*u + *w} : TropicalValue{};
            break;
        }
        }
    }
    return value;
}

// base^k as a fresh chain of multiplications by the base. Nothing in the
// chain is shared, so every use stays a private operand.
GateId fresh_power(CircuitBuilder& builder, GateId base, std::int64_t k) {
    GateId out = builder.constant(Rational(1));
    for (std::int64_t i = 0; i < k; ++i) out = builder.mul(base, out);
    return out;
}

// Coefficients of prod_{m=1..D} (t - m), lowest degree first.
std::vector<mpz_class> node_polynomial(std::int64_t nodes) {
    std::vector<mpz_class> p{1};
    for (std::int64_t m = 1; m <= nodes; ++m) {
        std::vector<mpz_class> next(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= p[i] * m;
        }
        p = std::move(next);
    }
    return p;
}

Rational int_power(const Rational& base, std::int64_t exponent) {
    Rational result(1);
    const Rational b = exponent < 0 ? Rational(1) / base : base;
    for (std::int64_t i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) result *= b;
    return result;
}

} // namespace

std::string fresh_parameter(const Circuit& circuit) {
    if (!circuit.find_variable("t")) return "t";
    for (std::size_t i = 1;; ++i) {
        std::string name = "t" + std::to_string(i);
        if (!circuit.find_variable(name)) return name;
    }
}

TropicalValue tropical_bound(const Circuit& circuit, std::span<const std::int64_t> direction) {
    return tropical_values(circuit, direction)[circuit.output()];
}

Circuit monotone_newton_degenerate(const Circuit& circuit, std::span<const std::int64_t> direction) {
    if (!is_monotone(circuit)) fail(ErrorKind::invalid_argument, "monotone degeneration needs a circuit without negative constants");
    const auto value = tropical_values(circuit, direction);
    if (!value[circuit.output()]) return zero_circuit(circuit);

    // Mark, top down, the gates the face actually uses.
    std::vector<bool> keep(circuit.size(), false);
    keep[circuit.output()] = true;
    for (std::size_t i = circuit.size(); i-- > 0;) {
        if (!keep[i]) continue;
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        if (g.kind == GateKind::mul) {
            keep[g.lhs] = keep[g.rhs] = true;
        } else if (g.kind == GateKind::add) {
            if (value[g.lhs] == value[i]) keep[g.lhs] = true;
            if (value[g.rhs] == value[i]) keep[g.rhs] = true;
        }
    }

    CircuitBuilder builder;
    declare_variables(builder, circuit);
    std::vector<GateId> image(circuit.size(), 0);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (!keep[i]) continue;
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        switch (g.kind) {
        case GateKind::input: image[i] = builder.variable(circuit.variables()[g.lhs]); break;
        case GateKind::constant: image[i] = builder.constant(circuit.constant_value(g)); break;
        case GateKind::mul: image[i] = builder.mul(image[g.lhs], image[g.rhs]); break;
        case GateKind::add:
            if (keep[g.lhs] && keep[g.rhs] && value[g.lhs] == value[i] && value[g.rhs] == value[i]) {
                image[i] = builder.add(image[g.lhs], image[g.rhs]);
            } else {
                image[i] = image[value[g.lhs] == value[i] ? g.lhs : g.rhs];
            }
            break;
        }
    }
    Circuit out = std::move(builder).finish(image[circuit.output()]);
    for (const auto& [key, val] : circuit.annotations()) out.set_annotation(key, val);
    return out;
}

ParamSubstitution one_param_substitute(const Circuit& circuit, std::span<const std::int64_t> direction,
                                       std::string_view param) {
    check_direction(circuit, direction);
    if (circuit.find_variable(param)) {
        fail(ErrorKind::invalid_argument, "parameter name '" + std::string(param) + "' is already a variable");
    }
    CircuitBuilder builder;
    declare_variables(builder, circuit);
    const GateId t = builder.variable(param);

    // image[v] = t^shift[v] * (gate v after substitution). Inputs with a
    // positive exponent get a fresh t^a * x at every use, and padding powers
    // are never shared either, so a weakly skew input stays weakly skew.
    const auto live = circuit.live_gates();
    std::vector<GateId> image(circuit.size(), 0);
    std::vector<std::int64_t> shift(circuit.size(), 0);
    const auto use = [&](GateId v) {
        const Gate& g = circuit.gate(v);
        if (g.kind != GateKind::input || direction[g.lhs] <= 0) return image[v];
        return builder.mul(fresh_power(builder, t, direction[g.lhs]), image[v]);
    };
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (!live[i]) continue;
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        switch (g.kind) {
        case GateKind::input: {
            image[i] = builder.variable(circuit.variables()[g.lhs]);
            shift[i] = std::max<std::int64_t>(0, -direction[g.lhs]);
            break;
        }
        case GateKind::constant: image[i] = builder.constant(circuit.constant_value(g)); break;
        case GateKind::mul:
            image[i] = builder.mul(use(g.lhs), use(g.rhs));
            shift[i] = shift[g.lhs] + shift[g.rhs];
            break;
        case GateKind::add: {
            const std::int64_t s = std::max(shift[g.lhs], shift[g.rhs]);
            image[i] = builder.add(builder.mul(fresh_power(builder, t, s - shift[g.lhs]), use(g.lhs)),
                                   builder.mul(fresh_power(builder, t, s - shift[g.rhs]), use(g.rhs)));
            shift[i] = s;
            break;
        }
        }
    }
    const GateId root = use(circuit.output());
    ParamSubstitution out{std::move(builder).finish(root), shift[circuit.output()]};
    for (const auto& [key, val] : circuit.annotations()) out.circuit.set_annotation(key, val);
    out.circuit.set_annotation("param", std::string(param));
    out.circuit.set_annotation("param-offset", std::to_string(out.offset));
    return out;
}

Circuit extract_coefficient(const Circuit& circuit, std::string_view param, std::int64_t k,
                            const DegreeInterval& interval, std::int64_t max_nodes) {
    const auto param_index = circuit.find_variable(param);
    if (!param_index) fail(ErrorKind::invalid_argument, "'" + std::string(param) + "' is not a variable of the circuit");
    if (interval.lo > interval.hi) fail(ErrorKind::invalid_argument, "empty degree interval");
    if (k < interval.lo || k > interval.hi) {
        fail(ErrorKind::invalid_argument, "exponent " + std::to_string(k) + " lies outside the degree interval [" +
                                              std::to_string(interval.lo) + "," + std::to_string(interval.hi) + "]");
    }
    const std::int64_t nodes = interval.width();
    if (nodes > max_nodes) {
        fail(ErrorKind::budget_exceeded, "interpolation needs " + std::to_string(nodes) + " nodes, budget is " +
                                             std::to_string(max_nodes));
    }

    // [t^r] of L_j(t) = [t^r] (P(t) / (t - j)) / prod_{m != j} (j - m), with
    // P = prod (t - m). Synthetic division from the top down to degree r.
    const auto p = node_polynomial(nodes);
    const auto r = static_cast<std::size_t>(k - interval.lo);
    std::vector<mpz_class> factorial(static_cast<std::size_t>(nodes) + 1, 1);
    for (std::size_t i = 1; i < factorial.size(); ++i) factorial[i] = factorial[i - 1] * static_cast<unsigned long>(i);

    CircuitBuilder builder;
    declare_variables(builder, circuit, param);
    std::vector<GateId> inputs(circuit.variables().size());
    for (std::size_t v = 0; v < inputs.size(); ++v) {
        if (v != *param_index) inputs[v] = builder.variable(circuit.variables()[v]);
    }

    std::vector<GateId> terms;
    for (std::int64_t j = 1; j <= nodes; ++j) {
        mpz_class q = p[static_cast<std::size_t>(nodes)];
        for (auto i = static_cast<std::size_t>(nodes) - 1; i > r; --i) q = p[i] + q * j;
        mpz_class denominator = factorial[static_cast<std::size_t>(j - 1)] * factorial[static_cast<std::size_t>(nodes - j)];
        if ((nodes - j) % 2 != 0) denominator = -denominator;
        Rational weight(q, denominator);
        weight.canonicalize();
        weight /= int_power(Rational(j), interval.lo);
        if (weight == 0) continue;
        inputs[*param_index] = builder.constant(Rational(j));
        const GateId copy = builder.import(circuit, inputs);
        terms.push_back(builder.mul(builder.constant(weight), copy));
    }
    const GateId out = builder.sum(terms);
    return std::move(builder).finish(out);
}

bool is_identically_zero(const Circuit& circuit, std::size_t term_limit) {
    const std::size_t m = circuit.variables().size();
    {
        // A nonzero value at any point settles it.
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> pick(-1000, 1000);
        std::vector<Rational> point(m);
        for (auto& x : point) x = Rational(pick(rng), 7);
        if (evaluate(circuit, point) != 0) return false;
    }
    try {
        return expand(circuit, term_limit).is_zero();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::budget_exceeded || m > 4) throw;
    }
    // Individual degree <= d_i and zero on {0..d_i} in every coordinate
    // forces the zero polynomial.
    std::vector<std::int64_t> degree(m);
    std::uint64_t grid = 1;
    for (std::size_t v = 0; v < m; ++v) {
        degree[v] = std::max<std::int64_t>(degree_intervals(circuit, v)[circuit.output()].hi, 0);
        grid *= static_cast<std::uint64_t>(degree[v] + 1);
        if (grid > 10'000'000) fail(ErrorKind::budget_exceeded, "zero test: evaluation grid too large");
    }
    std::vector<Rational> point(m, Rational(0));
    std::vector<std::int64_t> counter(m, 0);
    for (std::uint64_t n = 0; n < grid; ++n) {
        if (evaluate(circuit, point) != 0) return false;
        for (std::size_t v = 0; v < m; ++v) {
            if (++counter[v] <= degree[v]) {
                point[v] = Rational(counter[v]);
                break;
            }
            counter[v] = 0;
            point[v] = 0;
        }
    }
    return true;
}

Degeneration newton_degenerate_detailed(const Circuit& circuit, std::span<const std::int64_t> direction,
                                        const DegenOptions& options) {
    check_direction(circuit, direction);
    const std::string param = fresh_parameter(circuit);
    const auto substituted = one_param_substitute(circuit, direction, param);
    const DegreeInterval interval = degree_interval(substituted.circuit, param);

    if (options.b_hint) {
        const std::int64_t k = *options.b_hint + substituted.offset;
        if (k < interval.lo || k > interval.hi) return {zero_circuit(circuit), *options.b_hint};
        return {extract_coefficient(substituted.circuit, param, k, interval, options.max_nodes), *options.b_hint};
    }

    const auto start = tropical_bound(circuit, direction);
    if (!start) fail(ErrorKind::zero_polynomial, "the circuit computes the zero polynomial");
    for (std::int64_t k = std::max(*start + substituted.offset, interval.lo); k <= interval.hi; ++k) {
        Circuit candidate = extract_coefficient(substituted.circuit, param, k, interval, options.max_nodes);
        if (!is_identically_zero(candidate, options.term_limit)) return {std::move(candidate), k - substituted.offset};
    }
    fail(ErrorKind::zero_polynomial, "the circuit computes the zero polynomial");
}

Circuit newton_degenerate(const Circuit& circuit, std::span<const std::int64_t> direction, const DegenOptions& options) {
    return newton_degenerate_detailed(circuit, direction, options).circuit;
}

Circuit face_restrict_by_equalities(const Circuit& circuit, const EqualitySet& rows, const DegenOptions& options) {
    const std::size_t m = circuit.variables().size();
    std::vector<std::int64_t> weight(m, 0);
    std::int64_t target = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].coeffs.size() != m) {
            fail(ErrorKind::invalid_argument, "equality row " + std::to_string(r + 1) + " has length " +
                                                  std::to_string(rows[r].coeffs.size()) + ", expected " + std::to_string(m));
        }
        for (std::size_t j = 0; j < m; ++j) weight[j] += rows[r].coeffs[j];
        target += rows[r].rhs;
    }
    if (options.check_validity) {
        try {
            restrict_by_equalities(expand(circuit, options.term_limit), rows);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::budget_exceeded) throw;
        }
    }
    const std::string param = fresh_parameter(circuit);
    const auto substituted = one_param_substitute(circuit, weight, param);
    const DegreeInterval interval = degree_interval(substituted.circuit, param);
    const std::int64_t k = target + substituted.offset;
    if (k < interval.lo || k > interval.hi) return zero_circuit(circuit);
    return extract_coefficient(substituted.circuit, param, k, interval, options.max_nodes);
}

} // namespace nd
