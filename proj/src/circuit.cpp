#include "newton_degen/circuit.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>

namespace nd {

// ---- Circuit ---------------------------------------------------------------

std::optional<std::size_t> Circuit::find_variable(std::string_view name) const {
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables_.begin());
}

std::vector<bool> Circuit::live_gates() const {
    std::vector<bool> live(gates_.size(), false);
    if (gates_.empty()) return live;
    live[output_] = true;
    for (std::size_t i = gates_.size(); i-- > 0;) {
        if (!live[i]) continue;
        const Gate& g = gates_[i];
        if (g.kind == GateKind::add || g.kind == GateKind::mul) {
            live[g.lhs] = true;
            live[g.rhs] = true;
        }
    }
    return live;
}

bool Circuit::operator==(const Circuit& other) const {
    if (gates_.size() != other.gates_.size() || output_ != other.output_ ||
        variables_ != other.variables_ || annotations_ != other.annotations_) {
        return false;
    }
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& a = gates_[i];
        const Gate& b = other.gates_[i];
        if (a.kind != b.kind) return false;
        if (a.kind == GateKind::constant) {
            if (constant_value(a) != other.constant_value(b)) return false;
        } else if (a != b) {
            return false;
        }
    }
    return true;
}

// ---- CircuitBuilder --------------------------------------------------------

GateId CircuitBuilder::push(Gate gate) {
    circuit_.gates_.push_back(gate);
    return static_cast<GateId>(circuit_.gates_.size() - 1);
}

void CircuitBuilder::check_operand(GateId id) const {
    if (id >= circuit_.gates_.size()) {
        fail(ErrorKind::invalid_argument, "operand g" + std::to_string(id + 1) + " does not exist yet");
    }
}

bool CircuitBuilder::has_variable(std::string_view name) const {
    return circuit_.find_variable(name).has_value();
}

GateId CircuitBuilder::variable(std::string_view name) {
    if (name.empty()) fail(ErrorKind::invalid_argument, "empty variable name");
    if (const auto existing = circuit_.find_variable(name)) {
        if (mode_ == Mode::verbatim) {
            fail(ErrorKind::invalid_argument, "duplicate variable '" + std::string(name) + "'");
        }
        return circuit_.input_gates_[*existing];
    }
    const auto index = static_cast<std::uint32_t>(circuit_.variables_.size());
    circuit_.variables_.emplace_back(name);
    const GateId id = push({GateKind::input, index, 0});
    circuit_.input_gates_.push_back(id);
    return id;
}

GateId CircuitBuilder::constant(const Rational& value) {
    if (mode_ == Mode::folding) {
        if (const auto it = constant_gates_.find(value); it != constant_gates_.end()) return it->second;
    }
    const auto index = static_cast<std::uint32_t>(circuit_.constants_.size());
    circuit_.constants_.push_back(value);
    const GateId id = push({GateKind::constant, index, 0});
    if (mode_ == Mode::folding) constant_gates_.emplace(value, id);
    return id;
}

std::optional<Rational> CircuitBuilder::constant_of(GateId id) const {
    check_operand(id);
    const Gate& g = circuit_.gates_[id];
    if (g.kind != GateKind::constant) return std::nullopt;
    return circuit_.constants_[g.lhs];
}

GateId CircuitBuilder::add(GateId lhs, GateId rhs) {
    check_operand(lhs);
    check_operand(rhs);
    if (mode_ == Mode::folding) {
        const auto a = constant_of(lhs);
        const auto b = constant_of(rhs);
        if (a && b) return constant(*a + *b);
        if (a && *a == 0) return rhs;
        if (b && *b == 0) return lhs;
    }
    return push({GateKind::add, lhs, rhs});
}

GateId CircuitBuilder::mul(GateId lhs, GateId rhs) {
    check_operand(lhs);
    check_operand(rhs);
    if (mode_ == Mode::folding) {
        const auto a = constant_of(lhs);
        const auto b = constant_of(rhs);
        if (a && b) return constant(*a * *b);
        if ((a && *a == 0) || (b && *b == 0)) return constant(Rational(0));
        if (a && *a == 1) return rhs;
        if (b && *b == 1) return lhs;
    }
    return push({GateKind::mul, lhs, rhs});
}

GateId CircuitBuilder::neg(GateId operand) { return mul(constant(Rational(-1)), operand); }

GateId CircuitBuilder::sub(GateId lhs, GateId rhs) { return add(lhs, neg(rhs)); }

GateId CircuitBuilder::sum(std::span<const GateId> terms) {
    if (terms.empty()) return constant(Rational(0));
    GateId acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) acc = add(acc, terms[i]);
    return acc;
}

GateId CircuitBuilder::product(std::span<const GateId> factors) {
    if (factors.empty()) return constant(Rational(1));
    GateId acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i]);
    return acc;
}

GateId CircuitBuilder::power(GateId base, std::uint64_t exponent) {
    GateId result = constant(Rational(1));
    GateId square = base;
    while (exponent > 0) {
        if (exponent & 1U) result = mul(result, square);
        exponent >>= 1U;
        if (exponent > 0) square = mul(square, square);
    }
    return result;
}

GateId CircuitBuilder::import(const Circuit& source, std::span<const GateId> input_map) {
    if (input_map.size() != source.variables().size()) {
        fail(ErrorKind::invalid_argument, "import: input map does not cover the source variables");
    }
    const auto live = source.live_gates();
    std::vector<GateId> image(source.size(), 0);
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (!live[i]) continue;
        const Gate& g = source.gate(static_cast<GateId>(i));
        switch (g.kind) {
        case GateKind::input: image[i] = input_map[g.lhs]; break;
        case GateKind::constant: image[i] = constant(source.constant_value(g)); break;
        case GateKind::add: image[i] = add(image[g.lhs], image[g.rhs]); break;
        case GateKind::mul: image[i] = mul(image[g.lhs], image[g.rhs]); break;
        }
    }
    if (source.size() == 0) fail(ErrorKind::invalid_argument, "import: empty source circuit");
    return image[source.output()];
}

Circuit CircuitBuilder::finish(GateId output) && {
    check_operand(output);
    circuit_.output_ = output;
    return std::move(circuit_);
}

// ---- evaluation ------------------------------------------------------------

Rational evaluate(const Circuit& circuit, std::span<const Rational> values) {
    if (values.size() != circuit.variables().size()) {
        fail(ErrorKind::invalid_argument, "evaluate: expected " + std::to_string(circuit.variables().size()) +
                                              " values, got " + std::to_string(values.size()));
    }
    const auto live = circuit.live_gates();
    std::vector<Rational> value(circuit.size());
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (!live[i]) continue;
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        switch (g.kind) {
        case GateKind::input: value[i] = values[g.lhs]; break;
        case GateKind::constant: value[i] = circuit.constant_value(g); break;
        case GateKind::add: value[i] = value[g.lhs] + value[g.rhs]; break;
        case GateKind::mul: value[i] = value[g.lhs] * value[g.rhs]; break;
        }
    }
    return value[circuit.output()];
}

Rational evaluate(const Circuit& circuit, const std::map<std::string, Rational>& assignment) {
    std::vector<Rational> values;
    values.reserve(circuit.variables().size());
    for (const auto& name : circuit.variables()) {
        const auto it = assignment.find(name);
        if (it == assignment.end()) fail(ErrorKind::invalid_argument, "no value for variable '" + name + "'");
        values.push_back(it->second);
    }
    return evaluate(circuit, values);
}

// ---- structural predicates -------------------------------------------------

bool is_monotone(const Circuit& circuit) {
    return std::all_of(circuit.gates().begin(), circuit.gates().end(), [&](const Gate& g) {
        return g.kind != GateKind::constant || circuit.constant_value(g) >= 0;
    });
}

// A multiplication gate is fine when one operand roots a subcircuit whose
// internal (non-leaf) gates are used only inside that subcircuit, the root
// itself being used exactly once. Leaves may be shared freely.
bool is_weakly_skew(const Circuit& circuit) {
    const auto& gates = circuit.gates();
    const auto live = circuit.live_gates();
    const std::size_t n = gates.size();

    std::vector<std::vector<GateId>> users(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!live[i]) continue;
        const Gate& g = gates[i];
        if (g.kind == GateKind::add || g.kind == GateKind::mul) {
            users[g.lhs].push_back(static_cast<GateId>(i));
            users[g.rhs].push_back(static_cast<GateId>(i));
        }
    }
    const auto is_leaf = [&](GateId id) {
        return gates[id].kind == GateKind::input || gates[id].kind == GateKind::constant;
    };

    std::vector<int> mark(n, -1);
    const auto private_operand = [&](GateId root, GateId parent, int stamp) {
        if (is_leaf(root)) return true;
        if (users[root].size() != 1 || users[root].front() != parent) return false;
        std::vector<GateId> stack{root};
        std::vector<GateId> members;
        mark[root] = stamp;
        while (!stack.empty()) {
            const GateId v = stack.back();
            stack.pop_back();
            members.push_back(v);
            const Gate& g = gates[v];
            for (GateId child : {g.lhs, g.rhs}) {
                if (is_leaf(child) || mark[child] == stamp) continue;
                mark[child] = stamp;
                stack.push_back(child);
            }
        }
        for (GateId v : members) {
            if (v == root) continue;
            for (GateId user : users[v]) {
                if (mark[user] != stamp) return false;
            }
        }
        return true;
    };

    int stamp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!live[i] || gates[i].kind != GateKind::mul) continue;
        const Gate& g = gates[i];
        const auto self = static_cast<GateId>(i);
        if (private_operand(g.lhs, self, stamp++)) continue;
        if (private_operand(g.rhs, self, stamp++)) continue;
        return false;
    }
    return true;
}

std::vector<DegreeInterval> degree_intervals(const Circuit& circuit, std::size_t variable) {
    std::vector<DegreeInterval> out(circuit.size());
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        switch (g.kind) {
        case GateKind::input:
            out[i] = g.lhs == variable ? DegreeInterval{1, 1} : DegreeInterval{0, 0};
            break;
        case GateKind::constant: out[i] = {0, 0}; break;
        case GateKind::add:
            out[i] = {std::min(out[g.lhs].lo, out[g.rhs].lo), std::max(out[g.lhs].hi, out[g.rhs].hi)};
            break;
        case GateKind::mul:
            out[i] = {out[g.lhs].lo + out[g.rhs].lo, out[g.lhs].hi + out[g.rhs].hi};
            break;
        }
    }
    return out;
}

DegreeInterval degree_interval(const Circuit& circuit, std::string_view param) {
    const auto index = circuit.find_variable(param);
    if (!index) fail(ErrorKind::invalid_argument, "'" + std::string(param) + "' is not a variable of the circuit");
    return degree_intervals(circuit, *index)[circuit.output()];
}

// ---- substitution ----------------------------------------------------------

Circuit substitute_linear(const Circuit& circuit, const std::vector<std::string>& new_variables,
                          const std::map<std::string, AffineForm>& map) {
    CircuitBuilder builder;
    for (const auto& name : new_variables) builder.variable(name);

    for (const auto& [name, form] : map) {
        if (!circuit.find_variable(name)) {
            fail(ErrorKind::invalid_argument, "substitution for unknown variable '" + name + "'");
        }
        for (const auto& term : form.terms) {
            if (!builder.has_variable(term.first)) {
                fail(ErrorKind::invalid_argument, "affine form uses undeclared variable '" + term.first + "'");
            }
        }
    }

    std::vector<GateId> inputs;
    inputs.reserve(circuit.variables().size());
    for (const auto& name : circuit.variables()) {
        const auto it = map.find(name);
        if (it == map.end()) {
            if (!builder.has_variable(name)) {
                fail(ErrorKind::invalid_argument, "no substitution for '" + name + "' and no new variable of that name");
            }
            inputs.push_back(builder.variable(name));
            continue;
        }
        GateId acc = builder.constant(it->second.constant);
        for (const auto& [target, coeff] : it->second.terms) {
            acc = builder.add(acc, builder.mul(builder.constant(coeff), builder.variable(target)));
        }
        inputs.push_back(acc);
    }
    const GateId out = builder.import(circuit, inputs);
    return std::move(builder).finish(out);
}

} // namespace nd
