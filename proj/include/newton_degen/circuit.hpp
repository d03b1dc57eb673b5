#pragma once

#include "newton_degen/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nd {

using GateId = std::uint32_t;

enum class GateKind : std::uint8_t { input, constant, add, mul };

/// One node of a circuit. For `input` gates `lhs` is the variable index, for
/// `constant` gates it indexes the circuit's constant pool; `add`/`mul` gates
/// refer to two strictly earlier gates.
struct Gate {
    GateKind kind = GateKind::constant;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Single-output arithmetic circuit over the rationals.
///
/// Gates are stored in topological order. Every declared variable owns exactly
/// one input gate, and variables are numbered in the order their input gates
/// appear. Instances are immutable once built; use CircuitBuilder to make one.
class Circuit {
public:
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    const Gate& gate(GateId id) const { return gates_.at(id); }
    std::size_t size() const noexcept { return gates_.size(); }
    GateId output() const noexcept { return output_; }

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::optional<std::size_t> find_variable(std::string_view name) const;
    GateId input_gate(std::size_t variable) const { return input_gates_.at(variable); }

    const Rational& constant_value(const Gate& gate) const { return constants_.at(gate.lhs); }

    /// Free-form key/value metadata, serialized as `# @key value` lines.
    const std::map<std::string, std::string>& annotations() const noexcept { return annotations_; }
    void set_annotation(const std::string& key, const std::string& value) { annotations_[key] = value; }

    /// Marks the gates the output depends on.
    std::vector<bool> live_gates() const;

    /// Gate-for-gate structural equality (constants compared by value).
    bool operator==(const Circuit& other) const;

private:
    friend class CircuitBuilder;

    std::vector<Gate> gates_;
    std::vector<Rational> constants_;
    std::vector<std::string> variables_;
    std::vector<GateId> input_gates_;
    GateId output_ = 0;
    std::map<std::string, std::string> annotations_;
};

/// Incremental construction of a Circuit.
///
/// In `folding` mode constants are shared and trivial operations are simplified
/// on the fly (constant folding, `x+0`, `x*1`, `x*0`). `verbatim` mode records
/// exactly what it is told, which is what the parser needs for round-tripping.
class CircuitBuilder {
public:
    enum class Mode { folding, verbatim };

    explicit CircuitBuilder(Mode mode = Mode::folding) : mode_(mode) {}

    /// Returns the input gate of `name`, declaring the variable on first use.
    /// In verbatim mode redeclaring a variable is an error.
    GateId variable(std::string_view name);
    bool has_variable(std::string_view name) const;

    GateId constant(const Rational& value);
    GateId add(GateId lhs, GateId rhs);
    GateId mul(GateId lhs, GateId rhs);
    GateId neg(GateId operand);
    GateId sub(GateId lhs, GateId rhs);

    /// Left folds; an empty span yields the constant 0 (resp. 1).
    GateId sum(std::span<const GateId> terms);
    GateId product(std::span<const GateId> factors);
    GateId power(GateId base, std::uint64_t exponent);

    /// Copies the live part of `source`, wiring its variable i to
    /// `input_map[i]`. Returns the image of the source output.
    GateId import(const Circuit& source, std::span<const GateId> input_map);

    std::optional<Rational> constant_of(GateId id) const;
    std::size_t size() const noexcept { return circuit_.gates_.size(); }

    Circuit finish(GateId output) &&;

private:
    GateId push(Gate gate);
    void check_operand(GateId id) const;

    Mode mode_;
    Circuit circuit_;
    std::map<Rational, GateId> constant_gates_;
};

/// Per-gate syntactic degree bounds in one designated variable. Sound (the
/// true degrees lie inside) but not tight.
struct DegreeInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::int64_t width() const { return hi - lo + 1; }
    friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;
};

// ---- text format -----------------------------------------------------------

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

// ---- evaluation and structure ---------------------------------------------

Rational evaluate(const Circuit& circuit, const std::map<std::string, Rational>& assignment);
/// Positional form: values[i] is the value of variable i.
Rational evaluate(const Circuit& circuit, std::span<const Rational> values);

bool is_monotone(const Circuit& circuit);
bool is_weakly_skew(const Circuit& circuit);

DegreeInterval degree_interval(const Circuit& circuit, std::string_view param);
std::vector<DegreeInterval> degree_intervals(const Circuit& circuit, std::size_t variable);

/// Affine form `constant + sum coeff * name` over the target variable set.
struct AffineForm {
    Rational constant;
    std::vector<std::pair<std::string, Rational>> terms;
};

/// Replaces each old variable by an affine form over `new_variables`.
/// Variables missing from `map` are sent to the identically named new
/// variable, which must then exist.
Circuit substitute_linear(const Circuit& circuit, const std::vector<std::string>& new_variables,
                          const std::map<std::string, AffineForm>& map);

} // namespace nd
