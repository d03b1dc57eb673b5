#pragma once

#include "newton_degen/circuit.hpp"
#include "newton_degen/polyoracle.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace nd {

/// Min-plus value of a gate; nullopt stands for +infinity (the zero constant).
using TropicalValue = std::optional<std::int64_t>;

/// Min-plus shadow of the circuit along `direction`. A lower bound for the
/// minimum of <a,e> over the true support, exact when the circuit is monotone.
TropicalValue tropical_bound(const Circuit& circuit, std::span<const std::int64_t> direction);

/// Gate-by-gate face restriction of a monotone circuit. Add gates keep only
/// their minimizing children, so the result never has more gates than the
/// input and stays weakly skew when the input is.
Circuit monotone_newton_degenerate(const Circuit& circuit, std::span<const std::int64_t> direction);

struct ParamSubstitution {
    Circuit circuit;
    /// The result equals t^offset * c(t^a1 x1, ..., t^am xm).
    std::int64_t offset = 0;
};

/// Substitutes x_j -> t^{a_j} x_j. Negative exponents are cleared by a
/// per-gate shift, so the circuit stays polynomial in t; the total shift at
/// the output is returned and also stored as the `param-offset` annotation.
ParamSubstitution one_param_substitute(const Circuit& circuit, std::span<const std::int64_t> direction,
                                       std::string_view param);

inline constexpr std::int64_t default_max_nodes = 512;

/// Coefficient of param^k, built from exact Lagrange interpolation at
/// param = 1..D where D is the width of `interval`. The result is over the
/// remaining variables, in their original order.
Circuit extract_coefficient(const Circuit& circuit, std::string_view param, std::int64_t k,
                            const DegreeInterval& interval, std::int64_t max_nodes = default_max_nodes);

struct DegenOptions {
    std::size_t term_limit = default_term_limit;
    std::int64_t max_nodes = default_max_nodes;
    /// Skips the search for the face value when set.
    std::optional<std::int64_t> b_hint;
    /// face_restrict_by_equalities only: verify the rows against the
    /// expansion when it fits the term budget.
    bool check_validity = false;
};

struct Degeneration {
    Circuit circuit;
    std::int64_t b = 0; // min <a,e> over the support
};

/// General face restriction along a direction: substitute, then extract the
/// lowest nonvanishing coefficient, ascending from the tropical bound.
Degeneration newton_degenerate_detailed(const Circuit& circuit, std::span<const std::int64_t> direction,
                                        const DegenOptions& options = {});
Circuit newton_degenerate(const Circuit& circuit, std::span<const std::int64_t> direction,
                          const DegenOptions& options = {});

/// Face cut out by tight supporting equalities, via the weight sum of the rows.
Circuit face_restrict_by_equalities(const Circuit& circuit, const EqualitySet& rows, const DegenOptions& options = {});

/// Exact zero test: a fixed evaluation point first, then expansion, then a
/// full evaluation grid for at most four variables.
bool is_identically_zero(const Circuit& circuit, std::size_t term_limit = default_term_limit);

/// A name not among the circuit's variables, `t` when possible.
std::string fresh_parameter(const Circuit& circuit);

} // namespace nd
