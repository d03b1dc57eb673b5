#pragma once

#include "newton_degen/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nd {

/// Exponent vector of a monomial, one entry per ambient variable.
using Exponent = std::vector<std::int32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered lexicographically by exponent vector and no
/// zero coefficient is ever stored, so equality is structural.
class SparsePoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    SparsePoly() = default;
    explicit SparsePoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

    static SparsePoly constant(std::vector<std::string> variables, const Rational& value);
    static SparsePoly variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t num_variables() const noexcept { return variables_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds `coeff * x^e`, dropping the term if it cancels.
    void add_term(const Exponent& exponent, const Rational& coeff);
    Rational coefficient(const Exponent& exponent) const;
    std::vector<Exponent> support() const;

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly& operator*=(const Rational& scalar);
    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
    friend SparsePoly operator*(SparsePoly lhs, const Rational& scalar) { return lhs *= scalar; }

    bool operator==(const SparsePoly& other) const = default;

    /// Re-expresses the polynomial over another variable order, matching by
    /// name. Variables absent from `variables` must not occur in any term.
    SparsePoly with_variables(const std::vector<std::string>& variables) const;

    Rational evaluate(std::span<const Rational> values) const;
    std::int64_t total_degree() const;

private:
    void require_same_variables(const SparsePoly& other) const;

    std::vector<std::string> variables_;
    TermMap terms_;
};

/// Line format: one `<coeff> <name>^<e>*...` per term, ascending
/// lexicographic exponent order, constant term as `<coeff> 1`.
std::string format_terms(const SparsePoly& poly);

/// Parses the line format. When `variables` is empty the variable order is the
/// order of first appearance.
SparsePoly parse_terms(std::string_view text, std::vector<std::string> variables = {});

/// Human-readable sum, leading (lexicographically largest) term first, e.g.
/// `x11*x22 + x12*x21`. The zero polynomial prints as `0`.
std::string to_string(const SparsePoly& poly);

} // namespace nd
