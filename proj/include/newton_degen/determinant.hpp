#pragma once

#include "newton_degen/circuit.hpp"
#include "newton_degen/sparse_poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nd {

/// Matrix with polynomial entries over named variables, row-major. Most
/// constructions only need affine entries; the subspace-quiver matrix with
/// symbolic auxiliary variables has products w*v.
struct SymbolicMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::string> variables;
    std::vector<SparsePoly> entries;

    SymbolicMatrix() = default;
    SymbolicMatrix(std::size_t r, std::size_t c, std::vector<std::string> vars);

    SparsePoly& at(std::size_t i, std::size_t j) { return entries.at(i * cols + j); }
    const SparsePoly& at(std::size_t i, std::size_t j) const { return entries.at(i * cols + j); }
    bool is_zero(std::size_t i, std::size_t j) const { return at(i, j).is_zero(); }

    std::size_t variable_index(std::string_view name) const;
    /// Adds coeff * (product of the named variables) to entry (i, j).
    void add(std::size_t i, std::size_t j, const Rational& coeff, std::initializer_list<std::string_view> factors);
};

/// Emits fresh gates for the polynomial (inputs and constants are shared).
/// Variables are looked up by name in the builder.
GateId emit_poly(CircuitBuilder& builder, const SparsePoly& poly);

/// Called once per use of entry (i, j); nullopt marks a structural zero.
/// Returning a fresh subcircuit each time keeps the determinant weakly skew.
using EntryFactory = std::function<std::optional<GateId>(CircuitBuilder&, std::size_t, std::size_t)>;

/// Division-free determinant by dynamic programming over clow sequences
/// (closed walks whose start vertex is their smallest vertex). O(n^4)
/// multiplications, each with a freshly built entry as one operand.
GateId build_determinant(CircuitBuilder& builder, std::size_t n, const EntryFactory& entry);

/// Weakly skew circuit for det(M) over M.variables; 0x0 gives the constant 1.
Circuit determinant_circuit(const SymbolicMatrix& matrix);

/// One row per line, entries separated by ` | `.
std::string format_matrix(const SymbolicMatrix& matrix);

} // namespace nd
