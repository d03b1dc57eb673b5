#pragma once

// Brute-force polynomials computed without circuits, used to cross-check the
// constructions. Everything here is exponential and meant for tiny inputs.

#include "newton_degen/determinant.hpp"
#include "newton_degen/generators.hpp"
#include "newton_degen/graph.hpp"
#include "newton_degen/sparse_poly.hpp"

#include <vector>

namespace nd::reference {

/// Sum over all permutations.
SparsePoly leibniz_determinant(const SymbolicMatrix& m);

/// Sum of x^(content) over semistandard tableaux of shape alpha with entries
/// in 1..n, over x1..xn.
SparsePoly schur_tableaux(const Partition& alpha, int n);

/// Sum over l-subsets, over x1..xn.
SparsePoly elementary_symmetric(int n, int l);

/// perm of the n x n matrix (x_ij) over x11..xnn.
SparsePoly permanent(int n);

/// Signed sum over the perfect matchings that avoid `deleted` and cross the
/// border of every odd set exactly once, over the edge variables.
SparsePoly filtered_matching_sum(const Graph& g, const std::vector<std::vector<int>>& odd_sets,
                                 const std::vector<Edge>& deleted);

/// Tr(X_w1 ... X_wl) by multiplying polynomial matrices, over the variables
/// of trace_monomial_circuit.
SparsePoly trace_monomial(const std::vector<int>& word, int n);

} // namespace nd::reference
