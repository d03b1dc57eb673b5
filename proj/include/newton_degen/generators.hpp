#pragma once

#include "newton_degen/circuit.hpp"
#include "newton_degen/degen.hpp"
#include "newton_degen/determinant.hpp"
#include "newton_degen/graph.hpp"
#include "newton_degen/polyoracle.hpp"
#include "newton_degen/sparse_poly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace nd {

struct MatrixCircuit {
    SymbolicMatrix matrix;
    Circuit circuit;
};

// ---- graphs, Pfaffians, matchings ------------------------------------------

/// T(i,j) = x_e and T(j,i) = -x_e for every edge e = {i<j}.
SymbolicMatrix tutte_matrix(const Graph& g);
MatrixCircuit tutte_det_circuit(const Graph& g);

inline constexpr std::uint64_t default_matching_budget = 1'000'000;

/// Calls `visit` on every perfect matching, edges sorted by smaller endpoint.
/// Throws budget_exceeded after `budget` matchings.
void for_each_perfect_matching(const Graph& g, const std::function<void(const std::vector<Edge>&)>& visit,
                               std::uint64_t budget = default_matching_budget);

/// Sign of the permutation (i1 j1 i2 j2 ...) for pairs sorted by i.
int matching_sign(const std::vector<Edge>& matching);

SparsePoly pfaffian_poly(const Graph& g, std::uint64_t budget = default_matching_budget);

/// Tight rows of the perfect matching polytope: one row per odd set C
/// (coefficient 1 on every edge leaving C, right-hand side 1) and x_e = 0 per
/// deleted edge.
EqualitySet edmonds_equalities(const Graph& g, const std::vector<std::vector<int>>& odd_sets,
                               const std::vector<Edge>& deleted);

/// det(T_G) restricted to the face of the chosen Edmonds equalities. Since
/// det = pf^2, every odd-set row is applied with right-hand side 2.
Circuit pfaffian_face_degenerate(const Graph& g, const std::vector<std::vector<int>>& odd_sets,
                                 const std::vector<Edge>& deleted, const DegenOptions& options = {});

// ---- Kronecker quiver / magic squares --------------------------------------

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Names x<k>_<i>_<j>, ordered by (i, j, k) with k fastest.
std::vector<std::string> kronecker_variables(int n, int m);

/// The (dn)x(dn) matrix sum_k A_k (x) X_k.
SymbolicMatrix kronecker_matrix(int n, int m, int d, const std::vector<RationalMatrix>& a);
Circuit kronecker_semiinvariant(int n, int m, int d, const std::vector<RationalMatrix>& a);

/// s >= 0, every row sum and every column sum (over j,k resp. i,k) equal to d.
/// Variables s<i>_<j>_<k> in the same order as kronecker_variables.
InequalitySystem magic_square_system(int n, int m, int d);

struct GenericKronecker {
    std::vector<RationalMatrix> a;
    Circuit circuit;
    int attempts = 0;
};

/// Random integer matrices with entries in [-5,5], redrawn until the
/// expanded support equals the magic-square lattice points.
GenericKronecker generic_kronecker_semiinvariant(int n, int m, int d, std::uint64_t seed, int max_attempts = 25,
                                                 std::size_t term_limit = default_term_limit);

// ---- symmetric functions ---------------------------------------------------

using Partition = std::vector<int>;

/// Checks weakly decreasing positive parts.
void validate_partition(const Partition& alpha);
Partition conjugate(const Partition& alpha);
/// x1..xn
std::vector<std::string> symmetric_variables(int n);

/// Prefix recurrence e_l(x1..xi) = e_l(x1..x(i-1)) + xi * e_(l-1)(x1..x(i-1)).
Circuit elementary_symmetric_circuit(int n, int l);

/// Jacobi-Trudi determinant det[e_(a'_i - i + j)] with a fresh e-subcircuit
/// for every entry use.
Circuit schur_circuit(const Partition& alpha, int n);

struct SchurFactor {
    Partition partition;
    std::vector<int> variables; // 1-based
};

struct PermutohedronFace {
    Direction direction;
    std::vector<SchurFactor> factors;
};

/// Face of the permutohedron of `alpha` (padded with zeros to length n)
/// selected by a chain S_1 < ... < S_k = [n]: a_j = k - (first i with j in S_i).
/// The face polynomial of s_alpha is the product of the factors.
PermutohedronFace permutohedron_face(const Partition& alpha, int n, const std::vector<std::vector<int>>& chain);

/// Circuit over x1..xn for the product of the predicted Schur factors.
Circuit face_factor_circuit(const PermutohedronFace& face, int n);

/// Tr(X_w1 ... X_wl) over n x n matrices of variables x<k>_<i>_<j>.
Circuit trace_monomial_circuit(const std::vector<int>& word, int n);

// ---- quivers ---------------------------------------------------------------

struct SubspaceQuiver {
    std::vector<std::int64_t> source_dims; // beta(x_1..x_k)
    std::int64_t sink_dim = 0;             // beta(y)
    std::vector<std::int64_t> sigma_plus;  // per source
    std::int64_t sigma_minus = 0;
};

/// Variables v<i>_<p>_<l> (entry (p,l) of V^alpha_i, ordered p, i, l) then
/// the auxiliary w<r>_<i>_<c>. With `w_values` the auxiliary variables are
/// replaced by those numbers.
MatrixCircuit subspace_quiver_matrix(const SubspaceQuiver& shape,
                                     const std::optional<std::map<std::string, Rational>>& w_values = std::nullopt);

/// W<a>_<i>_<j> for all arrows, then V<a>_<k>_<l>.
std::vector<std::string> schofield_variables(const QuiverRep& rep);

/// d^V_W with rows (arrow, i, l) and columns (vertex, j, k). With `v_values`
/// the V entries are numbers and only W variables remain.
MatrixCircuit schofield_matrix(const QuiverRep& rep,
                               const std::optional<std::map<std::string, Rational>>& v_values = std::nullopt);

/// Nonnegativity, block rows/columns and the mini-block families, over the
/// exponents of schofield_variables.
InequalitySystem schofield_inequalities(const QuiverRep& rep);

// ---- permanent as a coefficient --------------------------------------------

struct PermanentDemo {
    Circuit circuit;
    std::string param;
    std::int64_t exponent = 0;
};

/// prod_j (sum_i t^((n+1)^i) x_ij); the coefficient of t^exponent is perm_n.
PermanentDemo permanent_coefficient_demo(int n);

} // namespace nd
