#pragma once

#include "newton_degen/generators.hpp"
#include "newton_degen/graph.hpp"
#include "newton_degen/polyoracle.hpp"

#include <optional>
#include <vector>

namespace nd {

inline constexpr int max_enumerated_odd_sets_n = 12;

/// x_e >= 0, one equality per vertex, and x(border of C) >= 1 for odd C.
/// Without `odd_sets` every odd subset of size >= 3 is listed, which is only
/// allowed for n <= 12.
InequalitySystem edmonds_system(const Graph& g, const std::optional<std::vector<std::vector<int>>>& odd_sets = std::nullopt);

/// Complete bipartite multigraph: `left` x `right` nodes with `multiplicity`
/// parallel edges per pair.
struct BipartiteShape {
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t multiplicity = 1;
};

/// f-perfect matchings: s >= 0 on every edge, and the edges at each node sum
/// to its target. Variables s<i>_<r>_<c> ordered (left i, right r, copy c).
InequalitySystem f_matching_system(const BipartiteShape& shape, const std::vector<std::int64_t>& left_targets,
                                   const std::vector<std::int64_t>& right_targets);

/// The f-matching system whose points are the V-exponents of the
/// subspace-quiver determinant, in the order of its v variables.
InequalitySystem subspace_f_matching_system(const SubspaceQuiver& shape);

/// The single row {(a, b)} with b = min <a,e> over the support.
EqualitySet tight_rows_for_face(const SparsePoly& p, std::span<const std::int64_t> direction);

} // namespace nd
