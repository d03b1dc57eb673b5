#include "newton_degen/quiver_polytopes.hpp"

#include "newton_degen/error.hpp"

#include <numeric>

namespace nd {

InequalitySystem edmonds_system(const Graph& g, const std::optional<std::vector<std::vector<int>>>& odd_sets) {
    InequalitySystem sys;
    sys.variables = g.edge_variables();
    const std::size_t dim = g.edges.size();
    for (std::size_t e = 0; e < dim; ++e) {
        std::vector<std::int64_t> row(dim, 0);
        row[e] = 1;
        sys.add_inequality(std::move(row), 0);
    }
    for (int v = 1; v <= g.n; ++v) {
        std::vector<std::int64_t> row(dim, 0);
        for (std::size_t e = 0; e < dim; ++e) {
            if (g.edges[e].first == v || g.edges[e].second == v) row[e] = 1;
        }
        sys.add_equality(std::move(row), 1);
    }
    const auto add_odd_row = [&](std::uint64_t mask) {
        std::vector<std::int64_t> row(dim, 0);
        for (std::size_t e = 0; e < dim; ++e) {
            const bool a = (mask >> (g.edges[e].first - 1)) & 1U;
            const bool b = (mask >> (g.edges[e].second - 1)) & 1U;
            if (a != b) row[e] = 1;
        }
        sys.add_inequality(std::move(row), 1);
    };
    if (odd_sets) {
        // Validates the sets the same way the equality version does.
        edmonds_equalities(g, *odd_sets, {});
        for (const auto& set : *odd_sets) {
            std::uint64_t mask = 0;
            for (int v : set) mask |= std::uint64_t{1} << (v - 1);
            add_odd_row(mask);
        }
        return sys;
    }
    if (g.n > max_enumerated_odd_sets_n) {
        fail(ErrorKind::budget_exceeded, "odd-set enumeration is limited to n <= " + std::to_string(max_enumerated_odd_sets_n) +
                                             "; pass the odd sets explicitly");
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n); ++mask) {
        const int size = __builtin_popcountll(mask);
        if (size >= 3 && size % 2 == 1) add_odd_row(mask);
    }
    return sys;
}

InequalitySystem f_matching_system(const BipartiteShape& shape, const std::vector<std::int64_t>& left_targets,
                                   const std::vector<std::int64_t>& right_targets) {
    if (left_targets.size() != shape.left || right_targets.size() != shape.right) {
        fail(ErrorKind::invalid_argument, "one target per node is required");
    }
    for (const auto* list : {&left_targets, &right_targets}) {
        for (auto f : *list) {
            if (f < 0) fail(ErrorKind::invalid_argument, "targets must be nonnegative");
        }
    }
    const auto left_total = std::accumulate(left_targets.begin(), left_targets.end(), std::int64_t{0});
    const auto right_total = std::accumulate(right_targets.begin(), right_targets.end(), std::int64_t{0});
    if (left_total != right_total) {
        fail(ErrorKind::invalid_argument, "left demand " + std::to_string(left_total) + " differs from right demand " +
                                              std::to_string(right_total));
    }
    InequalitySystem sys;
    for (std::size_t i = 1; i <= shape.left; ++i) {
        for (std::size_t r = 1; r <= shape.right; ++r) {
            for (std::size_t c = 1; c <= shape.multiplicity; ++c) {
                sys.variables.push_back("s" + std::to_string(i) + "_" + std::to_string(r) + "_" + std::to_string(c));
            }
        }
    }
    const std::size_t dim = sys.variables.size();
    const auto index = [&](std::size_t i, std::size_t r, std::size_t c) { return (i * shape.right + r) * shape.multiplicity + c; };
    for (std::size_t v = 0; v < dim; ++v) {
        std::vector<std::int64_t> row(dim, 0);
        row[v] = 1;
        sys.add_inequality(std::move(row), 0);
    }
    for (std::size_t i = 0; i < shape.left; ++i) {
        std::vector<std::int64_t> row(dim, 0);
        for (std::size_t r = 0; r < shape.right; ++r)
            for (std::size_t c = 0; c < shape.multiplicity; ++c) row[index(i, r, c)] = 1;
        sys.add_equality(std::move(row), left_targets[i]);
    }
    for (std::size_t r = 0; r < shape.right; ++r) {
        std::vector<std::int64_t> row(dim, 0);
        for (std::size_t i = 0; i < shape.left; ++i)
            for (std::size_t c = 0; c < shape.multiplicity; ++c) row[index(i, r, c)] = 1;
        sys.add_equality(std::move(row), right_targets[r]);
    }
    return sys;
}

InequalitySystem subspace_f_matching_system(const SubspaceQuiver& shape) {
    if (shape.sigma_plus.size() != shape.source_dims.size()) {
        fail(ErrorKind::invalid_argument, "one multiplicity per source is required");
    }
    std::vector<std::int64_t> right;
    for (std::size_t i = 0; i < shape.source_dims.size(); ++i) {
        for (std::int64_t l = 0; l < shape.source_dims[i]; ++l) right.push_back(shape.sigma_plus[i]);
    }
    BipartiteShape bip{static_cast<std::size_t>(shape.sink_dim), right.size(), 1};
    InequalitySystem sys = f_matching_system(bip, std::vector<std::int64_t>(bip.left, shape.sigma_minus), right);
    // Same order as the v variables: sink row p, then source i, then l.
    sys.variables.clear();
    for (std::int64_t p = 1; p <= shape.sink_dim; ++p) {
        for (std::size_t i = 0; i < shape.source_dims.size(); ++i) {
            for (std::int64_t l = 1; l <= shape.source_dims[i]; ++l) {
                sys.variables.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(p) + "_" + std::to_string(l));
            }
        }
    }
    return sys;
}

EqualitySet tight_rows_for_face(const SparsePoly& p, std::span<const std::int64_t> direction) {
    const auto face = face_min(p, direction);
    return {LinearConstraint{std::vector<std::int64_t>(direction.begin(), direction.end()), face.value}};
}

} // namespace nd
