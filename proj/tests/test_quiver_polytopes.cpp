#include "helpers.hpp"

#include "newton_degen/generators.hpp"
#include "newton_degen/quiver_polytopes.hpp"

#include <random>
#include <set>

using namespace nd;
using namespace nd::test;

namespace {

std::vector<Exponent> points_of(const InequalitySystem& sys) { return integral_points(sys, implied_box(sys)); }

Graph random_graph(std::mt19937_64& rng, int n, int max_edges) {
    std::vector<Edge> all;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
    }
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<int> count(1, std::min<int>(max_edges, static_cast<int>(all.size())));
    all.resize(static_cast<std::size_t>(count(rng)));
    return Graph::make(n, all);
}

} // namespace

TEST_CASE("Edmonds systems") {
    const Graph edge = Graph::make(2, {{1, 2}});
    const InequalitySystem one = edmonds_system(edge);
    CHECK(one.variables == Names{"x1_2"});
    CHECK(one.equalities.size() == 2);
    CHECK(points_of(one) == std::vector<Exponent>{{1}});

    const Graph c4 = Graph::make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(points_of(edmonds_system(c4)).size() == 2);

    const Graph k3 = Graph::make(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(points_of(edmonds_system(k3)).empty());

    // an explicit odd-set list replaces the enumeration
    const InequalitySystem listed = edmonds_system(c4, std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(listed.inequalities.size() == 4 + 1);

    std::vector<Edge> big;
    for (int i = 1; i < 14; ++i) big.emplace_back(i, i + 1);
    CHECK(kind_of([&] { edmonds_system(Graph::make(14, big)); }) == ErrorKind::budget_exceeded);
}

TEST_CASE("Edmonds points are the perfect matchings") {
    std::mt19937_64 rng(11);
    int graphs = 0;
    for (int n = 2; n <= 10; n += 2) {
        for (int round = 0; round < 6; ++round) {
            const Graph g = random_graph(rng, n, n + 5);
            std::set<Exponent> matchings;
            for_each_perfect_matching(g, [&](const std::vector<Edge>& m) {
                Exponent e(g.edges.size(), 0);
                for (const auto& edge : m) e[g.edge_index(edge)] = 1;
                matchings.insert(e);
            });
            const auto points = points_of(edmonds_system(g));
            CHECK(std::set<Exponent>(points.begin(), points.end()) == matchings);
            CHECK(points.size() == matchings.size());
            ++graphs;
        }
    }
    CHECK(graphs == 30);
}

TEST_CASE("f-matchings") {
    const InequalitySystem unit = f_matching_system({1, 1, 1}, {1}, {1});
    CHECK(unit.variables == Names{"s1_1_1"});
    CHECK(points_of(unit) == std::vector<Exponent>{{1}});

    const InequalitySystem doubled = f_matching_system({1, 1, 2}, {2}, {2});
    CHECK(points_of(doubled) == std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});

    CHECK(kind_of([] { f_matching_system({1, 2, 1}, {1}, {1, 1}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { f_matching_system({1, 1, 1}, {1, 1}, {1}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { f_matching_system({1, 1, 1}, {-1}, {-1}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("magic squares are f-matchings") {
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= 2; ++m) {
            for (int d = 1; d <= 2; ++d) {
                const auto un = static_cast<std::size_t>(n);
                const std::vector<std::int64_t> targets(un, d);
                const InequalitySystem f = f_matching_system({un, un, static_cast<std::size_t>(m)}, targets, targets);
                const InequalitySystem magic = magic_square_system(n, m, d);
                CHECK(f.variables == magic.variables);
                CHECK(points_of(f) == points_of(magic));
            }
        }
    }
}

TEST_CASE("subspace f-matchings") {
    const SubspaceQuiver plane{{1, 1}, 2, {1, 1}, 1};
    const InequalitySystem sys = subspace_f_matching_system(plane);
    const MatrixCircuit d = subspace_quiver_matrix(plane);
    const SparsePoly det = expand(d.circuit).with_variables(d.matrix.variables);

    std::set<Exponent> projected;
    for (const auto& e : det.support()) projected.insert(Exponent(e.begin(), e.begin() + sys.dimension()));
    for (std::size_t i = 0; i < sys.dimension(); ++i) CHECK(sys.variables[i] == d.matrix.variables[i]);
    const auto points = points_of(sys);
    CHECK(std::set<Exponent>(points.begin(), points.end()) == projected);

    const SubspaceQuiver wide{{1, 2}, 3, {1, 1}, 1};
    const InequalitySystem ws = subspace_f_matching_system(wide);
    const MatrixCircuit wd = subspace_quiver_matrix(wide);
    std::set<Exponent> wproj;
    for (const auto& e : expand(wd.circuit).with_variables(wd.matrix.variables).support()) {
        wproj.insert(Exponent(e.begin(), e.begin() + ws.dimension()));
    }
    const auto wpoints = points_of(ws);
    CHECK(std::set<Exponent>(wpoints.begin(), wpoints.end()) == wproj);
}

TEST_CASE("tight rows") {
    const SparsePoly p = poly("1 x1*x2\n1 x1\n1 x2^2", {"x1", "x2"});
    const EqualitySet rows = tight_rows_for_face(p, Direction{1, 1});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == LinearConstraint{{1, 1}, 1});
    CHECK(restrict_by_equalities(p, rows) == face_min(p, Direction{1, 1}).restricted);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int i = 0; i < 50; ++i) {
        const Direction a{coord(rng), coord(rng)};
        CHECK(restrict_by_equalities(p, tight_rows_for_face(p, a)) == face_min(p, a).restricted);
    }
}
