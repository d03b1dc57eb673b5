#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nd {

using Edge = std::pair<int, int>; // i < j, 1-based

/// Simple undirected graph on vertices 1..n. The edge order fixes the order
/// of the edge variables.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    /// Validates the invariants and normalizes every edge to i < j.
    static Graph make(int n, std::vector<Edge> edges);

    std::vector<std::string> edge_variables() const;
    std::size_t edge_index(Edge e) const;
    bool is_connected() const;
};

/// Name of the variable for edge {i, j}, e.g. `x1_2`.
std::string edge_variable(Edge e);

/// `n m` on the first line, then m lines `i j`.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// One vertex subset per line.
std::vector<std::vector<int>> parse_vertex_sets(std::string_view text);

/// Lines `i j`.
std::vector<Edge> parse_edge_list(std::string_view text);

/// Directed multigraph with named vertices; arrows are numbered from 1 in
/// file order.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> arrows; // (source, target) vertex indices

    std::size_t vertex_index(std::string_view name) const;
    bool is_acyclic() const;
};

/// A quiver with the dimension vectors of two representations V and W.
struct QuiverRep {
    Quiver quiver;
    std::vector<std::int64_t> dim_v;
    std::vector<std::int64_t> dim_w;

    /// sum over arrows dimW(t)dimV(s) == sum over vertices dimW(x)dimV(x)
    bool is_square() const;
};

/// `vertex <name>`, `arrow <src> <dst>`, `dimV <name> <int>`, `dimW <name> <int>`.
/// Dimensions default to 0.
QuiverRep parse_quiver(std::string_view text);
std::string format_quiver(const QuiverRep& rep);

} // namespace nd
