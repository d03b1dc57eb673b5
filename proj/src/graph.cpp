#include "newton_degen/graph.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace nd {

namespace {

// Splits into non-comment lines; each returned pair is (line number, text).
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(number, line);
    }
    return out;
}

std::vector<long long> integers(const std::string& line, std::size_t number) {
    std::istringstream in(line);
    std::vector<long long> out;
    std::string word;
    while (in >> word) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(word, &used));
            if (used != word.size()) throw std::invalid_argument(word);
        } catch (const std::exception&) {
            fail(ErrorKind::parse, "line " + std::to_string(number) + ": expected an integer, got '" + word + "'");
        }
    }
    return out;
}

} // namespace

std::string edge_variable(Edge e) { return "x" + std::to_string(e.first) + "_" + std::to_string(e.second); }

Graph Graph::make(int n, std::vector<Edge> edges) {
    if (n < 0) fail(ErrorKind::invalid_argument, "negative vertex count");
    std::set<Edge> seen;
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 1 || e.second > n) {
            fail(ErrorKind::invalid_argument, "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                                  "} has an endpoint outside 1.." + std::to_string(n));
        }
        if (e.first == e.second) fail(ErrorKind::invalid_argument, "self-loop at vertex " + std::to_string(e.first));
        if (!seen.insert(e).second) {
            fail(ErrorKind::invalid_argument, "duplicate edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
        }
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

std::vector<std::string> Graph::edge_variables() const {
    std::vector<std::string> out;
    for (const auto& e : edges) out.push_back(edge_variable(e));
    return out;
}

std::size_t Graph::edge_index(Edge e) const {
    if (e.first > e.second) std::swap(e.first, e.second);
    const auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) {
        fail(ErrorKind::invalid_argument, "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "} is not an edge");
    }
    return static_cast<std::size_t>(it - edges.begin());
}

bool Graph::is_connected() const {
    if (n <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) parent[static_cast<std::size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
        auto& p = parent[static_cast<std::size_t>(v)];
        return p == v ? v : p = find(p);
    };
    int components = n;
    for (const auto& [a, b] : edges) {
        const int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --components;
        }
    }
    return components == 1;
}

Graph parse_graph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) fail(ErrorKind::parse, "empty graph file");
    const auto header = integers(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
        fail(ErrorKind::parse, "line " + std::to_string(lines[0].first) + ": expected 'n m'");
    }
    if (lines.size() - 1 != static_cast<std::size_t>(header[1])) {
        fail(ErrorKind::parse, "header announces " + std::to_string(header[1]) + " edges, found " +
                                   std::to_string(lines.size() - 1));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto v = integers(lines[i].second, lines[i].first);
        if (v.size() != 2) fail(ErrorKind::parse, "line " + std::to_string(lines[i].first) + ": expected 'i j'");
        edges.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    try {
        return Graph::make(static_cast<int>(header[0]), std::move(edges));
    } catch (const Error& e) {
        fail(ErrorKind::parse, e.what());
    }
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& [a, b] : g.edges) out << a << ' ' << b << '\n';
    return out.str();
}

std::vector<std::vector<int>> parse_vertex_sets(std::string_view text) {
    std::vector<std::vector<int>> out;
    for (const auto& [number, line] : content_lines(text)) {
        std::vector<int> set;
        for (auto v : integers(line, number)) set.push_back(static_cast<int>(v));
        out.push_back(std::move(set));
    }
    return out;
}

std::vector<Edge> parse_edge_list(std::string_view text) {
    std::vector<Edge> out;
    for (const auto& [number, line] : content_lines(text)) {
        const auto v = integers(line, number);
        if (v.size() != 2) fail(ErrorKind::parse, "line " + std::to_string(number) + ": expected 'i j'");
        out.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    return out;
}

// ---- quivers ---------------------------------------------------------------

std::size_t Quiver::vertex_index(std::string_view name) const {
    const auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) fail(ErrorKind::invalid_argument, "unknown vertex '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vertices.begin());
}

bool Quiver::is_acyclic() const {
    // Kahn's algorithm; self-loops count as cycles.
    std::vector<std::size_t> indegree(vertices.size(), 0);
    for (const auto& [s, t] : arrows) ++indegree[t];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++removed;
        for (const auto& [s, t] : arrows) {
            if (s == v && --indegree[t] == 0) ready.push_back(t);
        }
    }
    return removed == vertices.size();
}

bool QuiverRep::is_square() const {
    std::int64_t rows = 0, cols = 0;
    for (const auto& [s, t] : quiver.arrows) rows += dim_w[t] * dim_v[s];
    for (std::size_t x = 0; x < quiver.vertices.size(); ++x) cols += dim_w[x] * dim_v[x];
    return rows == cols;
}

QuiverRep parse_quiver(std::string_view text) {
    QuiverRep rep;
    for (const auto& [number, line] : content_lines(text)) {
        const auto where = "line " + std::to_string(number) + ": ";
        std::istringstream in(line);
        std::vector<std::string> words;
        for (std::string w; in >> w;) words.push_back(w);
        const auto lookup = [&](const std::string& name) {
            const auto it = std::find(rep.quiver.vertices.begin(), rep.quiver.vertices.end(), name);
            if (it == rep.quiver.vertices.end()) fail(ErrorKind::parse, where + "unknown vertex '" + name + "'");
            return static_cast<std::size_t>(it - rep.quiver.vertices.begin());
        };
        if (words[0] == "vertex" && words.size() == 2) {
            if (std::find(rep.quiver.vertices.begin(), rep.quiver.vertices.end(), words[1]) != rep.quiver.vertices.end()) {
                fail(ErrorKind::parse, where + "duplicate vertex '" + words[1] + "'");
            }
            rep.quiver.vertices.push_back(words[1]);
            rep.dim_v.push_back(0);
            rep.dim_w.push_back(0);
        } else if (words[0] == "arrow" && words.size() == 3) {
            rep.quiver.arrows.emplace_back(lookup(words[1]), lookup(words[2]));
        } else if ((words[0] == "dimV" || words[0] == "dimW") && words.size() == 3) {
            const std::size_t x = lookup(words[1]);
            const auto value = integers(words[2], number);
            if (value.size() != 1 || value[0] < 0) fail(ErrorKind::parse, where + "dimension must be a nonnegative integer");
            (words[0] == "dimV" ? rep.dim_v : rep.dim_w)[x] = value[0];
        } else {
            fail(ErrorKind::parse, where + "expected 'vertex', 'arrow', 'dimV' or 'dimW'");
        }
    }
    return rep;
}

std::string format_quiver(const QuiverRep& rep) {
    std::ostringstream out;
    const auto& q = rep.quiver;
    for (const auto& v : q.vertices) out << "vertex " << v << '\n';
    for (const auto& [s, t] : q.arrows) out << "arrow " << q.vertices[s] << ' ' << q.vertices[t] << '\n';
    for (std::size_t x = 0; x < q.vertices.size(); ++x) out << "dimV " << q.vertices[x] << ' ' << rep.dim_v[x] << '\n';
    for (std::size_t x = 0; x < q.vertices.size(); ++x) out << "dimW " << q.vertices[x] << ' ' << rep.dim_w[x] << '\n';
    return out.str();
}

} // namespace nd
