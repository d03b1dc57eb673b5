#include "newton_degen/generators.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace nd {

// ---- graphs, Pfaffians, matchings ------------------------------------------

SymbolicMatrix tutte_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n);
    SymbolicMatrix t(n, n, g.edge_variables());
    for (const auto& e : g.edges) {
        const std::string x = edge_variable(e);
        const auto i = static_cast<std::size_t>(e.first - 1);
        const auto j = static_cast<std::size_t>(e.second - 1);
        t.add(i, j, Rational(1), {x});
        t.add(j, i, Rational(-1), {x});
    }
    return t;
}

MatrixCircuit tutte_det_circuit(const Graph& g) {
    SymbolicMatrix t = tutte_matrix(g);
    Circuit c = determinant_circuit(t);
    return {std::move(t), std::move(c)};
}

void for_each_perfect_matching(const Graph& g, const std::function<void(const std::vector<Edge>&)>& visit,
                               std::uint64_t budget) {
    if (g.n % 2 != 0) return;
    const auto n = static_cast<std::size_t>(g.n);
    std::vector<std::vector<int>> neighbours(n + 1);
    for (const auto& [a, b] : g.edges) {
        neighbours[static_cast<std::size_t>(a)].push_back(b);
        neighbours[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : neighbours) std::sort(list.begin(), list.end());
    std::vector<bool> used(n + 1, false);
    std::vector<Edge> current;
    std::uint64_t found = 0;
    std::function<void()> search = [&] {
        int u = 1;
        while (u <= g.n && used[static_cast<std::size_t>(u)]) ++u;
        if (u > g.n) {
            if (++found > budget) {
                fail(ErrorKind::budget_exceeded, "more than " + std::to_string(budget) + " perfect matchings");
            }
            visit(current);
            return;
        }
        used[static_cast<std::size_t>(u)] = true;
        for (int v : neighbours[static_cast<std::size_t>(u)]) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            current.emplace_back(u, v);
            search();
            current.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
        used[static_cast<std::size_t>(u)] = false;
    };
    search();
}

int matching_sign(const std::vector<Edge>& matching) {
    std::vector<Edge> pairs = matching;
    for (auto& e : pairs) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> word;
    for (const auto& [a, b] : pairs) {
        word.push_back(a);
        word.push_back(b);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i + 1; j < word.size(); ++j) inversions += word[i] > word[j];
    }
    return inversions % 2 == 0 ? 1 : -1;
}

SparsePoly pfaffian_poly(const Graph& g, std::uint64_t budget) {
    SparsePoly pf(g.edge_variables());
    for_each_perfect_matching(
        g,
        [&](const std::vector<Edge>& matching) {
            Exponent e(g.edges.size(), 0);
            for (const auto& edge : matching) e[g.edge_index(edge)] = 1;
            pf.add_term(e, Rational(matching_sign(matching)));
        },
        budget);
    return pf;
}

EqualitySet edmonds_equalities(const Graph& g, const std::vector<std::vector<int>>& odd_sets,
                               const std::vector<Edge>& deleted) {
    EqualitySet rows;
    for (const auto& set : odd_sets) {
        std::set<int> members(set.begin(), set.end());
        if (members.size() != set.size()) fail(ErrorKind::invalid_argument, "odd set lists a vertex twice");
        if (members.size() < 3 || members.size() % 2 == 0) {
            fail(ErrorKind::invalid_argument, "odd sets must have odd size at least 3, got size " + std::to_string(members.size()));
        }
        if (*members.begin() < 1 || *members.rbegin() > g.n) fail(ErrorKind::invalid_argument, "odd set vertex out of range");
        LinearConstraint row{std::vector<std::int64_t>(g.edges.size(), 0), 1};
        for (std::size_t k = 0; k < g.edges.size(); ++k) {
            if (members.count(g.edges[k].first) != members.count(g.edges[k].second)) row.coeffs[k] = 1;
        }
        rows.push_back(std::move(row));
    }
    for (const auto& e : deleted) {
        LinearConstraint row{std::vector<std::int64_t>(g.edges.size(), 0), 0};
        row.coeffs[g.edge_index(e)] = 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

Circuit pfaffian_face_degenerate(const Graph& g, const std::vector<std::vector<int>>& odd_sets,
                                 const std::vector<Edge>& deleted, const DegenOptions& options) {
    if (g.n % 2 != 0) fail(ErrorKind::invalid_argument, "the Pfaffian face needs an even number of vertices");
    EqualitySet rows = edmonds_equalities(g, odd_sets, deleted);
    for (std::size_t r = 0; r < odd_sets.size(); ++r) rows[r].rhs = 2;
    return face_restrict_by_equalities(tutte_det_circuit(g).circuit, rows, options);
}

// ---- Kronecker quiver / magic squares --------------------------------------

namespace {

std::string triple_name(char prefix, int a, int b, int c) {
    return std::string(1, prefix) + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(c);
}

void require_positive(std::initializer_list<int> values, const char* what) {
    for (int v : values) {
        if (v < 1) fail(ErrorKind::invalid_argument, std::string(what) + " must be positive");
    }
}

} // namespace

std::vector<std::string> kronecker_variables(int n, int m) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= m; ++k) out.push_back(triple_name('x', k, i, j));
        }
    }
    return out;
}

SymbolicMatrix kronecker_matrix(int n, int m, int d, const std::vector<RationalMatrix>& a) {
    require_positive({n, m, d}, "n, m and d");
    if (a.size() != static_cast<std::size_t>(m)) {
        fail(ErrorKind::invalid_argument, "expected " + std::to_string(m) + " coefficient matrices, got " + std::to_string(a.size()));
    }
    for (const auto& mat : a) {
        bool ok = mat.size() == static_cast<std::size_t>(d);
        for (const auto& row : mat) ok = ok && row.size() == static_cast<std::size_t>(d);
        if (!ok) fail(ErrorKind::invalid_argument, "coefficient matrices must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    const auto size = static_cast<std::size_t>(d * n);
    SymbolicMatrix out(size, size, kronecker_variables(n, m));
    for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) {
            for (int k = 0; k < m; ++k) {
                const Rational& coeff = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                if (coeff == 0) continue;
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        out.add(static_cast<std::size_t>(p * n + i), static_cast<std::size_t>(q * n + j), coeff,
                                {triple_name('x', k + 1, i + 1, j + 1)});
                    }
                }
            }
        }
    }
    return out;
}

Circuit kronecker_semiinvariant(int n, int m, int d, const std::vector<RationalMatrix>& a) {
    return determinant_circuit(kronecker_matrix(n, m, d, a));
}

InequalitySystem magic_square_system(int n, int m, int d) {
    require_positive({n, m, d}, "n, m and d");
    InequalitySystem sys;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= m; ++k) sys.variables.push_back(triple_name('s', i, j, k));
        }
    }
    const std::size_t dim = sys.variables.size();
    const auto index = [&](int i, int j, int k) { return static_cast<std::size_t>(((i * n) + j) * m + k); };
    for (std::size_t v = 0; v < dim; ++v) {
        std::vector<std::int64_t> row(dim, 0);
        row[v] = 1;
        sys.add_inequality(std::move(row), 0);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> row(dim, 0);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < m; ++k) row[index(i, j, k)] = 1;
        }
        sys.add_equality(std::move(row), d);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<std::int64_t> row(dim, 0);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < m; ++k) row[index(i, j, k)] = 1;
        }
        sys.add_equality(std::move(row), d);
    }
    return sys;
}

GenericKronecker generic_kronecker_semiinvariant(int n, int m, int d, std::uint64_t seed, int max_attempts,
                                                 std::size_t term_limit) {
    const InequalitySystem sys = magic_square_system(n, m, d);
    const auto expected = integral_points(sys, implied_box(sys));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<RationalMatrix> a(static_cast<std::size_t>(m),
                                      RationalMatrix(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d))));
        for (auto& mat : a) {
            for (auto& row : mat) {
                for (auto& x : row) x = Rational(entry(rng));
            }
        }
        Circuit c = kronecker_semiinvariant(n, m, d, a);
        if (expand(c, term_limit).support() == expected) return {std::move(a), std::move(c), attempt};
    }
    fail(ErrorKind::budget_exceeded, "no generic coefficient matrices found in " + std::to_string(max_attempts) + " attempts");
}

// ---- quivers ---------------------------------------------------------------

MatrixCircuit subspace_quiver_matrix(const SubspaceQuiver& shape, const std::optional<std::map<std::string, Rational>>& w_values) {
    const std::size_t k = shape.source_dims.size();
    if (shape.sigma_plus.size() != k) fail(ErrorKind::invalid_argument, "one multiplicity per source is required");
    std::int64_t cols = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (shape.source_dims[i] < 0 || shape.sigma_plus[i] < 0) fail(ErrorKind::invalid_argument, "negative dimension or multiplicity");
        cols += shape.sigma_plus[i] * shape.source_dims[i];
    }
    if (shape.sink_dim < 0 || shape.sigma_minus < 0) fail(ErrorKind::invalid_argument, "negative dimension or multiplicity");
    const std::int64_t rows = shape.sink_dim * shape.sigma_minus;
    if (rows != cols) {
        fail(ErrorKind::invalid_argument, "not square: beta(y)*sigma_-(y) = " + std::to_string(rows) +
                                              " but sum sigma_+(x_i)*beta(x_i) = " + std::to_string(cols));
    }

    std::vector<std::string> vars;
    for (std::int64_t p = 1; p <= shape.sink_dim; ++p) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::int64_t l = 1; l <= shape.source_dims[i]; ++l) {
                vars.push_back(triple_name('v', static_cast<int>(i + 1), static_cast<int>(p), static_cast<int>(l)));
            }
        }
    }
    std::vector<std::string> aux;
    for (std::int64_t r = 1; r <= shape.sigma_minus; ++r) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::int64_t c = 1; c <= shape.sigma_plus[i]; ++c) {
                aux.push_back(triple_name('w', static_cast<int>(r), static_cast<int>(i + 1), static_cast<int>(c)));
            }
        }
    }
    if (w_values) {
        for (const auto& name : aux) {
            if (!w_values->count(name)) fail(ErrorKind::invalid_argument, "no value for auxiliary variable '" + name + "'");
        }
    } else {
        vars.insert(vars.end(), aux.begin(), aux.end());
    }

    SymbolicMatrix g(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), vars);
    std::size_t col = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::int64_t c = 1; c <= shape.sigma_plus[i]; ++c) {
            for (std::int64_t l = 1; l <= shape.source_dims[i]; ++l, ++col) {
                for (std::int64_t r = 1; r <= shape.sigma_minus; ++r) {
                    const std::string w = triple_name('w', static_cast<int>(r), static_cast<int>(i + 1), static_cast<int>(c));
                    for (std::int64_t p = 1; p <= shape.sink_dim; ++p) {
                        const auto row = static_cast<std::size_t>((r - 1) * shape.sink_dim + (p - 1));
                        const std::string v = triple_name('v', static_cast<int>(i + 1), static_cast<int>(p), static_cast<int>(l));
                        if (w_values) g.add(row, col, w_values->at(w), {v});
                        else g.add(row, col, Rational(1), {w, v});
                    }
                }
            }
        }
    }
    Circuit det = determinant_circuit(g);
    return {std::move(g), std::move(det)};
}

namespace {

void check_schofield(const QuiverRep& rep) {
    const auto& q = rep.quiver;
    if (rep.dim_v.size() != q.vertices.size() || rep.dim_w.size() != q.vertices.size()) {
        fail(ErrorKind::invalid_argument, "dimension vectors do not match the vertex count");
    }
    for (std::size_t x = 0; x < q.vertices.size(); ++x) {
        if (rep.dim_v[x] < 0 || rep.dim_w[x] < 0) fail(ErrorKind::invalid_argument, "negative dimension");
    }
    if (!q.is_acyclic()) fail(ErrorKind::invalid_argument, "the quiver has an oriented cycle");
    if (!rep.is_square()) {
        fail(ErrorKind::invalid_argument, "dimension vectors do not make d^V_W square");
    }
}

std::string arrow_entry(char prefix, std::size_t arrow, std::int64_t a, std::int64_t b) {
    return triple_name(prefix, static_cast<int>(arrow + 1), static_cast<int>(a), static_cast<int>(b));
}

// Exponent positions of the W and V variables of each arrow.
struct SchofieldIndex {
    std::vector<std::size_t> w_base, v_base;
    std::size_t dimension = 0;

    explicit SchofieldIndex(const QuiverRep& rep) {
        const auto& arrows = rep.quiver.arrows;
        for (const auto& [s, t] : arrows) {
            w_base.push_back(dimension);
            dimension += static_cast<std::size_t>(rep.dim_w[t] * rep.dim_w[s]);
        }
        for (const auto& [s, t] : arrows) {
            v_base.push_back(dimension);
            dimension += static_cast<std::size_t>(rep.dim_v[t] * rep.dim_v[s]);
        }
        rep_ = &rep;
    }
    // omega^a_{i,j}, 1-based i in dimW(t), j in dimW(s)
    std::size_t w(std::size_t a, std::int64_t i, std::int64_t j) const {
        const auto s = rep_->quiver.arrows[a].first;
        return w_base[a] + static_cast<std::size_t>((i - 1) * rep_->dim_w[s] + (j - 1));
    }
    // nu^a_{k,l}, 1-based k in dimV(t), l in dimV(s)
    std::size_t v(std::size_t a, std::int64_t k, std::int64_t l) const {
        const auto s = rep_->quiver.arrows[a].first;
        return v_base[a] + static_cast<std::size_t>((k - 1) * rep_->dim_v[s] + (l - 1));
    }

private:
    const QuiverRep* rep_ = nullptr;
};

} // namespace

std::vector<std::string> schofield_variables(const QuiverRep& rep) {
    std::vector<std::string> out;
    const auto& arrows = rep.quiver.arrows;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const auto [s, t] = arrows[a];
        for (std::int64_t i = 1; i <= rep.dim_w[t]; ++i) {
            for (std::int64_t j = 1; j <= rep.dim_w[s]; ++j) out.push_back(arrow_entry('W', a, i, j));
        }
    }
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const auto [s, t] = arrows[a];
        for (std::int64_t k = 1; k <= rep.dim_v[t]; ++k) {
            for (std::int64_t l = 1; l <= rep.dim_v[s]; ++l) out.push_back(arrow_entry('V', a, k, l));
        }
    }
    return out;
}

MatrixCircuit schofield_matrix(const QuiverRep& rep, const std::optional<std::map<std::string, Rational>>& v_values) {
    check_schofield(rep);
    const auto& q = rep.quiver;
    std::vector<std::string> vars;
    for (const auto& name : schofield_variables(rep)) {
        if (name.front() == 'W' || !v_values) vars.push_back(name);
    }

    std::size_t size = 0;
    for (const auto& [s, t] : q.arrows) size += static_cast<std::size_t>(rep.dim_w[t] * rep.dim_v[s]);
    std::vector<std::size_t> col_base;
    std::size_t cols = 0;
    for (std::size_t x = 0; x < q.vertices.size(); ++x) {
        col_base.push_back(cols);
        cols += static_cast<std::size_t>(rep.dim_w[x] * rep.dim_v[x]);
    }
    SymbolicMatrix d(size, cols, vars);

    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto [s, t] = q.arrows[a];
        for (std::int64_t i = 1; i <= rep.dim_w[t]; ++i) {
            for (std::int64_t l = 1; l <= rep.dim_v[s]; ++l, ++row) {
                // t(a) = x block: delta_{ij} V^a_{k,l} at column (t, j=i, k)
                for (std::int64_t k = 1; k <= rep.dim_v[t]; ++k) {
                    const std::size_t col = col_base[t] + static_cast<std::size_t>((i - 1) * rep.dim_v[t] + (k - 1));
                    const std::string name = arrow_entry('V', a, k, l);
                    if (v_values) {
                        const auto it = v_values->find(name);
                        if (it == v_values->end()) fail(ErrorKind::invalid_argument, "no value for '" + name + "'");
                        d.at(row, col).add_term(Exponent(vars.size(), 0), it->second);
                    } else {
                        d.add(row, col, Rational(1), {name});
                    }
                }
                // s(a) = x block: -delta_{lk} W^a_{i,j} at column (s, j, k=l)
                for (std::int64_t j = 1; j <= rep.dim_w[s]; ++j) {
                    const std::size_t col = col_base[s] + static_cast<std::size_t>((j - 1) * rep.dim_v[s] + (l - 1));
                    d.add(row, col, Rational(-1), {arrow_entry('W', a, i, j)});
                }
            }
        }
    }
    Circuit det = determinant_circuit(d);
    return {std::move(d), std::move(det)};
}

InequalitySystem schofield_inequalities(const QuiverRep& rep) {
    check_schofield(rep);
    const auto& q = rep.quiver;
    const SchofieldIndex at(rep);
    InequalitySystem sys;
    sys.variables = schofield_variables(rep);
    const std::size_t dim = sys.variables.size();
    const auto zero = [&] { return std::vector<std::int64_t>(dim, 0); };
    const auto dv = [&](std::size_t x) { return rep.dim_v[x]; };
    const auto dw = [&](std::size_t x) { return rep.dim_w[x]; };

    for (std::size_t v = 0; v < dim; ++v) {
        auto row = zero();
        row[v] = 1;
        sys.add_inequality(std::move(row), 0);
    }
    // block rows
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto [s, t] = q.arrows[a];
        auto row = zero();
        for (std::int64_t i = 1; i <= dw(t); ++i)
            for (std::int64_t j = 1; j <= dw(s); ++j) row[at.w(a, i, j)] = 1;
        for (std::int64_t k = 1; k <= dv(t); ++k)
            for (std::int64_t l = 1; l <= dv(s); ++l) row[at.v(a, k, l)] = 1;
        sys.add_equality(std::move(row), dw(t) * dv(s));
    }
    // block columns
    for (std::size_t x = 0; x < q.vertices.size(); ++x) {
        auto row = zero();
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const auto [s, t] = q.arrows[a];
            if (s == x) {
                for (std::int64_t i = 1; i <= dw(t); ++i)
                    for (std::int64_t j = 1; j <= dw(s); ++j) row[at.w(a, i, j)] = 1;
            }
            if (t == x) {
                for (std::int64_t k = 1; k <= dv(t); ++k)
                    for (std::int64_t l = 1; l <= dv(s); ++l) row[at.v(a, k, l)] = 1;
            }
        }
        sys.add_equality(std::move(row), dw(x) * dv(x));
    }
    // W mini-block rows
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto [s, t] = q.arrows[a];
        for (std::int64_t i = 1; i <= dw(t); ++i) {
            auto w_row = zero();
            for (std::int64_t j = 1; j <= dw(s); ++j) w_row[at.w(a, i, j)] = 1;
            sys.add_upper_bound(w_row, dv(s));
            sys.add_inequality(w_row, dv(s) - dv(t));
            auto with_v = w_row;
            for (std::int64_t k = 1; k <= dv(t); ++k)
                for (std::int64_t l = 1; l <= dv(s); ++l) with_v[at.v(a, k, l)] = 1;
            sys.add_inequality(std::move(with_v), dv(s));
        }
    }
    // V mini-block columns
    for (std::size_t x = 0; x < q.vertices.size(); ++x) {
        for (std::int64_t j = 1; j <= dw(x); ++j) {
            auto row = zero();
            std::int64_t rhs = dv(x);
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                const auto [s, t] = q.arrows[a];
                if (s == x) {
                    for (std::int64_t i = 1; i <= dw(t); ++i) row[at.w(a, i, j)] += 1;
                }
                if (t == x) {
                    for (std::int64_t jj = 1; jj <= dw(s); ++jj) row[at.w(a, j, jj)] -= 1;
                    rhs -= dv(s);
                }
            }
            sys.add_equality(std::move(row), rhs);
        }
    }
    // V mini-block rows
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto [s, t] = q.arrows[a];
        for (std::int64_t l = 1; l <= dv(s); ++l) {
            auto v_row = zero();
            for (std::int64_t k = 1; k <= dv(t); ++k) v_row[at.v(a, k, l)] = 1;
            sys.add_upper_bound(v_row, dw(t));
            auto with_w = v_row;
            for (std::int64_t i = 1; i <= dw(t); ++i)
                for (std::int64_t j = 1; j <= dw(s); ++j) with_w[at.w(a, i, j)] = 1;
            sys.add_inequality(std::move(with_w), dw(t));
            sys.add_inequality(std::move(v_row), dw(t) - dw(s));
        }
    }
    // W mini-block columns
    for (std::size_t x = 0; x < q.vertices.size(); ++x) {
        for (std::int64_t k = 1; k <= dv(x); ++k) {
            auto row = zero();
            std::int64_t rhs = dw(x);
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                const auto [s, t] = q.arrows[a];
                if (t == x) {
                    for (std::int64_t l = 1; l <= dv(s); ++l) row[at.v(a, k, l)] += 1;
                }
                if (s == x) {
                    for (std::int64_t kk = 1; kk <= dv(t); ++kk) row[at.v(a, kk, k)] -= 1;
                    rhs -= dw(t);
                }
            }
            sys.add_equality(std::move(row), rhs);
        }
    }
    return sys;
}

// ---- permanent as a coefficient --------------------------------------------

PermanentDemo permanent_coefficient_demo(int n) {
    if (n < 1 || n > 9) fail(ErrorKind::invalid_argument, "permanent demo supports 1 <= n <= 9");
    CircuitBuilder builder;
    std::vector<std::vector<GateId>> x(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            x[static_cast<std::size_t>(i - 1)].push_back(builder.variable("x" + std::to_string(i) + std::to_string(j)));
        }
    }
    const GateId t = builder.variable("t");
    std::vector<std::uint64_t> weight;
    std::uint64_t w = 1;
    std::int64_t exponent = 0;
    for (int i = 1; i <= n; ++i) {
        w *= static_cast<std::uint64_t>(n + 1);
        weight.push_back(w);
        exponent += static_cast<std::int64_t>(w);
    }
    std::vector<GateId> factors;
    for (int j = 0; j < n; ++j) {
        std::vector<GateId> terms;
        for (int i = 0; i < n; ++i) {
            terms.push_back(builder.mul(builder.power(t, weight[static_cast<std::size_t>(i)]),
                                        x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
        factors.push_back(builder.sum(terms));
    }
    const GateId out = builder.product(factors);
    return {std::move(builder).finish(out), "t", exponent};
}

} // namespace nd
