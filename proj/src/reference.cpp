#include "newton_degen/reference.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace nd::reference {

SparsePoly leibniz_determinant(const SymbolicMatrix& m) {
    if (m.rows != m.cols) fail(ErrorKind::invalid_argument, "determinant of a non-square matrix");
    const std::size_t n = m.rows;
    SparsePoly total(m.variables);
    if (n == 0) return SparsePoly::constant(m.variables, Rational(1));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) zero = m.is_zero(i, perm[i]);
        if (zero) continue;
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        SparsePoly term = SparsePoly::constant(m.variables, Rational(inversions % 2 == 0 ? 1 : -1));
        for (std::size_t i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

SparsePoly schur_tableaux(const Partition& alpha, int n) {
    validate_partition(alpha);
    const auto vars = symmetric_variables(n);
    SparsePoly total(vars);
    // Cells in row-major order; each cell is bounded below by its left
    // neighbour (weak) and the cell above (strict).
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < alpha.size(); ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(alpha[r]); ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> filling(alpha.size());
    for (std::size_t r = 0; r < alpha.size(); ++r) filling[r].assign(static_cast<std::size_t>(alpha[r]), 0);
    Exponent content(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> fill = [&](std::size_t index) {
        if (index == cells.size()) {
            total.add_term(content, Rational(1));
            return;
        }
        const auto [r, c] = cells[index];
        int low = 1;
        if (c > 0) low = std::max(low, filling[r][c - 1]);
        if (r > 0) low = std::max(low, filling[r - 1][c] + 1);
        for (int v = low; v <= n; ++v) {
            filling[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            fill(index + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0);
    return total;
}

SparsePoly elementary_symmetric(int n, int l) {
    const auto vars = symmetric_variables(n);
    SparsePoly total(vars);
    if (l < 0 || l > n) return total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != l) continue;
        Exponent e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::int32_t>((mask >> i) & 1U);
        total.add_term(e, Rational(1));
    }
    return total;
}

SparsePoly permanent(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back("x" + std::to_string(i) + std::to_string(j));
    SparsePoly total(vars);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Exponent e(vars.size(), 0);
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])] = 1;
        total.add_term(e, Rational(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

SparsePoly filtered_matching_sum(const Graph& g, const std::vector<std::vector<int>>& odd_sets,
                                 const std::vector<Edge>& deleted) {
    std::set<Edge> removed;
    for (auto e : deleted) {
        if (e.first > e.second) std::swap(e.first, e.second);
        removed.insert(e);
    }
    std::vector<std::set<int>> sets;
    for (const auto& s : odd_sets) sets.emplace_back(s.begin(), s.end());
    SparsePoly total(g.edge_variables());
    for_each_perfect_matching(g, [&](const std::vector<Edge>& matching) {
        for (const auto& e : matching) {
            if (removed.count(e)) return;
        }
        for (const auto& s : sets) {
            int crossing = 0;
            for (const auto& e : matching) crossing += s.count(e.first) != s.count(e.second);
            if (crossing != 1) return;
        }
        Exponent x(g.edges.size(), 0);
        for (const auto& e : matching) x[g.edge_index(e)] = 1;
        total.add_term(x, Rational(matching_sign(matching)));
    });
    return total;
}

SparsePoly trace_monomial(const std::vector<int>& word, int n) {
    const Circuit shape = trace_monomial_circuit(word, n); // only for the variable order
    const auto& vars = shape.variables();
    const auto un = static_cast<std::size_t>(n);
    const auto matrix_of = [&](int letter) {
        std::vector<SparsePoly> m;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const std::string name = "x" + std::to_string(letter) + "_" + std::to_string(i) + "_" + std::to_string(j);
                const auto it = std::find(vars.begin(), vars.end(), name);
                m.push_back(SparsePoly::variable(vars, static_cast<std::size_t>(it - vars.begin())));
            }
        }
        return m;
    };
    std::vector<SparsePoly> product = matrix_of(word.front());
    for (std::size_t p = 1; p < word.size(); ++p) {
        const auto factor = matrix_of(word[p]);
        std::vector<SparsePoly> next(un * un, SparsePoly(vars));
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j)
                for (std::size_t l = 0; l < un; ++l) next[i * un + j] += product[i * un + l] * factor[l * un + j];
        product = std::move(next);
    }
    SparsePoly trace(vars);
    for (std::size_t i = 0; i < un; ++i) trace += product[i * un + i];
    return trace;
}

} // namespace nd::reference
