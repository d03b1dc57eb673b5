#include "newton_degen/determinant.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <sstream>

namespace nd {

SymbolicMatrix::SymbolicMatrix(std::size_t r, std::size_t c, std::vector<std::string> vars)
    : rows(r), cols(c), variables(std::move(vars)), entries(r * c, SparsePoly(variables)) {}

std::size_t SymbolicMatrix::variable_index(std::string_view name) const {
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) fail(ErrorKind::invalid_argument, "matrix has no variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - variables.begin());
}

void SymbolicMatrix::add(std::size_t i, std::size_t j, const Rational& coeff,
                         std::initializer_list<std::string_view> factors) {
    Exponent e(variables.size(), 0);
    for (const auto name : factors) ++e[variable_index(name)];
    at(i, j).add_term(e, coeff);
}

GateId emit_poly(CircuitBuilder& builder, const SparsePoly& poly) {
    std::vector<GateId> terms;
    for (const auto& [e, c] : poly.terms()) {
        GateId term = builder.constant(c);
        for (std::size_t v = 0; v < e.size(); ++v) {
            // Repeated multiplication by the input keeps the entry weakly skew.
            for (std::int32_t k = 0; k < e[v]; ++k) term = builder.mul(term, builder.variable(poly.variables()[v]));
        }
        terms.push_back(term);
    }
    return builder.sum(terms);
}

namespace {

void accumulate(CircuitBuilder& builder, std::optional<GateId>& slot, GateId value) {
    slot = slot ? builder.add(*slot, value) : value;
}

} // namespace

GateId build_determinant(CircuitBuilder& builder, std::size_t n, const EntryFactory& entry) {
    if (n == 0) return builder.constant(Rational(1));
    using Slot = std::optional<GateId>;
    const GateId one = builder.constant(Rational(1));
    const GateId minus_one = builder.constant(Rational(-1));

    // start[h]: signed weight of finished clow sequences of the current
    // length whose next head is h (all earlier heads are smaller).
    std::vector<Slot> start(n, one);
    // walk[h][u]: open clow with head h currently at u.
    std::vector<std::vector<Slot>> walk(n, std::vector<Slot>(n));
    Slot result;

    for (std::size_t length = 0; length < n; ++length) {
        for (std::size_t h = 0; h < n; ++h) {
            if (start[h]) accumulate(builder, walk[h][h], *start[h]);
        }
        std::vector<std::vector<Slot>> next(n, std::vector<Slot>(n));
        std::vector<Slot> closed(n);
        for (std::size_t h = 0; h < n; ++h) {
            for (std::size_t u = h; u < n; ++u) {
                if (!walk[h][u]) continue;
                const GateId w = *walk[h][u];
                if (const auto a = entry(builder, u, h)) {
                    accumulate(builder, closed[h], builder.mul(w, *a));
                }
                if (length + 2 > n) continue;
                for (std::size_t v = h + 1; v < n; ++v) {
                    if (const auto a = entry(builder, u, v)) accumulate(builder, next[h][v], builder.mul(w, *a));
                }
            }
        }
        // Each finished clow contributes a factor -1.
        std::vector<Slot> negated(n);
        for (std::size_t h = 0; h < n; ++h) {
            if (closed[h]) negated[h] = builder.mul(minus_one, *closed[h]);
        }
        if (length + 1 == n) {
            for (std::size_t h = 0; h < n; ++h) {
                if (negated[h]) accumulate(builder, result, *negated[h]);
            }
            break;
        }
        std::vector<Slot> prefix(n);
        Slot running;
        for (std::size_t h = 0; h < n; ++h) {
            prefix[h] = running;
            if (negated[h]) accumulate(builder, running, *negated[h]);
        }
        start = std::move(prefix);
        walk = std::move(next);
    }
    if (!result) return builder.constant(Rational(0));
    return n % 2 == 0 ? *result : builder.mul(minus_one, *result);
}

Circuit determinant_circuit(const SymbolicMatrix& matrix) {
    if (matrix.rows != matrix.cols) {
        fail(ErrorKind::invalid_argument, "determinant of a non-square " + std::to_string(matrix.rows) + "x" +
                                              std::to_string(matrix.cols) + " matrix");
    }
    CircuitBuilder builder;
    for (const auto& name : matrix.variables) builder.variable(name);
    const GateId out = build_determinant(builder, matrix.rows, [&](CircuitBuilder& b, std::size_t i, std::size_t j) {
        return matrix.is_zero(i, j) ? std::nullopt : std::optional<GateId>(emit_poly(b, matrix.at(i, j)));
    });
    return std::move(builder).finish(out);
}

std::string format_matrix(const SymbolicMatrix& matrix) {
    std::ostringstream out;
    for (std::size_t i = 0; i < matrix.rows; ++i) {
        for (std::size_t j = 0; j < matrix.cols; ++j) out << (j ? " | " : "") << to_string(matrix.at(i, j));
        out << '\n';
    }
    return out.str();
}

} // namespace nd
