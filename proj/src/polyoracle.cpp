#include "newton_degen/polyoracle.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace nd {

std::int64_t LinearConstraint::lhs_at(std::span<const std::int32_t> point) const {
    if (point.size() != coeffs.size()) fail(ErrorKind::invalid_argument, "constraint and point dimensions differ");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) total += coeffs[i] * point[i];
    return total;
}

void InequalitySystem::add_equality(std::vector<std::int64_t> coeffs, std::int64_t rhs) {
    equalities.push_back({std::move(coeffs), rhs});
}

void InequalitySystem::add_inequality(std::vector<std::int64_t> coeffs, std::int64_t rhs) {
    inequalities.push_back({std::move(coeffs), rhs});
}

void InequalitySystem::add_upper_bound(std::vector<std::int64_t> coeffs, std::int64_t rhs) {
    for (auto& c : coeffs) c = -c;
    inequalities.push_back({std::move(coeffs), -rhs});
}

// ---- expansion -------------------------------------------------------------

SparsePoly expand(const Circuit& circuit, std::size_t term_limit) {
    if (term_limit == 0) fail(ErrorKind::invalid_argument, "term limit must be positive");
    const auto& vars = circuit.variables();
    const auto live = circuit.live_gates();

    std::vector<std::uint32_t> pending_uses(circuit.size(), 0);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        if (!live[i] || (g.kind != GateKind::add && g.kind != GateKind::mul)) continue;
        ++pending_uses[g.lhs];
        ++pending_uses[g.rhs];
    }

    std::vector<SparsePoly> value(circuit.size());
    const auto release = [&](GateId id) {
        if (--pending_uses[id] == 0 && id != circuit.output()) value[id] = SparsePoly();
    };

    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (!live[i]) continue;
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        switch (g.kind) {
        case GateKind::input: value[i] = SparsePoly::variable(vars, g.lhs); break;
        case GateKind::constant: value[i] = SparsePoly::constant(vars, circuit.constant_value(g)); break;
        case GateKind::add:
            value[i] = value[g.lhs];
            value[i] += value[g.rhs];
            break;
        case GateKind::mul: value[i] = value[g.lhs] * value[g.rhs]; break;
        }
        if (g.kind == GateKind::add || g.kind == GateKind::mul) {
            release(g.lhs);
            if (g.rhs != g.lhs || pending_uses[g.rhs] > 0) release(g.rhs);
        }
        if (value[i].num_terms() > term_limit) {
            fail(ErrorKind::budget_exceeded, "expansion of gate g" + std::to_string(i + 1) + " exceeds the budget of " +
                                                 std::to_string(term_limit) + " terms");
        }
    }
    return value[circuit.output()];
}

// ---- faces -----------------------------------------------------------------

namespace {

std::int64_t dot(std::span<const std::int64_t> a, const Exponent& e) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) total += a[i] * e[i];
    return total;
}

} // namespace

FaceRestriction face_min(const SparsePoly& poly, std::span<const std::int64_t> direction) {
    if (poly.is_zero()) fail(ErrorKind::zero_polynomial, "the zero polynomial has no Newton polytope");
    if (direction.size() != poly.num_variables()) {
        fail(ErrorKind::invalid_argument, "direction has length " + std::to_string(direction.size()) + ", expected " +
                                              std::to_string(poly.num_variables()));
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& [e, c] : poly.terms()) best = std::min(best, dot(direction, e));
    FaceRestriction out{best, SparsePoly(poly.variables())};
    for (const auto& [e, c] : poly.terms()) {
        if (dot(direction, e) == best) out.restricted.add_term(e, c);
    }
    return out;
}

SparsePoly restrict_by_equalities(const SparsePoly& poly, const EqualitySet& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].coeffs.size() != poly.num_variables()) {
            fail(ErrorKind::invalid_argument, "equality row " + std::to_string(r + 1) + " has the wrong length");
        }
    }
    SparsePoly out(poly.variables());
    for (const auto& [e, c] : poly.terms()) {
        bool tight = true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::int64_t lhs = dot(rows[r].coeffs, e);
            if (lhs < rows[r].rhs) {
                std::ostringstream msg;
                msg << "equality row " << r + 1 << " is not valid: support point (";
                for (std::size_t i = 0; i < e.size(); ++i) msg << (i ? "," : "") << e[i];
                msg << ") gives " << lhs << " < " << rows[r].rhs;
                fail(ErrorKind::invalid_face, msg.str());
            }
            tight = tight && lhs == rows[r].rhs;
        }
        if (tight) out.add_term(e, c);
    }
    return out;
}

SparsePoly restrict_to_face(const SparsePoly& poly, const FaceSpec& face) {
    if (const auto* direction = std::get_if<Direction>(&face)) return face_min(poly, *direction).restricted;
    return restrict_by_equalities(poly, std::get<EqualitySet>(face));
}

std::int64_t coefficient_complexity(const EqualitySet& rows) {
    std::int64_t total = 0;
    for (const auto& row : rows) {
        for (auto a : row.coeffs) total += a < 0 ? -a : a;
        total += row.rhs < 0 ? -row.rhs : row.rhs;
    }
    return total;
}

// ---- constraint systems ----------------------------------------------------

std::vector<Violation> check_support(std::span<const Exponent> support, const InequalitySystem& system) {
    std::vector<Violation> out;
    for (const auto& point : support) {
        if (point.size() != system.dimension()) {
            fail(ErrorKind::invalid_argument, "support point dimension differs from the system");
        }
        for (std::size_t i = 0; i < system.equalities.size(); ++i) {
            const auto lhs = system.equalities[i].lhs_at(point);
            if (lhs != system.equalities[i].rhs) out.push_back({point, true, i, lhs, system.equalities[i].rhs});
        }
        for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
            const auto lhs = system.inequalities[i].lhs_at(point);
            if (lhs < system.inequalities[i].rhs) out.push_back({point, false, i, lhs, system.inequalities[i].rhs});
        }
    }
    return out;
}

Box implied_box(const InequalitySystem& system) {
    const std::size_t n = system.dimension();
    constexpr auto unbounded = std::numeric_limits<std::int64_t>::max();
    Box box{std::vector<std::int64_t>(n, std::numeric_limits<std::int64_t>::min()), std::vector<std::int64_t>(n, unbounded)};
    std::vector<bool> nonnegative(n, false);
    for (const auto& row : system.inequalities) {
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (row.coeffs[i] != 0) {
                ++nonzero;
                where = i;
            }
        }
        if (nonzero == 1 && row.coeffs[where] > 0 && row.rhs <= 0) {
            nonnegative[where] = true;
            box.lower[where] = std::max<std::int64_t>(box.lower[where], 0);
        }
    }
    for (const auto& row : system.equalities) {
        if (std::any_of(row.coeffs.begin(), row.coeffs.end(), [](auto a) { return a < 0; })) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (row.coeffs[i] > 0) box.upper[i] = std::min(box.upper[i], std::max<std::int64_t>(row.rhs, 0) / row.coeffs[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!nonnegative[i] || box.upper[i] == unbounded) {
            const std::string name = i < system.variables.size() ? system.variables[i] : std::to_string(i + 1);
            fail(ErrorKind::invalid_argument, "coordinate '" + name + "' is not bounded by the system");
        }
    }
    return box;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

class PointSearch {
public:
    PointSearch(const InequalitySystem& system, const Box& box, std::uint64_t budget)
        : n_(system.dimension()), box_(box), budget_(budget) {
        for (const auto& row : system.equalities) rows_.push_back({&row, true});
        for (const auto& row : system.inequalities) rows_.push_back({&row, false});
        involving_.resize(n_);
        suffix_min_.assign(rows_.size(), std::vector<std::int64_t>(n_ + 1, 0));
        suffix_max_.assign(rows_.size(), std::vector<std::int64_t>(n_ + 1, 0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& a = rows_[r].row->coeffs;
            for (std::size_t d = n_; d-- > 0;) {
                const std::int64_t x = a[d] * box.lower[d];
                const std::int64_t y = a[d] * box.upper[d];
                suffix_min_[r][d] = suffix_min_[r][d + 1] + std::min(x, y);
                suffix_max_[r][d] = suffix_max_[r][d + 1] + std::max(x, y);
                if (a[d] != 0) involving_[d].push_back(r);
            }
        }
        partial_.assign(rows_.size(), 0);
        point_.assign(n_, 0);
    }

    std::vector<Exponent> run() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::int64_t lo = suffix_min_[r][0];
            const std::int64_t hi = suffix_max_[r][0];
            const std::int64_t b = rows_[r].row->rhs;
            if (rows_[r].equality ? (b < lo || b > hi) : hi < b) return {};
        }
        descend(0);
        return std::move(found_);
    }

private:
    struct RowRef {
        const LinearConstraint* row;
        bool equality;
    };

    void descend(std::size_t d) {
        if (d == n_) {
            found_.push_back(point_);
            return;
        }
        std::int64_t lo = box_.lower[d];
        std::int64_t hi = box_.upper[d];
        for (std::size_t r : involving_[d]) {
            const std::int64_t a = rows_[r].row->coeffs[d];
            const std::int64_t rest_lo = partial_[r] + suffix_min_[r][d + 1];
            const std::int64_t rest_hi = partial_[r] + suffix_max_[r][d + 1];
            const std::int64_t b = rows_[r].row->rhs;
            // need a*x in [b - rest_hi, b - rest_lo] (equality) or a*x >= b - rest_hi
            const std::int64_t need_lo = b - rest_hi;
            if (a > 0) {
                lo = std::max(lo, ceil_div(need_lo, a));
                if (rows_[r].equality) hi = std::min(hi, floor_div(b - rest_lo, a));
            } else {
                hi = std::min(hi, floor_div(need_lo, a));
                if (rows_[r].equality) lo = std::max(lo, ceil_div(b - rest_lo, a));
            }
            if (lo > hi) return;
        }
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (++nodes_ > budget_) {
                fail(ErrorKind::budget_exceeded, "integral point search exceeded " + std::to_string(budget_) + " nodes");
            }
            point_[d] = static_cast<std::int32_t>(v);
            for (std::size_t r : involving_[d]) partial_[r] += rows_[r].row->coeffs[d] * v;
            descend(d + 1);
            for (std::size_t r : involving_[d]) partial_[r] -= rows_[r].row->coeffs[d] * v;
        }
    }

    std::size_t n_;
    const Box& box_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<RowRef> rows_;
    std::vector<std::vector<std::size_t>> involving_;
    std::vector<std::vector<std::int64_t>> suffix_min_, suffix_max_;
    std::vector<std::int64_t> partial_;
    Exponent point_;
    std::vector<Exponent> found_;
};

} // namespace

std::vector<Exponent> integral_points(const InequalitySystem& system, const Box& box, std::uint64_t node_budget) {
    const std::size_t n = system.dimension();
    if (box.lower.size() != n || box.upper.size() != n) fail(ErrorKind::invalid_argument, "box dimension differs from the system");
    for (const auto* list : {&system.equalities, &system.inequalities}) {
        for (const auto& row : *list) {
            if (row.coeffs.size() != n) fail(ErrorKind::invalid_argument, "constraint dimension differs from the system");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (box.lower[i] > box.upper[i]) return {};
    }
    return PointSearch(system, box, node_budget).run();
}

bool in_convex_hull(std::span<const Exponent> points, const Exponent& p) {
    if (points.empty()) return false;
    const std::size_t dim = p.size();
    for (const auto& e : points) {
        if (e.size() != dim) fail(ErrorKind::invalid_argument, "point dimensions differ");
    }
    // Find lambda >= 0 with sum lambda_i points_i = p and sum lambda_i = 1.
    // Columns: the points, then one artificial per row, then the right-hand side.
    const std::size_t rows = dim + 1, n = points.size(), width = n + rows + 1;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
    for (std::size_t r = 0; r < rows; ++r) {
        Rational rhs = r < dim ? Rational(p[r]) : Rational(1);
        const Rational sign = rhs < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[r][j] = sign * (r < dim ? Rational(points[j][r]) : Rational(1));
        t[r][n + r] = 1;
        t[r][width - 1] = sign * rhs;
    }
    std::vector<std::size_t> basis(rows);
    std::iota(basis.begin(), basis.end(), n);
    // Reduced costs of "minimize the sum of artificials".
    std::vector<Rational> z(width);
    for (std::size_t j = 0; j < width; ++j) {
        if (j >= n && j < n + rows) continue;
        for (std::size_t r = 0; r < rows; ++r) z[j] -= t[r][j];
    }
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            const Rational ratio = t[r][width - 1] / t[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break; // cannot happen while the objective is bounded below by 0
        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rational f = t[r][enter];
            for (std::size_t j = 0; j < width; ++j) t[r][j] -= f * t[leave][j];
        }
        const Rational f = z[enter];
        for (std::size_t j = 0; j < width; ++j) z[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return z[width - 1] == 0;
}

// ---- text formats ----------------------------------------------------------

std::string format_system(const InequalitySystem& system) {
    std::ostringstream out;
    out << "# vars:";
    for (const auto& v : system.variables) out << ' ' << v;
    out << '\n';
    const auto emit = [&](const LinearConstraint& row, const char* op) {
        for (std::size_t i = 0; i < row.coeffs.size(); ++i) out << (i ? " " : "") << row.coeffs[i];
        out << ' ' << op << ' ' << row.rhs << '\n';
    };
    for (const auto& row : system.equalities) emit(row, "=");
    for (const auto& row : system.inequalities) emit(row, ">=");
    return out.str();
}

InequalitySystem parse_system(std::string_view text) {
    InequalitySystem system;
    std::optional<std::size_t> width;
    std::size_t line_number = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        const auto where = [&] { return "line " + std::to_string(line_number) + ": "; };
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            std::istringstream comment(line.substr(hash + 1));
            std::string tag;
            if (comment >> tag && tag == "vars:") {
                std::string name;
                system.variables.clear();
                while (comment >> name) system.variables.push_back(name);
            }
            line.resize(hash);
        }
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) words.push_back(w);
        if (words.empty()) continue;
        if (words.size() < 2) fail(ErrorKind::parse, where() + "expected 'a1 ... an (=|>=|<=) b'");
        const std::string op = words[words.size() - 2];
        if (op != "=" && op != ">=" && op != "<=") fail(ErrorKind::parse, where() + "expected '=', '>=' or '<='");
        LinearConstraint row;
        try {
            for (std::size_t i = 0; i + 2 < words.size(); ++i) row.coeffs.push_back(std::stoll(words[i]));
            row.rhs = std::stoll(words.back());
        } catch (const std::exception&) {
            fail(ErrorKind::parse, where() + "coefficients must be integers");
        }
        if (width && *width != row.coeffs.size()) fail(ErrorKind::parse, where() + "row length differs from earlier rows");
        width = row.coeffs.size();
        if (op == "=") system.equalities.push_back(std::move(row));
        else if (op == ">=") system.inequalities.push_back(std::move(row));
        else system.add_upper_bound(std::move(row.coeffs), row.rhs);
    }
    const std::size_t n = width.value_or(system.variables.size());
    if (system.variables.empty()) {
        for (std::size_t i = 0; i < n; ++i) system.variables.push_back("x" + std::to_string(i + 1));
    } else if (system.variables.size() != n) {
        fail(ErrorKind::parse, "the vars comment names " + std::to_string(system.variables.size()) +
                                   " variables but rows have " + std::to_string(n) + " coefficients");
    }
    return system;
}

Direction parse_direction(std::string_view text) {
    Direction out;
    std::istringstream in{std::string(text)};
    std::string word;
    while (in >> word) {
        if (word.front() == '#') break;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(word, &used));
            if (used != word.size()) throw std::invalid_argument(word);
        } catch (const std::exception&) {
            fail(ErrorKind::parse, "direction entries must be integers, got '" + word + "'");
        }
    }
    return out;
}

} // namespace nd
