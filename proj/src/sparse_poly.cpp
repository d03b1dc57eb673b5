#include "newton_degen/sparse_poly.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nd {

SparsePoly SparsePoly::constant(std::vector<std::string> variables, const Rational& value) {
    SparsePoly p(std::move(variables));
    p.add_term(Exponent(p.num_variables(), 0), value);
    return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> variables, std::size_t index) {
    SparsePoly p(std::move(variables));
    if (index >= p.num_variables()) fail(ErrorKind::invalid_argument, "variable index out of range");
    Exponent e(p.num_variables(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void SparsePoly::add_term(const Exponent& exponent, const Rational& coeff) {
    if (exponent.size() != variables_.size()) {
        fail(ErrorKind::invalid_argument, "exponent length " + std::to_string(exponent.size()) +
                                              " does not match " + std::to_string(variables_.size()) + " variables");
    }
    if (coeff == 0) return;
    const auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SparsePoly::coefficient(const Exponent& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> SparsePoly::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

void SparsePoly::require_same_variables(const SparsePoly& other) const {
    if (variables_ != other.variables_) fail(ErrorKind::invalid_argument, "polynomials over different variable orders");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    require_same_variables(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
    require_same_variables(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    lhs.require_same_variables(rhs);
    const SparsePoly& big = lhs.num_terms() >= rhs.num_terms() ? lhs : rhs;
    const SparsePoly& small = &big == &lhs ? rhs : lhs;
    SparsePoly out(lhs.variables_);
    Exponent e(lhs.num_variables());
    Rational c;
    for (const auto& [se, sc] : small.terms_) {
        for (const auto& [be, bc] : big.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = se[i] + be[i];
            c = sc * bc;
            out.add_term(e, c);
        }
    }
    return out;
}

SparsePoly SparsePoly::with_variables(const std::vector<std::string>& variables) const {
    std::vector<std::ptrdiff_t> target(variables_.size(), -1);
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const auto it = std::find(variables.begin(), variables.end(), variables_[i]);
        if (it != variables.end()) target[i] = it - variables.begin();
    }
    SparsePoly out(variables);
    Exponent e(variables.size());
    for (const auto& [src, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == 0) continue;
            if (target[i] < 0) {
                fail(ErrorKind::invalid_argument, "variable '" + variables_[i] + "' occurs but is missing from the target order");
            }
            e[static_cast<std::size_t>(target[i])] = src[i];
        }
        out.add_term(e, c);
    }
    return out;
}

Rational SparsePoly::evaluate(std::span<const Rational> values) const {
    if (values.size() != variables_.size()) fail(ErrorKind::invalid_argument, "evaluate: wrong number of values");
    Rational total(0);
    Rational term;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::int32_t k = 0; k < e[i]; ++k) term *= values[i];
        }
        total += term;
    }
    return total;
}

std::int64_t SparsePoly::total_degree() const {
    std::int64_t best = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

// ---- text formats ----------------------------------------------------------

std::string format_terms(const SparsePoly& poly) {
    std::ostringstream out;
    for (const auto& [e, c] : poly.terms()) {
        out << to_string(c) << ' ';
        bool first = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) out << '*';
            out << poly.variables()[i] << '^' << e[i];
            first = false;
        }
        if (first) out << '1';
        out << '\n';
    }
    return out.str();
}

SparsePoly parse_terms(std::string_view text, std::vector<std::string> variables) {
    const bool infer = variables.empty();
    struct Raw {
        Rational coeff;
        std::vector<std::pair<std::string, std::int32_t>> factors;
    };
    std::vector<Raw> raw;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        std::string coeff_text, monomial, extra;
        if (!(in >> coeff_text)) continue;
        const auto where = [&] { return "line " + std::to_string(line_number) + ": "; };
        if (!(in >> monomial) || (in >> extra)) fail(ErrorKind::parse, where() + "expected '<coeff> <monomial>'");
        Raw term{parse_rational(coeff_text), {}};
        if (monomial != "1") {
            std::size_t start = 0;
            while (start <= monomial.size()) {
                const std::size_t stop = std::min(monomial.find('*', start), monomial.size());
                const std::string factor = monomial.substr(start, stop - start);
                start = stop + 1;
                const auto caret = factor.find('^');
                std::int32_t power = 1;
                std::string name = factor.substr(0, caret);
                if (caret != std::string::npos) {
                    const auto digits = std::string_view(factor).substr(caret + 1);
                    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
                    if (ec != std::errc{} || ptr != digits.data() + digits.size() || power < 0) {
                        fail(ErrorKind::parse, where() + "bad exponent in '" + factor + "'");
                    }
                }
                if (name.empty()) fail(ErrorKind::parse, where() + "empty variable name");
                if (std::find(variables.begin(), variables.end(), name) == variables.end()) {
                    if (!infer) fail(ErrorKind::parse, where() + "unknown variable '" + name + "'");
                    variables.push_back(name);
                }
                term.factors.emplace_back(name, power);
            }
        }
        raw.push_back(std::move(term));
    }
    SparsePoly poly(variables);
    for (const auto& term : raw) {
        Exponent e(variables.size(), 0);
        for (const auto& [name, power] : term.factors) {
            e[static_cast<std::size_t>(std::find(variables.begin(), variables.end(), name) - variables.begin())] += power;
        }
        poly.add_term(e, term.coeff);
    }
    return poly;
}

std::string to_string(const SparsePoly& poly) {
    if (poly.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        bool need_star = false;
        if (magnitude != 1 || constant_term) {
            out << to_string(magnitude);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << '*';
            out << poly.variables()[i];
            if (e[i] > 1) out << '^' << e[i];
            need_star = true;
        }
    }
    return out.str();
}

} // namespace nd
