#include "newton_degen/rational.hpp"

#include "newton_degen/error.hpp"

#include <cctype>

namespace nd {

namespace {

bool is_integer_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
        fail(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
    }
    std::string normalized(text);
    if (normalized.front() == '+') normalized.erase(0, 1);
    if (const auto pos = normalized.find("/+"); pos != std::string::npos) normalized.erase(pos + 1, 1);

    Rational value;
    if (mpq_set_str(value.get_mpq_t(), normalized.c_str(), 10) != 0) {
        fail(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
    }
    if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) {
        fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    }
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::zero_polynomial: return "zero-polynomial";
    case ErrorKind::invalid_face: return "invalid-face";
    }
    return "unknown";
}

} // namespace nd
