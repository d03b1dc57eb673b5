#pragma once

#include "newton_degen/circuit.hpp"
#include "newton_degen/error.hpp"
#include "newton_degen/polyoracle.hpp"
#include "newton_degen/sparse_poly.hpp"

#include <doctest.h>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace nd::test {

using Names = std::vector<std::string>;

// Polynomial in the term-line format, e.g. "1 x^2\n-3 x*y\n5 1".
inline SparsePoly poly(std::string_view lines, const Names& vars) { return parse_terms(lines, vars); }

inline SparsePoly expand_as(const Circuit& c, const Names& vars) { return expand(c).with_variables(vars); }

inline ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no nd::Error was thrown");
    return ErrorKind::parse;
}

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace nd::test
