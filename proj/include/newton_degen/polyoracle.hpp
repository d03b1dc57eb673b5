#pragma once

#include "newton_degen/circuit.hpp"
#include "newton_degen/sparse_poly.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nd {

inline constexpr std::size_t default_term_limit = 1'000'000;

/// Integral linear constraint `<coeffs, e> (= or >=) rhs`.
struct LinearConstraint {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs = 0;

    std::int64_t lhs_at(std::span<const std::int32_t> point) const;
    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

using EqualitySet = std::vector<LinearConstraint>;
using Direction = std::vector<std::int64_t>;

/// Selects a face of a Newton polytope, either by a minimizing direction or
/// by a set of tight supporting equalities.
using FaceSpec = std::variant<Direction, EqualitySet>;

/// Integral equalities `<a,e> = b` and inequalities `<a,e> >= b`.
struct InequalitySystem {
    std::vector<std::string> variables;
    std::vector<LinearConstraint> equalities;
    std::vector<LinearConstraint> inequalities;

    std::size_t dimension() const { return variables.size(); }
    void add_equality(std::vector<std::int64_t> coeffs, std::int64_t rhs);
    void add_inequality(std::vector<std::int64_t> coeffs, std::int64_t rhs);
    /// `<a,e> <= b`, stored as `<-a,e> >= -b`.
    void add_upper_bound(std::vector<std::int64_t> coeffs, std::int64_t rhs);
};

// ---- expansion -------------------------------------------------------------

/// Expands the circuit gate by gate with sparse arithmetic. Throws
/// budget_exceeded, naming the gate, as soon as any intermediate polynomial
/// has more than `term_limit` terms.
SparsePoly expand(const Circuit& circuit, std::size_t term_limit = default_term_limit);

// ---- faces -----------------------------------------------------------------

struct FaceRestriction {
    std::int64_t value = 0;  // min <a,e> over the support
    SparsePoly restricted;   // terms attaining it
};

FaceRestriction face_min(const SparsePoly& poly, std::span<const std::int64_t> direction);

/// Keeps the terms on which every row is tight. Every row must be a valid
/// supporting halfspace `<a,e> >= b` for the support, otherwise invalid_face.
SparsePoly restrict_by_equalities(const SparsePoly& poly, const EqualitySet& rows);

SparsePoly restrict_to_face(const SparsePoly& poly, const FaceSpec& face);

/// Sum of |a_ij| plus |b_i| over all rows.
std::int64_t coefficient_complexity(const EqualitySet& rows);

// ---- constraint systems ----------------------------------------------------

struct Violation {
    Exponent point;
    bool equality = false;   // which list the constraint came from
    std::size_t index = 0;   // position in that list
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

std::vector<Violation> check_support(std::span<const Exponent> support, const InequalitySystem& system);

/// Inclusive per-coordinate bounds.
struct Box {
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;
};

/// Bounds implied by `x >= 0` rows together with equalities whose
/// coefficients are all nonnegative. Throws invalid_argument if some
/// coordinate stays unbounded.
Box implied_box(const InequalitySystem& system);

inline constexpr std::uint64_t default_search_budget = 20'000'000;

/// All integer points of the box satisfying the system, in lexicographic
/// order. Depth-first search with interval pruning; throws budget_exceeded
/// after `node_budget` search nodes.
std::vector<Exponent> integral_points(const InequalitySystem& system, const Box& box,
                                      std::uint64_t node_budget = default_search_budget);

/// Exact membership test for conv(points): phase one of the simplex method over
/// the rationals, with Bland's rule so it always terminates.
bool in_convex_hull(std::span<const Exponent> points, const Exponent& p);

/// Lines `a1 ... an = b` / `a1 ... an >= b`, preceded by a `# vars:` comment.
std::string format_system(const InequalitySystem& system);
InequalitySystem parse_system(std::string_view text);

/// A direction file holds one line of integers.
Direction parse_direction(std::string_view text);

} // namespace nd
