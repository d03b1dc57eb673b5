#pragma once

// Seeded end-to-end checks, one per acceptance property. Each suite cross
// checks the circuit constructions against the brute-force oracles in
// reference.hpp or against the expansion.

#include "newton_degen/polyoracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nd {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit = 0; // wall-clock budget in seconds; exceeding it fails the suite
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::size_t term_limit = default_term_limit;
};

/// monotone, pipeline, equalities, pfaffian, magic-squares, schur,
/// schofield, permanent, structure
const std::vector<std::string>& suite_names();

/// Throws invalid_argument for an unknown name.
CriterionResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// `PASS [3] equalities: ... (0.41 s, limit 120 s)`
std::string format_result(const CriterionResult& result);

/// Measured bound for the elementary symmetric circuits: gates <= c * n * l.
inline constexpr std::int64_t elementary_gate_constant = 3;

} // namespace nd
