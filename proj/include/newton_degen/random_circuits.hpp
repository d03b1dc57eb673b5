#pragma once

#include "newton_degen/circuit.hpp"
#include "newton_degen/polyoracle.hpp"

#include <random>

namespace nd {

struct RandomCircuitOptions {
    int max_variables = 6;
    int max_gates = 25;    // including input gates
    int max_degree = 8;    // syntactic total degree of every gate
    int min_constant = -5;
    int max_constant = 5;
    /// Every mul gate gets a leaf or a freshly built, singly used operand.
    bool weakly_skew = false;
};

/// Seeded random circuit; the output is the last gate, so every generated
/// gate is live unless an operand choice skipped it.
Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options = {});

/// Integer entries drawn uniformly from [lo, hi].
Direction random_direction(std::mt19937_64& rng, std::size_t length, std::int64_t lo = -3, std::int64_t hi = 3);

} // namespace nd
