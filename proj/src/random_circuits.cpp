#include "newton_degen/random_circuits.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>

namespace nd {

namespace {

class Generator {
public:
    Generator(std::mt19937_64& rng, const RandomCircuitOptions& options)
        : rng_(rng), options_(options), builder_(CircuitBuilder::Mode::verbatim) {}

    Circuit run() {
        const int m = uniform(1, options_.max_variables);
        for (int i = 1; i <= m; ++i) {
            const GateId id = builder_.variable("x" + std::to_string(i));
            record(id, 1, true);
            leaves_.push_back(id);
        }
        const int target = uniform(std::min(m + 2, options_.max_gates), options_.max_gates);
        GateId last = pool_.back();
        while (static_cast<int>(builder_.size()) < target) {
            const int room = target - static_cast<int>(builder_.size());
            const int roll = uniform(0, 99);
            if (roll < 12 && room > 1) {
                const GateId c = constant();
                leaves_.push_back(c);
                continue;
            }
            if (roll < 52) {
                last = add(pick(), pick());
            } else {
                last = mul(room);
            }
        }
        return std::move(builder_).finish(last);
    }

private:
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    void record(GateId id, int degree, bool shared) {
        if (degree_.size() <= id) degree_.resize(id + 1, 0);
        degree_[id] = degree;
        if (shared) pool_.push_back(id);
    }

    GateId constant() {
        const GateId id = builder_.constant(Rational(uniform(options_.min_constant, options_.max_constant)));
        record(id, 0, true);
        return id;
    }

    // Recent gates are favoured so that most of the circuit stays live.
    GateId pick() {
        if (uniform(0, 1) == 0) {
            const auto window = std::min<std::size_t>(pool_.size(), 4);
            return pool_[pool_.size() - 1 - static_cast<std::size_t>(uniform(0, static_cast<int>(window) - 1))];
        }
        return pool_[static_cast<std::size_t>(uniform(0, static_cast<int>(pool_.size()) - 1))];
    }

    GateId leaf() { return leaves_[static_cast<std::size_t>(uniform(0, static_cast<int>(leaves_.size()) - 1))]; }

    GateId add(GateId a, GateId b) {
        const GateId id = builder_.add(a, b);
        record(id, std::max(degree_[a], degree_[b]), true);
        return id;
    }

    GateId mul(int room) {
        const GateId a = pick();
        GateId b = options_.weakly_skew ? leaf() : pick();
        if (options_.weakly_skew && room >= 3 && uniform(0, 1) == 0) {
            // A private operand: one fresh gate over leaves, used only here.
            const GateId u = leaf();
            const GateId v = leaf();
            const bool product = uniform(0, 1) == 0 && degree_[a] + degree_[u] + degree_[v] <= options_.max_degree;
            b = product ? builder_.mul(u, v) : builder_.add(u, v);
            record(b, product ? degree_[u] + degree_[v] : std::max(degree_[u], degree_[v]), false);
        }
        if (degree_[a] + degree_[b] > options_.max_degree) {
            // Over the degree cap: fall back to a sum, keeping b private
            // still means it has exactly one user.
            return add(a, b);
        }
        const GateId id = builder_.mul(a, b);
        record(id, degree_[a] + degree_[b], true);
        return id;
    }

    std::mt19937_64& rng_;
    RandomCircuitOptions options_;
    CircuitBuilder builder_;
    std::vector<int> degree_;
    std::vector<GateId> pool_;   // gates later gates may reuse
    std::vector<GateId> leaves_; // inputs and constants
};

} // namespace

Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options) {
    if (options.max_variables < 1 || options.max_gates < options.max_variables + 1 || options.max_degree < 1 ||
        options.min_constant > options.max_constant) {
        fail(ErrorKind::invalid_argument, "inconsistent random circuit options");
    }
    return Generator(rng, options).run();
}

Direction random_direction(std::mt19937_64& rng, std::size_t length, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> pick(lo, hi);
    Direction out(length);
    for (auto& a : out) a = pick(rng);
    return out;
}

} // namespace nd
