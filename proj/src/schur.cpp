#include "newton_degen/generators.hpp"

#include "newton_degen/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nd {

void validate_partition(const Partition& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 1) fail(ErrorKind::invalid_argument, "partition parts must be positive");
        if (i > 0 && alpha[i] > alpha[i - 1]) fail(ErrorKind::invalid_argument, "partition parts must be weakly decreasing");
    }
}

Partition conjugate(const Partition& alpha) {
    validate_partition(alpha);
    Partition out;
    const int width = alpha.empty() ? 0 : alpha.front();
    for (int i = 1; i <= width; ++i) {
        out.push_back(static_cast<int>(std::count_if(alpha.begin(), alpha.end(), [i](int a) { return a >= i; })));
    }
    return out;
}

std::vector<std::string> symmetric_variables(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

namespace {

// Fresh gates for e_l over the given inputs.
GateId emit_elementary(CircuitBuilder& builder, const std::vector<GateId>& x, int l) {
    if (l < 0 || l > static_cast<int>(x.size())) return builder.constant(Rational(0));
    // e[j] = e_j(x_1..x_i), updated in place from high j down.
    std::vector<GateId> e(static_cast<std::size_t>(l) + 1, builder.constant(Rational(0)));
    e[0] = builder.constant(Rational(1));
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto top = std::min<std::size_t>(static_cast<std::size_t>(l), i + 1);
        for (std::size_t j = top; j >= 1; --j) e[j] = builder.add(e[j], builder.mul(x[i], e[j - 1]));
    }
    return e[static_cast<std::size_t>(l)];
}

GateId emit_schur(CircuitBuilder& builder, const Partition& alpha, const std::vector<GateId>& x) {
    const Partition dual = conjugate(alpha);
    const std::size_t size = dual.size();
    return build_determinant(builder, size, [&](CircuitBuilder& b, std::size_t i, std::size_t j) -> std::optional<GateId> {
        const int k = dual[i] - static_cast<int>(i) + static_cast<int>(j);
        if (k < 0 || k > static_cast<int>(x.size())) return std::nullopt;
        return emit_elementary(b, x, k);
    });
}

} // namespace

Circuit elementary_symmetric_circuit(int n, int l) {
    if (n < 0) fail(ErrorKind::invalid_argument, "negative variable count");
    CircuitBuilder builder;
    std::vector<GateId> x;
    for (const auto& name : symmetric_variables(n)) x.push_back(builder.variable(name));
    const GateId out = emit_elementary(builder, x, l);
    return std::move(builder).finish(out);
}

Circuit schur_circuit(const Partition& alpha, int n) {
    if (n < 1) fail(ErrorKind::invalid_argument, "n must be positive");
    validate_partition(alpha);
    CircuitBuilder builder;
    std::vector<GateId> x;
    for (const auto& name : symmetric_variables(n)) x.push_back(builder.variable(name));
    const GateId out = emit_schur(builder, alpha, x);
    return std::move(builder).finish(out);
}

PermutohedronFace permutohedron_face(const Partition& alpha, int n, const std::vector<std::vector<int>>& chain) {
    validate_partition(alpha);
    if (n < 1) fail(ErrorKind::invalid_argument, "n must be positive");
    if (static_cast<int>(alpha.size()) > n) {
        fail(ErrorKind::invalid_argument, "partition has more than n parts, so s_alpha vanishes");
    }
    if (chain.empty()) fail(ErrorKind::invalid_argument, "empty chain");
    std::vector<std::set<int>> sets;
    for (const auto& s : chain) {
        std::set<int> members(s.begin(), s.end());
        if (members.size() != s.size()) fail(ErrorKind::invalid_argument, "chain set lists an element twice");
        if (!members.empty() && (*members.begin() < 1 || *members.rbegin() > n)) {
            fail(ErrorKind::invalid_argument, "chain element out of range 1.." + std::to_string(n));
        }
        if (!sets.empty()) {
            const auto& prev = sets.back();
            if (members.size() <= prev.size() || !std::includes(members.begin(), members.end(), prev.begin(), prev.end())) {
                fail(ErrorKind::invalid_argument, "chain is not strictly nested");
            }
        } else if (members.empty()) {
            fail(ErrorKind::invalid_argument, "chain sets must be nonempty");
        }
        sets.push_back(std::move(members));
    }
    if (static_cast<int>(sets.back().size()) != n) fail(ErrorKind::invalid_argument, "the last chain set must be all of 1..n");

    const auto k = static_cast<std::int64_t>(sets.size());
    PermutohedronFace face;
    face.direction.assign(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        std::int64_t first = 0;
        while (!sets[static_cast<std::size_t>(first)].count(j)) ++first;
        face.direction[static_cast<std::size_t>(j - 1)] = k - (first + 1);
    }

    Partition padded = alpha;
    padded.resize(static_cast<std::size_t>(n), 0);
    std::sort(padded.begin(), padded.end());
    std::size_t taken = 0;
    std::set<int> previous;
    for (const auto& s : sets) {
        SchurFactor factor;
        for (int v : s) {
            if (!previous.count(v)) factor.variables.push_back(v);
        }
        for (std::size_t i = 0; i < factor.variables.size(); ++i) {
            const int part = padded[taken++];
            if (part > 0) factor.partition.push_back(part);
        }
        std::sort(factor.partition.rbegin(), factor.partition.rend());
        face.factors.push_back(std::move(factor));
        previous = s;
    }
    return face;
}

Circuit face_factor_circuit(const PermutohedronFace& face, int n) {
    CircuitBuilder builder;
    std::vector<GateId> x;
    for (const auto& name : symmetric_variables(n)) x.push_back(builder.variable(name));
    std::vector<GateId> factors;
    for (const auto& factor : face.factors) {
        std::vector<GateId> block;
        for (int v : factor.variables) block.push_back(x.at(static_cast<std::size_t>(v - 1)));
        factors.push_back(emit_schur(builder, factor.partition, block));
    }
    const GateId out = builder.product(factors);
    return std::move(builder).finish(out);
}

Circuit trace_monomial_circuit(const std::vector<int>& word, int n) {
    if (word.empty()) fail(ErrorKind::invalid_argument, "empty word");
    if (n < 1) fail(ErrorKind::invalid_argument, "n must be positive");
    for (int letter : word) {
        if (letter < 1) fail(ErrorKind::invalid_argument, "letters are positive integers");
    }
    const std::set<int> letters(word.begin(), word.end());
    CircuitBuilder builder;
    const auto un = static_cast<std::size_t>(n);
    std::map<int, std::vector<GateId>> matrix; // row-major n x n
    for (int letter : letters) {
        auto& m = matrix[letter];
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                m.push_back(builder.variable("x" + std::to_string(letter) + "_" + std::to_string(i) + "_" + std::to_string(j)));
            }
        }
    }
    std::vector<GateId> diagonal;
    for (std::size_t start = 0; start < un; ++start) {
        // Row `start` of X_w1 * ... * X_wl, one letter at a time.
        const auto& first = matrix[word.front()];
        std::vector<GateId> row(first.begin() + static_cast<std::ptrdiff_t>(start * un),
                                first.begin() + static_cast<std::ptrdiff_t>((start + 1) * un));
        for (std::size_t p = 1; p < word.size(); ++p) {
            const auto& m = matrix[word[p]];
            const bool last = p + 1 == word.size();
            std::vector<GateId> next(un, 0);
            for (std::size_t j = 0; j < un; ++j) {
                if (last && j != start) continue;
                std::vector<GateId> terms;
                for (std::size_t l = 0; l < un; ++l) terms.push_back(builder.mul(row[l], m[l * un + j]));
                next[j] = builder.sum(terms);
            }
            row = std::move(next);
        }
        diagonal.push_back(row[start]);
    }
    const GateId out = builder.sum(diagonal);
    return std::move(builder).finish(out);
}

} // namespace nd
