#include "newton_degen/acceptance.hpp"

#include "newton_degen/degen.hpp"
#include "newton_degen/error.hpp"
#include "newton_degen/generators.hpp"
#include "newton_degen/graph.hpp"
#include "newton_degen/quiver_polytopes.hpp"
#include "newton_degen/random_circuits.hpp"
#include "newton_degen/reference.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace nd {

namespace {

// Collects failures; only the first few are kept in the detail line.
class Tally {
public:
    void fail(const std::string& what) {
        if (failures_++ < 3) notes_.push_back(what);
    }
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) fail(what);
    }
    bool ok() const { return failures_ == 0; }
    std::size_t checks() const { return checks_; }

    std::string summary(const std::string& what) const {
        std::ostringstream out;
        out << what;
        if (failures_ > 0) {
            out << "; " << failures_ << " failure(s)";
            for (const auto& n : notes_) out << " | " << n;
        }
        return out.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> notes_;
};

std::mt19937_64 suite_rng(const SuiteOptions& options, int number) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(number)};
    return std::mt19937_64(seq);
}

std::string describe_direction(const Direction& a) {
    std::string out;
    for (auto v : a) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

SparsePoly over(const SparsePoly& p, const std::vector<std::string>& variables) { return p.with_variables(variables); }

// ---- 1 ---------------------------------------------------------------------

void monotone_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    auto rng = suite_rng(options, 1);
    RandomCircuitOptions shape;
    shape.min_constant = 0;
    std::size_t zero = 0;
    for (int k = 0; k < 500; ++k) {
        const Circuit c = random_circuit(rng, shape);
        const Direction a = random_direction(rng, c.variables().size());
        const SparsePoly p = expand(c, options.term_limit);
        const Circuit d = monotone_newton_degenerate(c, a);
        const std::string tag = "circuit " + std::to_string(k) + " direction (" + describe_direction(a) + ")";
        tally.check(d.size() <= c.size(), tag + ": gate count grew");
        const SparsePoly got = expand(d, options.term_limit);
        if (p.is_zero()) {
            ++zero;
            tally.check(got.is_zero(), tag + ": zero input gave a nonzero face");
            continue;
        }
        tally.check(over(got, p.variables()) == face_min(p, a).restricted, tag + ": face mismatch");
    }
    detail = "500 monotone circuits (" + std::to_string(zero) + " zero)";
}

// ---- 2 and 3 ---------------------------------------------------------------

// Criteria 2 and 3 share one corpus.
struct CorpusItem {
    Circuit circuit;
    Direction direction;
    SparsePoly poly;
};

std::vector<CorpusItem> mixed_corpus(const SuiteOptions& options) {
    auto rng = suite_rng(options, 2);
    std::vector<CorpusItem> out;
    for (int k = 0; k < 200; ++k) {
        Circuit c = random_circuit(rng);
        Direction a = random_direction(rng, c.variables().size());
        SparsePoly p = expand(c, options.term_limit);
        out.push_back({std::move(c), std::move(a), std::move(p)});
    }
    return out;
}

void pipeline_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    std::size_t zero = 0, k = 0;
    DegenOptions degen;
    degen.term_limit = options.term_limit;
    for (const auto& item : mixed_corpus(options)) {
        const std::string tag = "circuit " + std::to_string(k++) + " direction (" + describe_direction(item.direction) + ")";
        if (item.poly.is_zero()) {
            ++zero;
            bool raised = false;
            try {
                newton_degenerate(item.circuit, item.direction, degen);
            } catch (const Error& e) {
                raised = e.kind() == ErrorKind::zero_polynomial;
            }
            tally.check(raised, tag + ": zero polynomial not reported");
            continue;
        }
        const Circuit d = newton_degenerate(item.circuit, item.direction, degen);
        tally.check(over(expand(d, options.term_limit), item.poly.variables()) ==
                        face_min(item.poly, item.direction).restricted,
                    tag + ": face mismatch");
    }
    detail = "200 mixed-sign circuits (" + std::to_string(zero) + " zero)";
}

void equalities_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    std::size_t zero = 0, k = 0;
    DegenOptions degen;
    degen.term_limit = options.term_limit;
    degen.check_validity = true;
    for (const auto& item : mixed_corpus(options)) {
        const std::string tag = "circuit " + std::to_string(k++) + " direction (" + describe_direction(item.direction) + ")";
        if (item.poly.is_zero()) {
            ++zero;
            continue;
        }
        const EqualitySet rows = tight_rows_for_face(item.poly, item.direction);
        const Circuit d = face_restrict_by_equalities(item.circuit, rows, degen);
        tally.check(over(expand(d, options.term_limit), item.poly.variables()) ==
                        restrict_by_equalities(item.poly, rows),
                    tag + ": face mismatch");
    }
    detail = "200 mixed-sign circuits (" + std::to_string(zero) + " zero, skipped)";
}

// ---- 4 ---------------------------------------------------------------------

Graph random_connected_graph(std::mt19937_64& rng) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    std::set<Edge> edges;
    // Random spanning tree: attach each vertex of a shuffled order to an earlier one.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const int u = order[i];
        const int v = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    const int max_edges = std::min(12, n * (n - 1) / 2);
    const int target = std::uniform_int_distribution<int>(n - 1, max_edges)(rng);
    std::uniform_int_distribution<int> vertex(1, n);
    while (static_cast<int>(edges.size()) < target) {
        const int u = vertex(rng), v = vertex(rng);
        if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph::make(n, {edges.begin(), edges.end()});
}

void pfaffian_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    auto rng = suite_rng(options, 4);
    std::size_t even = 0;
    for (int k = 0; k < 50; ++k) {
        const Graph g = random_connected_graph(rng);
        even += g.n % 2 == 0;
        const SparsePoly pf = pfaffian_poly(g);
        const SparsePoly det = over(expand(tutte_det_circuit(g).circuit, options.term_limit), g.edge_variables());
        tally.check(g.is_connected() && pf * pf == det, "graph " + std::to_string(k) + ": pf^2 != det\n" + format_graph(g));
    }

    struct FaceCase {
        std::string name;
        Graph graph;
        std::vector<std::vector<int>> odd_sets;
        std::vector<Edge> deleted;
    };
    const Graph c4 = Graph::make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const Graph k4 = Graph::make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    const Graph prism = Graph::make(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}, {1, 5}});
    const std::vector<FaceCase> cases = {
        {"C4", c4, {}, {}},
        {"C4 minus 12", c4, {}, {{1, 2}}},
        {"K4 {123}", k4, {{1, 2, 3}}, {}},
        {"K4 {123} minus 14", k4, {{1, 2, 3}}, {{1, 4}}},
        {"K4 {124} minus 12 34", k4, {{1, 2, 4}}, {{1, 2}, {3, 4}}},
        {"prism {123}", prism, {{1, 2, 3}}, {}},
        {"prism {123} {145}", prism, {{1, 2, 3}, {1, 4, 5}}, {}},
    };
    for (const auto& fc : cases) {
        const SparsePoly expected = reference::filtered_matching_sum(fc.graph, fc.odd_sets, fc.deleted);
        DegenOptions degen;
        degen.term_limit = options.term_limit;
        const Circuit face = pfaffian_face_degenerate(fc.graph, fc.odd_sets, fc.deleted, degen);
        tally.check(over(expand(face, options.term_limit), fc.graph.edge_variables()) == expected * expected,
                    fc.name + ": face is not the squared filtered matching sum");
    }
    detail = "50 random connected graphs (" + std::to_string(even) + " even), " + std::to_string(cases.size()) +
             " odd-set faces";
}

// ---- 5 ---------------------------------------------------------------------

void magic_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    std::ostringstream out;
    for (const auto& [n, m, d] : {std::tuple{2, 2, 1}, std::tuple{2, 2, 2}, std::tuple{3, 2, 1}}) {
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(d) + ")";
        try {
            const auto generic = generic_kronecker_semiinvariant(n, m, d, options.seed, 25, options.term_limit);
            // The generator already insists on equality; recheck independently.
            const InequalitySystem sys = magic_square_system(n, m, d);
            const auto points = integral_points(sys, implied_box(sys));
            // Same (i, j, k) order on both sides, so exponents compare positionally.
            const auto support = over(expand(generic.circuit, options.term_limit), kronecker_variables(n, m)).support();
            tally.check(support == points, tag + ": support differs from the magic squares");
            out << (out.tellp() > 0 ? ", " : "") << tag << " " << points.size() << " points in " << generic.attempts
                << " draw(s)";
        } catch (const Error& e) {
            tally.check(false, tag + ": " + e.what());
        }
    }
    detail = out.str();
}

// ---- 6 ---------------------------------------------------------------------

void partitions_upto(int total, std::vector<Partition>& out) {
    std::function<void(Partition&, int, int)> grow = [&](Partition& p, int left, int cap) {
        out.push_back(p);
        for (int part = std::min(left, cap); part >= 1; --part) {
            p.push_back(part);
            grow(p, left - part, part);
            p.pop_back();
        }
    };
    Partition p;
    grow(p, total, total);
}

std::string describe_partition(const Partition& alpha) {
    std::string out = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
    return out + ")";
}

void schur_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    std::vector<Partition> partitions;
    partitions_upto(6, partitions);
    std::size_t identities = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& alpha : partitions) {
            const SparsePoly got = expand(schur_circuit(alpha, n), options.term_limit);
            tally.check(over(got, symmetric_variables(n)) == reference::schur_tableaux(alpha, n),
                        "s" + describe_partition(alpha) + " in " + std::to_string(n) + " variables");
            ++identities;
        }
    }

    auto rng = suite_rng(options, 6);
    for (int k = 0; k < 20; ++k) {
        const int n = std::uniform_int_distribution<int>(2, 4)(rng);
        // A random partition with at most n parts and size 1..6.
        std::vector<Partition> pool;
        for (const auto& alpha : partitions) {
            if (!alpha.empty() && static_cast<int>(alpha.size()) <= n) pool.push_back(alpha);
        }
        const Partition alpha = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::vector<int>> chain;
        for (int cut = 1; cut <= n; ++cut) {
            if (cut == n || std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
                std::vector<int> prefix(order.begin(), order.begin() + cut);
                std::sort(prefix.begin(), prefix.end());
                chain.push_back(std::move(prefix));
            }
        }
        const PermutohedronFace face = permutohedron_face(alpha, n, chain);
        const SparsePoly s = expand(schur_circuit(alpha, n), options.term_limit);
        const SparsePoly predicted = over(expand(face_factor_circuit(face, n), options.term_limit), s.variables());
        tally.check(face_min(s, face.direction).restricted == predicted,
                    "chain " + std::to_string(k) + " for s" + describe_partition(alpha) + ": factorization fails");
    }
    detail = std::to_string(identities) + " Schur polynomials, 20 chains";
}

// ---- 7 ---------------------------------------------------------------------

std::vector<Quiver> small_type_a_quivers() {
    std::vector<Quiver> out;
    out.push_back({{"a", "b"}, {{0, 1}}});
    out.push_back({{"a", "b"}, {{1, 0}}});
    for (int mask = 0; mask < 4; ++mask) {
        Quiver q{{"a", "b", "c"}, {}};
        q.arrows.push_back((mask & 1) ? std::pair<std::size_t, std::size_t>{1, 0} : std::pair<std::size_t, std::size_t>{0, 1});
        q.arrows.push_back((mask & 2) ? std::pair<std::size_t, std::size_t>{2, 1} : std::pair<std::size_t, std::size_t>{1, 2});
        out.push_back(std::move(q));
    }
    return out;
}

// e.g. `b>a b>c V=(1,2,1) W=(2,2,2)`
std::string describe_rep(const QuiverRep& rep) {
    std::string out;
    for (const auto& [from, to] : rep.quiver.arrows) out += rep.quiver.vertices[from] + ">" + rep.quiver.vertices[to] + " ";
    const auto dims = [](const std::vector<std::int64_t>& d) {
        std::string s = "(";
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return s + ")";
    };
    return out + "V=" + dims(rep.dim_v) + " W=" + dims(rep.dim_w);
}

void schofield_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    std::size_t reps = 0, zero = 0, zero_feasible = 0, largest = 0;
    for (const auto& quiver : small_type_a_quivers()) {
        const std::size_t k = quiver.vertices.size();
        std::size_t combos = 1;
        for (std::size_t i = 0; i < 2 * k; ++i) combos *= 3;
        for (std::size_t code = 0; code < combos; ++code) {
            QuiverRep rep{quiver, std::vector<std::int64_t>(k), std::vector<std::int64_t>(k)};
            std::size_t rest = code;
            for (std::size_t i = 0; i < k; ++i, rest /= 3) rep.dim_v[i] = static_cast<std::int64_t>(rest % 3);
            for (std::size_t i = 0; i < k; ++i, rest /= 3) rep.dim_w[i] = static_cast<std::int64_t>(rest % 3);
            if (!rep.is_square()) continue;
            ++reps;
            const std::string tag = " " + describe_rep(rep);
            const MatrixCircuit mc = schofield_matrix(rep);
            largest = std::max(largest, mc.matrix.rows);
            const InequalitySystem sys = schofield_inequalities(rep);
            const SparsePoly p = over(expand(mc.circuit, options.term_limit), sys.variables);
            const auto support = p.support();
            tally.check(check_support(support, sys).empty(), "support violates the inequalities:" + tag);
            const auto points = integral_points(sys, implied_box(sys));
            if (p.is_zero()) {
                // A vanishing invariant has no Newton polytope to describe, while
                // its system may still be feasible through cancelling terms.
                ++zero;
                zero_feasible += !points.empty();
                continue;
            }
            if (points == support) {
                tally.check(true, "");
                continue;
            }
            // Tell unsaturated supports (extra points inside the hull) apart
            // from points the inequalities fail to cut off.
            std::size_t outside = 0;
            for (const auto& e : points) {
                if (!std::binary_search(support.begin(), support.end(), e) && !in_convex_hull(support, e)) ++outside;
            }
            tally.check(false, "lattice points differ from the support (" + std::to_string(points.size()) + " vs " +
                                   std::to_string(support.size()) + ", " + std::to_string(outside) +
                                   " outside its convex hull):" + tag);
        }
    }
    detail = std::to_string(reps) + " square representations up to " + std::to_string(largest) + "x" +
             std::to_string(largest) + "; (b) on the " + std::to_string(reps - zero) + " nonzero invariants; " +
             std::to_string(zero) + " vanish, " + std::to_string(zero_feasible) + " of them with a feasible system";
}

// ---- 8 ---------------------------------------------------------------------

void permanent_suite(const SuiteOptions&, Tally& tally, std::string& detail) {
    std::ostringstream out;
    for (int n : {2, 3}) {
        const PermanentDemo demo = permanent_coefficient_demo(n);
        const Circuit c = extract_coefficient(demo.circuit, demo.param, demo.exponent, degree_interval(demo.circuit, demo.param));
        const SparsePoly expected = reference::permanent(n);
        const SparsePoly got = over(expand(c), expected.variables());
        tally.check(got == expected, "perm" + std::to_string(n) + " mismatch: " + to_string(got));
        out << (n == 2 ? "" : ", ") << "perm" << n << " " << got.num_terms() << " terms via " << c.size() << " gates";
    }
    detail = out.str();
}

// ---- 9 ---------------------------------------------------------------------

void structure_suite(const SuiteOptions& options, Tally& tally, std::string& detail) {
    double worst = 0;
    for (int n = 1; n <= 20; ++n) {
        for (int l = 1; l <= n; ++l) {
            const auto gates = static_cast<std::int64_t>(elementary_symmetric_circuit(n, l).size());
            worst = std::max(worst, static_cast<double>(gates) / (n * l));
            tally.check(gates <= elementary_gate_constant * n * l,
                        "e_" + std::to_string(l) + " in " + std::to_string(n) + " variables uses " + std::to_string(gates) +
                            " gates");
        }
    }

    std::vector<std::pair<std::string, Circuit>> outputs;
    const Graph petersen_like = Graph::make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}, {2, 5}, {3, 6}});
    outputs.emplace_back("tutte det", tutte_det_circuit(petersen_like).circuit);
    outputs.emplace_back("pfaffian face", pfaffian_face_degenerate(petersen_like, {{1, 2, 3}}, {}));
    outputs.emplace_back("kronecker", generic_kronecker_semiinvariant(2, 2, 2, options.seed).circuit);
    outputs.emplace_back("elementary", elementary_symmetric_circuit(6, 3));
    outputs.emplace_back("schur", schur_circuit({3, 2, 1}, 4));
    outputs.emplace_back("face factors", face_factor_circuit(permutohedron_face({3, 1}, 4, {{2}, {1, 2, 4}, {1, 2, 3, 4}}), 4));
    outputs.emplace_back("trace", trace_monomial_circuit({1, 2, 1, 3}, 2));
    outputs.emplace_back("subspace", subspace_quiver_matrix({{1, 1, 1}, 2, {2, 2, 2}, 3}).circuit);
    const QuiverRep a3{{{"a", "b", "c"}, {{0, 1}, {1, 2}}}, {1, 1, 1}, {0, 1, 1}};
    outputs.emplace_back("schofield", schofield_matrix(a3).circuit);
    for (const auto& [name, c] : outputs) tally.check(is_weakly_skew(c), name + " output is not weakly skew");

    auto rng = suite_rng(options, 9);
    RandomCircuitOptions shape;
    shape.min_constant = 0;
    shape.weakly_skew = true;
    for (int k = 0; k < 100; ++k) {
        const Circuit c = random_circuit(rng, shape);
        const Direction a = random_direction(rng, c.variables().size());
        tally.check(is_weakly_skew(c), "random circuit " + std::to_string(k) + " is not weakly skew");
        tally.check(is_weakly_skew(monotone_newton_degenerate(c, a)),
                    "monotone pass broke weak skewness on circuit " + std::to_string(k));
    }
    std::ostringstream out;
    out.precision(3);
    out << "e_l gates/(n l) <= " << worst << " (c = " << elementary_gate_constant << "), " << outputs.size()
        << " generator outputs, 100 monotone circuits";
    detail = out.str();
}

struct Suite {
    int number;
    const char* name;
    double limit;
    void (*run)(const SuiteOptions&, Tally&, std::string&);
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {1, "monotone", 60, monotone_suite},       {2, "pipeline", 120, pipeline_suite},
        {3, "equalities", 120, equalities_suite},  {4, "pfaffian", 60, pfaffian_suite},
        {5, "magic-squares", 60, magic_suite},     {6, "schur", 120, schur_suite},
        {7, "schofield", 300, schofield_suite},    {8, "permanent", 30, permanent_suite},
        {9, "structure", 60, structure_suite},
    };
    return all;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites()) out.emplace_back(s.name);
        return out;
    }();
    return names;
}

CriterionResult run_suite(const std::string& name, const SuiteOptions& options) {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return name == s.name; });
    if (it == suites().end()) fail(ErrorKind::invalid_argument, "unknown suite '" + name + "'");
    CriterionResult result;
    result.number = it->number;
    result.name = it->name;
    result.limit = it->limit;
    Tally tally;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
        it->run(options, tally, detail);
    } catch (const Error& e) {
        tally.fail(std::string("aborted: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.detail = tally.summary(detail.empty() ? std::to_string(tally.checks()) + " checks" : detail);
    result.passed = tally.ok() && result.seconds <= result.limit;
    if (tally.ok() && !result.passed) result.detail += "; over the time limit";
    return result;
}

std::string format_result(const CriterionResult& result) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << (result.passed ? "PASS" : "FAIL") << " [" << result.number << "] " << result.name << ": " << result.detail << " ("
        << result.seconds << " s, limit " << static_cast<int>(result.limit) << " s)";
    return out.str();
}

} // namespace nd
