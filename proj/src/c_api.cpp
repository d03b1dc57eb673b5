#include "newton_degen/newton_degen.h"

#include "newton_degen/acceptance.hpp"
#include "newton_degen/circuit.hpp"
#include "newton_degen/degen.hpp"
#include "newton_degen/error.hpp"
#include "newton_degen/generators.hpp"
#include "newton_degen/graph.hpp"
#include "newton_degen/polyoracle.hpp"
#include "newton_degen/quiver_polytopes.hpp"
#include "newton_degen/random_circuits.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <random>
#include <sstream>
#include <string>

struct nd_circuit {
    nd::Circuit value;
};

struct nd_poly {
    nd::SparsePoly value;
};

namespace {

thread_local std::string last_error;

nd_status status_of(nd::ErrorKind kind) {
    switch (kind) {
    case nd::ErrorKind::parse: return ND_ERR_PARSE;
    case nd::ErrorKind::invalid_argument: return ND_ERR_INVALID_ARGUMENT;
    case nd::ErrorKind::budget_exceeded: return ND_ERR_BUDGET_EXCEEDED;
    case nd::ErrorKind::zero_polynomial: return ND_ERR_ZERO_POLYNOMIAL;
    case nd::ErrorKind::invalid_face: return ND_ERR_INVALID_FACE;
    }
    return ND_ERR_INTERNAL;
}

// Runs `body`, turning every exception into a status code.
template <class F>
nd_status guarded(F&& body) {
    try {
        body();
        return ND_OK;
    } catch (const nd::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return ND_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return ND_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) nd::fail(nd::ErrorKind::invalid_argument, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// 0 selects the library default.
std::size_t term_limit_or_default(size_t limit) { return limit == 0 ? nd::default_term_limit : limit; }

nd_circuit* wrap(nd::Circuit c) { return new nd_circuit{std::move(c)}; }
nd_poly* wrap(nd::SparsePoly p) { return new nd_poly{std::move(p)}; }

nd::DegenOptions degen_options(const nd_degen_options* options) {
    nd::DegenOptions out;
    if (!options) return out;
    out.term_limit = term_limit_or_default(options->term_limit);
    out.max_nodes = options->max_nodes;
    if (options->has_b_hint) out.b_hint = options->b_hint;
    out.check_validity = options->check_validity != 0;
    return out;
}

nd::Direction direction_of(const int64_t* direction, size_t length) {
    if (length > 0) require(direction, "direction");
    return nd::Direction(direction, direction + length);
}

nd::EqualitySet equalities_of(const char* text) {
    require(text, "equalities");
    nd::InequalitySystem sys = nd::parse_system(text);
    if (!sys.inequalities.empty()) {
        nd::fail(nd::ErrorKind::parse, "an equality set may not contain inequality rows");
    }
    return sys.equalities;
}

std::string format_points(const std::vector<std::string>& variables, const std::vector<nd::Exponent>& points) {
    std::ostringstream out;
    out << "# vars:";
    for (const auto& v : variables) out << ' ' << v;
    out << '\n';
    for (const auto& e : points) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

nd::Partition partition_of(const int* parts, size_t length) {
    if (length > 0) require(parts, "partition");
    return nd::Partition(parts, parts + length);
}

nd::SubspaceQuiver subspace_of(const int64_t* source_dims, const int64_t* sigma_plus, size_t sources, int64_t sink_dim,
                               int64_t sigma_minus) {
    if (sources > 0) {
        require(source_dims, "source_dims");
        require(sigma_plus, "sigma_plus");
    }
    return {std::vector<std::int64_t>(source_dims, source_dims + sources),
            sink_dim,
            std::vector<std::int64_t>(sigma_plus, sigma_plus + sources),
            sigma_minus};
}

} // namespace

extern "C" {

const char* nd_version(void) { return "0.1.0"; }

const char* nd_status_name(nd_status status) {
    switch (status) {
    case ND_OK: return "ok";
    case ND_ERR_PARSE: return "parse";
    case ND_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ND_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case ND_ERR_ZERO_POLYNOMIAL: return "zero_polynomial";
    case ND_ERR_INVALID_FACE: return "invalid_face";
    case ND_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* nd_last_error(void) { return last_error.c_str(); }

void nd_string_free(char* s) { std::free(s); }

// ---- circuits ---------------------------------------------------------------

nd_status nd_circuit_parse(const char* text, nd_circuit** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = wrap(nd::parse_circuit(text));
    });
}

nd_status nd_circuit_serialize(const nd_circuit* c, char** out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = copy_string(nd::serialize_circuit(c->value));
    });
}

void nd_circuit_free(nd_circuit* c) { delete c; }

size_t nd_circuit_size(const nd_circuit* c) { return c ? c->value.size() : 0; }

size_t nd_circuit_num_variables(const nd_circuit* c) { return c ? c->value.variables().size() : 0; }

const char* nd_circuit_variable(const nd_circuit* c, size_t i) {
    if (!c || i >= c->value.variables().size()) return nullptr;
    return c->value.variables()[i].c_str();
}

int nd_circuit_is_monotone(const nd_circuit* c) { return c && nd::is_monotone(c->value); }

int nd_circuit_is_weakly_skew(const nd_circuit* c) { return c && nd::is_weakly_skew(c->value); }

nd_status nd_circuit_evaluate(const nd_circuit* c, const char* const* values, size_t count, char** out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        if (count != c->value.variables().size()) {
            nd::fail(nd::ErrorKind::invalid_argument, "expected " + std::to_string(c->value.variables().size()) + " values, got " +
                                                          std::to_string(count));
        }
        if (count > 0) require(values, "values");
        std::vector<nd::Rational> point;
        for (size_t i = 0; i < count; ++i) {
            require(values[i], "value");
            point.push_back(nd::parse_rational(values[i]));
        }
        *out = copy_string(nd::to_string(nd::evaluate(c->value, point)));
    });
}

// ---- polynomials ------------------------------------------------------------

nd_status nd_expand(const nd_circuit* c, size_t term_limit, nd_poly** out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = wrap(nd::expand(c->value, term_limit_or_default(term_limit)));
    });
}

nd_status nd_poly_parse(const char* text, nd_poly** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = wrap(nd::parse_terms(text));
    });
}

void nd_poly_free(nd_poly* p) { delete p; }

size_t nd_poly_num_terms(const nd_poly* p) { return p ? p->value.num_terms() : 0; }

nd_status nd_poly_format(const nd_poly* p, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = copy_string(nd::format_terms(p->value));
    });
}

nd_status nd_poly_to_string(const nd_poly* p, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = copy_string(nd::to_string(p->value));
    });
}

int nd_poly_equal(const nd_poly* a, const nd_poly* b) {
    if (!a || !b) return 0;
    try {
        std::vector<std::string> names = a->value.variables();
        for (const auto& v : b->value.variables()) {
            if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
        }
        return a->value.with_variables(names) == b->value.with_variables(names);
    } catch (const std::exception&) {
        return 0;
    }
}

nd_status nd_poly_support(const nd_poly* p, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = copy_string(format_points(p->value.variables(), p->value.support()));
    });
}

nd_status nd_poly_face(const nd_poly* p, const int64_t* direction, size_t length, int64_t* value, nd_poly** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        auto face = nd::face_min(p->value, direction_of(direction, length));
        if (value) *value = face.value;
        *out = wrap(std::move(face.restricted));
    });
}

nd_status nd_poly_restrict(const nd_poly* p, const char* equalities, nd_poly** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = wrap(nd::restrict_by_equalities(p->value, equalities_of(equalities)));
    });
}

nd_status nd_poly_check_support(const nd_poly* p, const char* system, size_t* violations, char** report) {
    return guarded([&] {
        require(p, "poly");
        require(system, "system");
        const nd::InequalitySystem sys = nd::parse_system(system);
        const auto support = p->value.with_variables(sys.variables).support();
        const auto found = nd::check_support(support, sys);
        if (violations) *violations = found.size();
        if (report) {
            std::ostringstream out;
            for (const auto& v : found) {
                out << (v.equality ? "equality " : "inequality ") << v.index + 1 << " at (";
                for (std::size_t i = 0; i < v.point.size(); ++i) out << (i ? " " : "") << v.point[i];
                out << "): " << v.lhs << (v.equality ? " != " : " < ") << v.rhs << '\n';
            }
            *report = copy_string(out.str());
        }
    });
}

nd_status nd_system_lattice_points(const char* system, char** out) {
    return guarded([&] {
        require(system, "system");
        require(out, "out");
        const nd::InequalitySystem sys = nd::parse_system(system);
        *out = copy_string(format_points(sys.variables, nd::integral_points(sys, nd::implied_box(sys))));
    });
}

// ---- face restriction -------------------------------------------------------

void nd_degen_options_init(nd_degen_options* options) {
    if (!options) return;
    const nd::DegenOptions defaults;
    options->term_limit = defaults.term_limit;
    options->max_nodes = defaults.max_nodes;
    options->has_b_hint = 0;
    options->b_hint = 0;
    options->check_validity = 0;
}

nd_status nd_degen(const nd_circuit* c, const int64_t* direction, size_t length, const nd_degen_options* options,
                   nd_circuit** out, int64_t* b) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        auto result = nd::newton_degenerate_detailed(c->value, direction_of(direction, length), degen_options(options));
        if (b) *b = result.b;
        *out = wrap(std::move(result.circuit));
    });
}

nd_status nd_degen_monotone(const nd_circuit* c, const int64_t* direction, size_t length, nd_circuit** out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = wrap(nd::monotone_newton_degenerate(c->value, direction_of(direction, length)));
    });
}

nd_status nd_degen_equalities(const nd_circuit* c, const char* equalities, const nd_degen_options* options,
                              nd_circuit** out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = wrap(nd::face_restrict_by_equalities(c->value, equalities_of(equalities), degen_options(options)));
    });
}

nd_status nd_tropical_bound(const nd_circuit* c, const int64_t* direction, size_t length, int64_t* value, int* finite) {
    return guarded([&] {
        require(c, "circuit");
        const auto bound = nd::tropical_bound(c->value, direction_of(direction, length));
        if (finite) *finite = bound.has_value();
        if (value) *value = bound.value_or(0);
    });
}

nd_status nd_extract(const nd_circuit* c, const char* param, int64_t k, int has_interval, int64_t lo, int64_t hi,
                     int64_t max_nodes, nd_circuit** out) {
    return guarded([&] {
        require(c, "circuit");
        require(param, "param");
        require(out, "out");
        const nd::DegreeInterval interval = has_interval ? nd::DegreeInterval{lo, hi} : nd::degree_interval(c->value, param);
        *out = wrap(nd::extract_coefficient(c->value, param, k, interval, max_nodes));
    });
}

// ---- generators ---------------------------------------------------------------

nd_status nd_gen_tutte_det(const char* graph, nd_circuit** out) {
    return guarded([&] {
        require(graph, "graph");
        require(out, "out");
        *out = wrap(nd::tutte_det_circuit(nd::parse_graph(graph)).circuit);
    });
}

nd_status nd_gen_pfaffian(const char* graph, nd_poly** out) {
    return guarded([&] {
        require(graph, "graph");
        require(out, "out");
        *out = wrap(nd::pfaffian_poly(nd::parse_graph(graph)));
    });
}

nd_status nd_gen_pfaffian_face(const char* graph, const char* odd_sets, const char* deleted,
                               const nd_degen_options* options, nd_circuit** out) {
    return guarded([&] {
        require(graph, "graph");
        require(out, "out");
        const auto g = nd::parse_graph(graph);
        const auto sets = odd_sets ? nd::parse_vertex_sets(odd_sets) : std::vector<std::vector<int>>{};
        const auto removed = deleted ? nd::parse_edge_list(deleted) : std::vector<nd::Edge>{};
        *out = wrap(nd::pfaffian_face_degenerate(g, sets, removed, degen_options(options)));
    });
}

nd_status nd_gen_edmonds_system(const char* graph, const char* odd_sets, char** out) {
    return guarded([&] {
        require(graph, "graph");
        require(out, "out");
        const auto g = nd::parse_graph(graph);
        std::optional<std::vector<std::vector<int>>> sets;
        if (odd_sets) sets = nd::parse_vertex_sets(odd_sets);
        *out = copy_string(nd::format_system(nd::edmonds_system(g, sets)));
    });
}

nd_status nd_gen_kronecker(int n, int m, int d, uint64_t seed, size_t term_limit, nd_circuit** out, int* attempts) {
    return guarded([&] {
        require(out, "out");
        auto generic = nd::generic_kronecker_semiinvariant(n, m, d, seed, 25, term_limit_or_default(term_limit));
        if (attempts) *attempts = generic.attempts;
        *out = wrap(std::move(generic.circuit));
    });
}

nd_status nd_gen_magic_squares(int n, int m, int d, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = copy_string(nd::format_system(nd::magic_square_system(n, m, d)));
    });
}

nd_status nd_gen_elementary(int n, int l, nd_circuit** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(nd::elementary_symmetric_circuit(n, l));
    });
}

nd_status nd_gen_schur(const int* parts, size_t length, int n, nd_circuit** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(nd::schur_circuit(partition_of(parts, length), n));
    });
}

nd_status nd_gen_face_factors(const int* parts, size_t length, int n, const char* chain, nd_circuit** out,
                              char** direction) {
    return guarded([&] {
        require(chain, "chain");
        require(out, "out");
        const auto face = nd::permutohedron_face(partition_of(parts, length), n, nd::parse_vertex_sets(chain));
        nd::Circuit c = nd::face_factor_circuit(face, n);
        if (direction) {
            std::string text;
            for (auto a : face.direction) text += (text.empty() ? "" : " ") + std::to_string(a);
            *direction = copy_string(text);
        }
        *out = wrap(std::move(c));
    });
}

nd_status nd_gen_trace(const int* word, size_t length, int n, nd_circuit** out) {
    return guarded([&] {
        require(out, "out");
        if (length > 0) require(word, "word");
        *out = wrap(nd::trace_monomial_circuit(std::vector<int>(word, word + length), n));
    });
}

nd_status nd_gen_subspace(const int64_t* source_dims, const int64_t* sigma_plus, size_t sources, int64_t sink_dim,
                          int64_t sigma_minus, nd_circuit** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(nd::subspace_quiver_matrix(subspace_of(source_dims, sigma_plus, sources, sink_dim, sigma_minus)).circuit);
    });
}

nd_status nd_gen_subspace_system(const int64_t* source_dims, const int64_t* sigma_plus, size_t sources, int64_t sink_dim,
                                 int64_t sigma_minus, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = copy_string(
            nd::format_system(nd::subspace_f_matching_system(subspace_of(source_dims, sigma_plus, sources, sink_dim, sigma_minus))));
    });
}

nd_status nd_gen_schofield(const char* quiver, nd_circuit** out) {
    return guarded([&] {
        require(quiver, "quiver");
        require(out, "out");
        *out = wrap(nd::schofield_matrix(nd::parse_quiver(quiver)).circuit);
    });
}

nd_status nd_gen_schofield_system(const char* quiver, char** out) {
    return guarded([&] {
        require(quiver, "quiver");
        require(out, "out");
        *out = copy_string(nd::format_system(nd::schofield_inequalities(nd::parse_quiver(quiver))));
    });
}

nd_status nd_gen_random(uint64_t seed, int monotone, int weakly_skew, nd_circuit** out) {
    return guarded([&] {
        require(out, "out");
        std::mt19937_64 rng(seed);
        nd::RandomCircuitOptions options;
        if (monotone) options.min_constant = 0;
        options.weakly_skew = weakly_skew != 0;
        *out = wrap(nd::random_circuit(rng, options));
    });
}

nd_status nd_gen_permanent_demo(int n, nd_circuit** out, char** param, int64_t* exponent) {
    return guarded([&] {
        require(out, "out");
        auto demo = nd::permanent_coefficient_demo(n);
        if (exponent) *exponent = demo.exponent;
        if (param) *param = copy_string(demo.param);
        *out = wrap(std::move(demo.circuit));
    });
}

// ---- acceptance suites ----------------------------------------------------------

size_t nd_check_suite_count(void) { return nd::suite_names().size(); }

const char* nd_check_suite_name(size_t i) {
    const auto& names = nd::suite_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

nd_status nd_check_run(const char* name, uint64_t seed, size_t term_limit, int* passed, char** line) {
    return guarded([&] {
        require(name, "name");
        const auto result = nd::run_suite(name, {seed, term_limit_or_default(term_limit)});
        if (passed) *passed = result.passed;
        if (line) *line = copy_string(nd::format_result(result));
    });
}

} // extern "C"
