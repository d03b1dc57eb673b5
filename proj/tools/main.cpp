// newton-degen: command line front end over the C interface.

#include "newton_degen/newton_degen.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

// A computation failed inside the library.
struct LibraryError {
    nd_status status;
    std::string message;
};

// Bad input on our side of the interface: unreadable files, malformed lists.
struct UsageError {
    std::string message;
};

void check(nd_status status) {
    if (status != ND_OK) throw LibraryError{status, nd_last_error()};
}

struct CircuitDeleter {
    void operator()(nd_circuit* c) const { nd_circuit_free(c); }
};
struct PolyDeleter {
    void operator()(nd_poly* p) const { nd_poly_free(p); }
};
using CircuitPtr = std::unique_ptr<nd_circuit, CircuitDeleter>;
using PolyPtr = std::unique_ptr<nd_poly, PolyDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
    std::string out = s ? s : "";
    nd_string_free(s);
    return out;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot read '" + path + "'"};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CircuitPtr load_circuit(const std::string& path) {
    nd_circuit* c = nullptr;
    check(nd_circuit_parse(read_input(path).c_str(), &c));
    return CircuitPtr(c);
}

std::string circuit_text(const CircuitPtr& c) {
    char* s = nullptr;
    check(nd_circuit_serialize(c.get(), &s));
    return take(s);
}

// Integers separated by blanks or commas.
std::vector<std::int64_t> integer_list(const std::string& text, const std::string& what) {
    std::string spaced = text;
    for (auto& ch : spaced) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream in(spaced);
    std::vector<std::int64_t> out;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError{"malformed " + what + ": '" + token + "'"};
        }
    }
    return out;
}

std::vector<int> int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    for (auto v : integer_list(text, what)) out.push_back(static_cast<int>(v));
    return out;
}

// "2;1,2,4;1,2,3,4" becomes one set per line.
std::string sets_to_lines(const std::string& text) {
    std::string out = text;
    for (auto& ch : out) {
        if (ch == ';') ch = '\n';
        else if (ch == ',') ch = ' ';
    }
    return out;
}

std::size_t term_budget() {
    const char* env = std::getenv("NEWTON_DEGEN_BUDGET");
    nd_degen_options defaults;
    nd_degen_options_init(&defaults);
    if (!env || !*env) return defaults.term_limit;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(env, &used);
        if (used != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError{std::string("NEWTON_DEGEN_BUDGET must be a positive integer, got '") + env + "'"};
    }
}

struct Output {
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw UsageError{"cannot write '" + path + "'"};
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
};

// Direction given inline or as a file holding one line of integers.
struct DirectionArg {
    std::string inline_value;
    std::string file;

    void add_to(CLI::App* app) {
        auto* a = app->add_option("-a,--direction", inline_value, "direction, e.g. \"1 -1 0\"");
        auto* f = app->add_option("--direction-file", file, "file with one line of integers");
        a->excludes(f);
        f->excludes(a);
    }
    bool given() const { return !inline_value.empty() || !file.empty(); }
    std::vector<std::int64_t> value() const {
        if (!given()) throw UsageError{"--direction or --direction-file is required"};
        return integer_list(file.empty() ? inline_value : read_input(file), "direction");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Newton polytope face restriction of arithmetic circuits"};
    app.require_subcommand(1);
    Output output;
    app.add_option("-o,--output", output.path, "write the result here instead of stdout");
    std::function<void()> action;

    // ---- expand
    std::string circuit_path;
    bool pretty = false;
    auto* expand = app.add_subcommand("expand", "expand a circuit into its polynomial");
    expand->add_option("circuit,-c,--circuit", circuit_path, "circuit file (stdin when omitted)");
    expand->add_flag("--pretty", pretty, "single line, leading term first");
    expand->callback([&] {
        action = [&] {
            const auto c = load_circuit(circuit_path);
            nd_poly* p = nullptr;
            check(nd_expand(c.get(), term_budget(), &p));
            const PolyPtr poly(p);
            char* s = nullptr;
            check(pretty ? nd_poly_to_string(poly.get(), &s) : nd_poly_format(poly.get(), &s));
            output.write(take(s));
        };
    });

    // ---- npt
    DirectionArg npt_direction;
    std::string system_path, lattice_path;
    auto* npt = app.add_subcommand("npt", "support points, faces, and constraint checks");
    npt->add_option("circuit,-c,--circuit", circuit_path, "circuit file (stdin when omitted)");
    npt_direction.add_to(npt);
    npt->add_option("--system", system_path, "check the support against this inequality system");
    auto* lattice = npt->add_option("--lattice", lattice_path, "list the integer points of a bounded system instead");
    lattice->excludes("--system");
    npt->callback([&] {
        action = [&] {
            if (!lattice_path.empty()) {
                char* s = nullptr;
                check(nd_system_lattice_points(read_input(lattice_path).c_str(), &s));
                output.write(take(s));
                return;
            }
            const auto c = load_circuit(circuit_path);
            nd_poly* p = nullptr;
            check(nd_expand(c.get(), term_budget(), &p));
            PolyPtr poly(p);
            std::string header;
            if (npt_direction.given()) {
                const auto a = npt_direction.value();
                std::int64_t value = 0;
                nd_poly* face = nullptr;
                check(nd_poly_face(poly.get(), a.data(), a.size(), &value, &face));
                poly.reset(face);
                header = "# min " + std::to_string(value) + "\n";
            }
            if (!system_path.empty()) {
                std::size_t violations = 0;
                char* report = nullptr;
                check(nd_poly_check_support(poly.get(), read_input(system_path).c_str(), &violations, &report));
                const std::string text = take(report);
                output.write(header + "violations: " + std::to_string(violations) + "\n" + text);
                if (violations > 0) {
                    throw LibraryError{ND_ERR_INVALID_FACE,
                                       std::to_string(violations) + " support point(s) violate the system"};
                }
                return;
            }
            char* s = nullptr;
            check(nd_poly_support(poly.get(), &s));
            output.write(header + take(s));
        };
    });

    // ---- degen
    DirectionArg degen_direction;
    std::int64_t b_hint = 0;
    std::int64_t max_nodes = 0;
    auto* degen = app.add_subcommand("degen", "face restriction along a direction, any circuit");
    degen->add_option("circuit,-c,--circuit", circuit_path, "circuit file (stdin when omitted)");
    degen_direction.add_to(degen);
    auto* b_opt = degen->add_option("--b", b_hint, "known minimum of <a,e> over the support");
    degen->add_option("--max-nodes", max_nodes, "interpolation node budget")->check(CLI::PositiveNumber);
    degen->callback([&] {
        action = [&] {
            const auto c = load_circuit(circuit_path);
            const auto a = degen_direction.value();
            nd_degen_options options;
            nd_degen_options_init(&options);
            options.term_limit = term_budget();
            if (max_nodes > 0) options.max_nodes = max_nodes;
            if (b_opt->count() > 0) {
                options.has_b_hint = 1;
                options.b_hint = b_hint;
            }
            nd_circuit* out = nullptr;
            check(nd_degen(c.get(), a.data(), a.size(), &options, &out, nullptr));
            output.write(circuit_text(CircuitPtr(out)));
        };
    });

    // ---- degen-monotone
    DirectionArg mono_direction;
    auto* mono = app.add_subcommand("degen-monotone", "gate-by-gate face restriction of a monotone circuit");
    mono->add_option("circuit,-c,--circuit", circuit_path, "circuit file (stdin when omitted)");
    mono_direction.add_to(mono);
    mono->callback([&] {
        action = [&] {
            const auto c = load_circuit(circuit_path);
            const auto a = mono_direction.value();
            nd_circuit* out = nullptr;
            check(nd_degen_monotone(c.get(), a.data(), a.size(), &out));
            output.write(circuit_text(CircuitPtr(out)));
        };
    });

    // ---- degen-eq
    std::string equalities_path;
    bool check_validity = false;
    auto* degen_eq = app.add_subcommand("degen-eq", "face restriction by tight supporting equalities");
    degen_eq->add_option("circuit,-c,--circuit", circuit_path, "circuit file (stdin when omitted)");
    degen_eq->add_option("-e,--equalities", equalities_path, "equality rows `a1 ... an = b`")->required();
    degen_eq->add_flag("--check", check_validity, "verify the rows against the expansion when it fits the budget");
    degen_eq->add_option("--max-nodes", max_nodes, "interpolation node budget")->check(CLI::PositiveNumber);
    degen_eq->callback([&] {
        action = [&] {
            const auto c = load_circuit(circuit_path);
            nd_degen_options options;
            nd_degen_options_init(&options);
            options.term_limit = term_budget();
            options.check_validity = check_validity;
            if (max_nodes > 0) options.max_nodes = max_nodes;
            nd_circuit* out = nullptr;
            check(nd_degen_equalities(c.get(), read_input(equalities_path).c_str(), &options, &out));
            output.write(circuit_text(CircuitPtr(out)));
        };
    });

    // ---- extract
    std::string param = "t";
    std::int64_t k = 0, lo = 0, hi = 0;
    auto* extract = app.add_subcommand("extract", "coefficient of a power of one variable");
    extract->add_option("circuit,-c,--circuit", circuit_path, "circuit file (stdin when omitted)");
    extract->add_option("-p,--param", param, "the variable to extract from")->capture_default_str();
    extract->add_option("-k,--k", k, "exponent")->required();
    auto* lo_opt = extract->add_option("--lo", lo, "lowest possible exponent");
    auto* hi_opt = extract->add_option("--hi", hi, "highest possible exponent");
    lo_opt->needs(hi_opt);
    hi_opt->needs(lo_opt);
    extract->add_option("--max-nodes", max_nodes, "interpolation node budget")->check(CLI::PositiveNumber);
    extract->callback([&] {
        action = [&] {
            const auto c = load_circuit(circuit_path);
            nd_degen_options defaults;
            nd_degen_options_init(&defaults);
            nd_circuit* out = nullptr;
            check(nd_extract(c.get(), param.c_str(), k, lo_opt->count() > 0, lo, hi,
                             max_nodes > 0 ? max_nodes : defaults.max_nodes, &out));
            output.write(circuit_text(CircuitPtr(out)));
        };
    });

    // ---- gen
    auto* gen = app.add_subcommand("gen", "generate circuits and constraint systems");
    gen->require_subcommand(1);
    std::uint64_t seed = 0;
    std::string graph_path, odd_sets_path, deleted_path, quiver_path;
    int n = 0, m = 0, d = 0, vars = 0, l = 0, size = 0;
    std::string partition_text, chain_text, word_text, sources_text, sigma_plus_text;
    std::int64_t sink = 0, sigma_minus = 0;
    bool want_system = false, want_direction = false, monotone = false, weakly_skew = false;

    const auto emit_circuit = [&](nd_circuit* c) { output.write(circuit_text(CircuitPtr(c))); };

    auto* g_tutte = gen->add_subcommand("tutte", "determinant circuit of the Tutte matrix");
    g_tutte->add_option("graph,-g,--graph", graph_path, "graph file (stdin when omitted)");
    g_tutte->callback([&] {
        action = [&] {
            nd_circuit* c = nullptr;
            check(nd_gen_tutte_det(read_input(graph_path).c_str(), &c));
            emit_circuit(c);
        };
    });

    auto* g_pf = gen->add_subcommand("pfaffian", "signed perfect matching polynomial");
    g_pf->add_option("graph,-g,--graph", graph_path, "graph file (stdin when omitted)");
    g_pf->callback([&] {
        action = [&] {
            nd_poly* p = nullptr;
            check(nd_gen_pfaffian(read_input(graph_path).c_str(), &p));
            const PolyPtr poly(p);
            char* s = nullptr;
            check(nd_poly_format(poly.get(), &s));
            output.write(take(s));
        };
    });

    auto* g_pface = gen->add_subcommand("pfaffian-face", "Tutte determinant restricted to a matching polytope face");
    g_pface->add_option("graph,-g,--graph", graph_path, "graph file (stdin when omitted)");
    g_pface->add_option("--odd-sets", odd_sets_path, "one odd vertex set per line");
    g_pface->add_option("--deleted", deleted_path, "edges `i j` forced to zero");
    g_pface->callback([&] {
        action = [&] {
            const std::string sets = odd_sets_path.empty() ? "" : read_input(odd_sets_path);
            const std::string removed = deleted_path.empty() ? "" : read_input(deleted_path);
            nd_degen_options options;
            nd_degen_options_init(&options);
            options.term_limit = term_budget();
            nd_circuit* c = nullptr;
            check(nd_gen_pfaffian_face(read_input(graph_path).c_str(), sets.c_str(), removed.c_str(), &options, &c));
            emit_circuit(c);
        };
    });

    auto* g_edmonds = gen->add_subcommand("edmonds", "perfect matching polytope inequalities");
    g_edmonds->add_option("graph,-g,--graph", graph_path, "graph file (stdin when omitted)");
    g_edmonds->add_option("--odd-sets", odd_sets_path, "only these odd sets (default: all of size >= 3)");
    g_edmonds->callback([&] {
        action = [&] {
            const std::string sets = odd_sets_path.empty() ? "" : read_input(odd_sets_path);
            char* s = nullptr;
            check(nd_gen_edmonds_system(read_input(graph_path).c_str(), odd_sets_path.empty() ? nullptr : sets.c_str(), &s));
            output.write(take(s));
        };
    });

    for (auto* sub : {gen->add_subcommand("kronecker", "generic Kronecker quiver semi-invariant"),
                      gen->add_subcommand("magic-squares", "magic square inequality system")}) {
        sub->add_option("-n,--n", n, "matrix size")->required();
        sub->add_option("-m,--m", m, "number of arrows")->required();
        sub->add_option("-d,--d", d, "block size")->required();
        if (sub->get_name() == "kronecker") {
            sub->add_option("--seed", seed, "seed for the coefficient matrices")->capture_default_str();
            sub->callback([&] {
                action = [&] {
                    nd_circuit* c = nullptr;
                    check(nd_gen_kronecker(n, m, d, seed, term_budget(), &c, nullptr));
                    emit_circuit(c);
                };
            });
        } else {
            sub->callback([&] {
                action = [&] {
                    char* s = nullptr;
                    check(nd_gen_magic_squares(n, m, d, &s));
                    output.write(take(s));
                };
            });
        }
    }

    auto* g_elem = gen->add_subcommand("elementary", "elementary symmetric polynomial");
    g_elem->add_option("--vars", vars, "number of variables")->required();
    g_elem->add_option("-l,--l", l, "degree")->required();
    g_elem->callback([&] {
        action = [&] {
            nd_circuit* c = nullptr;
            check(nd_gen_elementary(vars, l, &c));
            emit_circuit(c);
        };
    });

    auto* g_schur = gen->add_subcommand("schur", "Schur polynomial via Jacobi-Trudi");
    g_schur->add_option("--partition", partition_text, "parts, e.g. 2,1")->required();
    g_schur->add_option("--vars", vars, "number of variables")->required();
    g_schur->callback([&] {
        action = [&] {
            const auto parts = int_list(partition_text, "partition");
            nd_circuit* c = nullptr;
            check(nd_gen_schur(parts.data(), parts.size(), vars, &c));
            emit_circuit(c);
        };
    });

    auto* g_face = gen->add_subcommand("face-factors", "predicted Schur factorization of a permutohedron face");
    g_face->add_option("--partition", partition_text, "parts, e.g. 3,1")->required();
    g_face->add_option("--vars", vars, "number of variables")->required();
    g_face->add_option("--chain", chain_text, "nested sets, e.g. \"2;1,2,4;1,2,3,4\"")->required();
    g_face->add_flag("--print-direction", want_direction, "print the face direction instead of the circuit");
    g_face->callback([&] {
        action = [&] {
            const auto parts = int_list(partition_text, "partition");
            nd_circuit* c = nullptr;
            char* dir = nullptr;
            check(nd_gen_face_factors(parts.data(), parts.size(), vars, sets_to_lines(chain_text).c_str(), &c, &dir));
            CircuitPtr circuit(c);
            const std::string direction = take(dir);
            output.write(want_direction ? direction : circuit_text(circuit));
        };
    });

    auto* g_trace = gen->add_subcommand("trace", "trace of a word in generic matrices");
    g_trace->add_option("--word", word_text, "letters, e.g. 1,2,1")->required();
    g_trace->add_option("--size", size, "matrix size")->required();
    g_trace->callback([&] {
        action = [&] {
            const auto word = int_list(word_text, "word");
            nd_circuit* c = nullptr;
            check(nd_gen_trace(word.data(), word.size(), size, &c));
            emit_circuit(c);
        };
    });

    auto* g_sub = gen->add_subcommand("subspace", "subspace quiver semi-invariant");
    g_sub->add_option("--sources", sources_text, "source dimensions, e.g. 1,1,1")->required();
    g_sub->add_option("--sink", sink, "sink dimension")->required();
    g_sub->add_option("--sigma-plus", sigma_plus_text, "weights at the sources")->required();
    g_sub->add_option("--sigma-minus", sigma_minus, "weight at the sink")->required();
    g_sub->add_flag("--system", want_system, "print the f-matching system instead");
    g_sub->callback([&] {
        action = [&] {
            const auto sources = integer_list(sources_text, "source dimensions");
            const auto plus = integer_list(sigma_plus_text, "weights");
            if (plus.size() != sources.size()) throw UsageError{"--sigma-plus needs one weight per source"};
            if (want_system) {
                char* s = nullptr;
                check(nd_gen_subspace_system(sources.data(), plus.data(), sources.size(), sink, sigma_minus, &s));
                output.write(take(s));
            } else {
                nd_circuit* c = nullptr;
                check(nd_gen_subspace(sources.data(), plus.data(), sources.size(), sink, sigma_minus, &c));
                emit_circuit(c);
            }
        };
    });

    auto* g_schofield = gen->add_subcommand("schofield", "Schofield determinant of a quiver representation pair");
    g_schofield->add_option("quiver,-q,--quiver", quiver_path, "quiver file (stdin when omitted)");
    g_schofield->add_flag("--system", want_system, "print its inequality system instead");
    g_schofield->callback([&] {
        action = [&] {
            const std::string text = read_input(quiver_path);
            if (want_system) {
                char* s = nullptr;
                check(nd_gen_schofield_system(text.c_str(), &s));
                output.write(take(s));
            } else {
                nd_circuit* c = nullptr;
                check(nd_gen_schofield(text.c_str(), &c));
                emit_circuit(c);
            }
        };
    });

    auto* g_random = gen->add_subcommand("random", "seeded random circuit");
    g_random->add_option("--seed", seed, "random seed")->capture_default_str();
    g_random->add_flag("--monotone", monotone, "nonnegative constants only");
    g_random->add_flag("--weakly-skew", weakly_skew, "weakly skew multiplication gates");
    g_random->callback([&] {
        action = [&] {
            nd_circuit* c = nullptr;
            check(nd_gen_random(seed, monotone, weakly_skew, &c));
            emit_circuit(c);
        };
    });

    // ---- check
    std::string suite;
    auto* check_cmd = app.add_subcommand("check", "run an acceptance suite, or all of them");
    check_cmd->add_option("suite", suite, "suite name or 'all'")->required();
    check_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    int check_status = 0;
    check_cmd->callback([&] {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < nd_check_suite_count(); ++i) names.emplace_back(nd_check_suite_name(i));
        if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
            std::string known;
            for (const auto& s : names) known += " " + s;
            throw CLI::ValidationError("suite", "unknown suite '" + suite + "'; known:" + known + " all");
        }
        action = [&, names] {
            std::string report;
            for (const auto& name : names) {
                if (suite != "all" && suite != name) continue;
                int passed = 0;
                char* line = nullptr;
                check(nd_check_run(name.c_str(), seed, term_budget(), &passed, &line));
                const std::string text = take(line);
                std::cout << text << std::endl;
                report += text + "\n";
                if (!passed) check_status = exit_failure;
            }
            if (!output.path.empty()) output.write(report);
        };
    });

    // ---- demo-permanent
    int perm_n = 2;
    bool show_circuit = false;
    auto* demo = app.add_subcommand("demo-permanent", "the permanent as a coefficient of a product of sums");
    demo->add_option("-n,--n", perm_n, "matrix size")->capture_default_str();
    demo->add_flag("--show-circuit", show_circuit, "print the extracted circuit instead of its expansion");
    demo->callback([&] {
        action = [&] {
            nd_circuit* raw = nullptr;
            char* p = nullptr;
            std::int64_t exponent = 0;
            check(nd_gen_permanent_demo(perm_n, &raw, &p, &exponent));
            const CircuitPtr product(raw);
            const std::string param_name = take(p);
            nd_degen_options defaults;
            nd_degen_options_init(&defaults);
            nd_circuit* coefficient = nullptr;
            check(nd_extract(product.get(), param_name.c_str(), exponent, 0, 0, 0, defaults.max_nodes, &coefficient));
            const CircuitPtr extracted(coefficient);
            if (show_circuit) {
                output.write(circuit_text(extracted));
                return;
            }
            nd_poly* poly = nullptr;
            check(nd_expand(extracted.get(), term_budget(), &poly));
            const PolyPtr expanded(poly);
            char* s = nullptr;
            check(nd_poly_to_string(expanded.get(), &s));
            output.write(take(s));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    action();
    return check_status;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const LibraryError& e) {
        std::cout.flush();
        std::cerr << "error: " << nd_status_name(e.status) << ": " << e.message << '\n';
        return exit_failure;
    } catch (const UsageError& e) {
        std::cerr << "error: usage: " << e.message << '\n';
        return exit_usage;
    }
}
