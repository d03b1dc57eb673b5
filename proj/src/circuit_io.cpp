#include "newton_degen/circuit.hpp"

#include "newton_degen/error.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

namespace nd {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

class LineParser {
public:
    LineParser(std::size_t line_number) : line_(line_number) {}

    [[noreturn]] void error(std::size_t column, const std::string& message) const {
        fail(ErrorKind::parse, "line " + std::to_string(line_) + ", column " + std::to_string(column) + ": " + message);
    }

    std::uint64_t gate_label(const Token& token) const {
        std::uint64_t value = 0;
        const auto* first = token.text.data() + 1;
        const auto* last = token.text.data() + token.text.size();
        if (token.text.size() < 2 || token.text.front() != 'g') error(token.column, "expected a gate label g<k>");
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) error(token.column, "expected a gate label g<k>");
        return value;
    }

private:
    std::size_t line_;
};

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char ch : name) {
        if (ch == '^' || ch == '*' || ch == '#' || ch == '=') return false;
    }
    return true;
}

} // namespace

Circuit parse_circuit(std::string_view text) {
    CircuitBuilder builder(CircuitBuilder::Mode::verbatim);
    std::unordered_map<std::uint64_t, GateId> labels;
    std::map<std::string, std::string> annotations;
    std::optional<std::uint64_t> last_label;
    std::optional<GateId> output;
    std::size_t line_number = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_number;
        const LineParser parser(line_number);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            const auto comment = tokenize(line.substr(hash + 1));
            if (!comment.empty() && comment.front().text.size() > 1 && comment.front().text.front() == '@') {
                std::string value;
                for (std::size_t i = 1; i < comment.size(); ++i) {
                    if (i > 1) value += ' ';
                    value += comment[i].text;
                }
                annotations[std::string(comment.front().text.substr(1))] = value;
            }
            line = line.substr(0, hash);
        }
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (output) parser.error(tokens.front().column, "nothing may follow the output line");

        if (tokens.front().text == "output") {
            if (tokens.size() != 2) parser.error(tokens.front().column, "expected 'output g<k>'");
            const auto label = parser.gate_label(tokens[1]);
            const auto it = labels.find(label);
            if (it == labels.end()) parser.error(tokens[1].column, "output refers to undefined gate g" + std::to_string(label));
            output = it->second;
            continue;
        }

        if (tokens.size() < 3 || tokens[1].text != "=") {
            parser.error(tokens.front().column, "expected 'g<k> = <op> ...'");
        }
        const auto label = parser.gate_label(tokens[0]);
        if (last_label && label <= *last_label) {
            parser.error(tokens[0].column, "gate ids must be strictly increasing");
        }
        const std::string_view op = tokens[2].text;

        const auto operand = [&](std::size_t index) {
            if (index >= tokens.size()) parser.error(tokens.back().column, "missing operand");
            const auto ref = parser.gate_label(tokens[index]);
            const auto it = labels.find(ref);
            if (it == labels.end()) {
                parser.error(tokens[index].column, "forward reference to undefined gate g" + std::to_string(ref));
            }
            return it->second;
        };
        const auto expect_arity = [&](std::size_t operands) {
            if (tokens.size() != 3 + operands) {
                parser.error(tokens[2].column, "'" + std::string(op) + "' takes " + std::to_string(operands) + " operand(s)");
            }
        };

        GateId id = 0;
        if (op == "input") {
            expect_arity(1);
            const std::string_view name = tokens[3].text;
            if (!valid_name(name)) parser.error(tokens[3].column, "invalid variable name '" + std::string(name) + "'");
            if (builder.has_variable(name)) {
                parser.error(tokens[3].column, "duplicate variable '" + std::string(name) + "'");
            }
            id = builder.variable(name);
        } else if (op == "const") {
            expect_arity(1);
            try {
                id = builder.constant(parse_rational(tokens[3].text));
            } catch (const Error& e) {
                parser.error(tokens[3].column, e.what());
            }
        } else if (op == "add" || op == "mul" || op == "sub") {
            expect_arity(2);
            const GateId lhs = operand(3);
            const GateId rhs = operand(4);
            id = op == "add" ? builder.add(lhs, rhs) : op == "mul" ? builder.mul(lhs, rhs) : builder.sub(lhs, rhs);
        } else if (op == "neg") {
            expect_arity(1);
            id = builder.neg(operand(3));
        } else {
            parser.error(tokens[2].column, "unknown operation '" + std::string(op) + "'");
        }
        labels[label] = id;
        last_label = label;
    }

    if (!output) fail(ErrorKind::parse, "line " + std::to_string(line_number) + ", column 1: missing output line");
    Circuit circuit = std::move(builder).finish(*output);
    for (const auto& [key, value] : annotations) circuit.set_annotation(key, value);
    return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::ostringstream out;
    for (const auto& [key, value] : circuit.annotations()) out << "# @" << key << ' ' << value << '\n';
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate& g = circuit.gate(static_cast<GateId>(i));
        out << 'g' << i + 1 << " = ";
        switch (g.kind) {
        case GateKind::input: out << "input " << circuit.variables()[g.lhs]; break;
        case GateKind::constant: out << "const " << to_string(circuit.constant_value(g)); break;
        case GateKind::add: out << "add g" << g.lhs + 1 << " g" << g.rhs + 1; break;
        case GateKind::mul: out << "mul g" << g.lhs + 1 << " g" << g.rhs + 1; break;
        }
        out << '\n';
    }
    out << "output g" << circuit.output() + 1 << '\n';
    return out.str();
}

} // namespace nd
