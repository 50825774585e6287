#include "mealy/text_format.hpp"

#include <fstream>
#include <sstream>

#include "mealy/error.hpp"

namespace mealy {

namespace {

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::string_view strip_comment(std::string_view line) {
    if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
    return line;
}

std::vector<std::string> header(const std::vector<std::string>& toks, std::string_view key, std::size_t line_no) {
    if (toks.empty() || toks[0] != std::string(key) + ":")
        throw ParseError("line " + std::to_string(line_no) + ": expected '" + std::string(key) + ":'");
    return {toks.begin() + 1, toks.end()};
}

} // namespace

Automaton parse_automaton(std::string_view text, std::string name) {
    std::vector<std::string> states, alphabet;
    bool have_states = false, have_alphabet = false;
    std::vector<StateId> transition;
    std::vector<LetterId> output;
    std::vector<char> filled;

    auto lookup = [](const std::vector<std::string>& v, const std::string& s, std::size_t line_no, const char* what) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == s) return static_cast<std::uint32_t>(i);
        throw ParseError("line " + std::to_string(line_no) + ": unknown " + what + " '" + s + "'");
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = strip_comment(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        auto toks = split(line);
        if (toks.empty()) continue;
        if (!have_states) {
            states = header(toks, "states", line_no);
            have_states = true;
            continue;
        }
        if (!have_alphabet) {
            alphabet = header(toks, "alphabet", line_no);
            have_alphabet = true;
            transition.assign(states.size() * alphabet.size(), 0);
            output.assign(states.size() * alphabet.size(), 0);
            filled.assign(states.size() * alphabet.size(), 0);
            continue;
        }
        if (toks.size() != 4)
            throw ParseError("line " + std::to_string(line_no) + ": expected '<state> <read> <write> <next>'");
        const auto q = lookup(states, toks[0], line_no, "state");
        const auto x = lookup(alphabet, toks[1], line_no, "letter");
        const auto y = lookup(alphabet, toks[2], line_no, "letter");
        const auto r = lookup(states, toks[3], line_no, "state");
        const auto cell = q * alphabet.size() + x;
        if (filled[cell])
            throw ParseError("line " + std::to_string(line_no) + ": duplicate row for (" + toks[0] + ", " + toks[1] + ")");
        filled[cell] = 1;
        output[cell] = y;
        transition[cell] = r;
    }
    if (!have_states || !have_alphabet) throw ParseError("missing 'states:' or 'alphabet:' header");
    for (std::size_t cell = 0; cell < filled.size(); ++cell)
        if (!filled[cell])
            throw ParseError("missing row for (" + states[cell / alphabet.size()] + ", " +
                             alphabet[cell % alphabet.size()] + ")");
    try {
        return Automaton(std::move(states), std::move(alphabet), std::move(transition), std::move(output),
                         std::move(name));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Automaton load_automaton(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str(), path.stem().string());
}

std::string serialize(const Automaton& m) {
    std::string out = "states:";
    for (const auto& s : m.states()) out += " " + s;
    out += "\nalphabet:";
    for (const auto& x : m.alphabet()) out += " " + x;
    out += "\n";
    for (StateId q = 0; q < m.num_states(); ++q)
        for (LetterId x = 0; x < m.alphabet_size(); ++x)
            out += m.state_name(q) + " " + m.letter_name(x) + " " + m.letter_name(m.out(q, x)) + " " +
                   m.state_name(m.next(q, x)) + "\n";
    return out;
}

void save_automaton(const Automaton& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << serialize(m);
}

std::string to_dot(const Automaton& m) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::string out = "digraph " + quote(m.name().empty() ? "automaton" : m.name()) + " {\n  rankdir=LR;\n";
    for (const auto& s : m.states()) out += "  " + quote(s) + " [shape=circle];\n";
    for (StateId q = 0; q < m.num_states(); ++q)
        for (LetterId x = 0; x < m.alphabet_size(); ++x)
            out += "  " + quote(m.state_name(q)) + " -> " + quote(m.state_name(m.next(q, x))) + " [label=" +
                   quote(m.letter_name(x) + "|" + m.letter_name(m.out(q, x))) + "];\n";
    return out + "}\n";
}

} // namespace mealy
