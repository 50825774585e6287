#include "mealy/action.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "mealy/error.hpp"

namespace mealy {

namespace {

void check_word(const Automaton& m, const GroupWord& w) {
    for (const auto& g : w.letters) {
        if (g.state >= m.num_states()) throw SymbolError("state id out of range");
        if (g.inverse && !m.is_invertible())
            throw PreconditionError("inverse generators need an invertible automaton");
    }
}

void check_letters(const Automaton& m, const LetterWord& s) {
    for (auto x : s.letters)
        if (x >= m.alphabet_size()) throw SymbolError("letter id out of range");
}

/// Feeds x through the generators (rightmost first), advancing their states.
LetterId step(const Automaton& m, const std::vector<Generator>& gens, std::vector<StateId>& states, LetterId x) {
    for (std::size_t i = gens.size(); i-- > 0;) {
        const StateId q = states[i];
        if (gens[i].inverse) {
            const LetterId y = m.out_inverse(q, x);
            states[i] = m.next(q, y);
            x = y;
        } else {
            states[i] = m.next(q, x);
            x = m.out(q, x);
        }
    }
    return x;
}

std::vector<StateId> initial_states(const GroupWord& w) {
    std::vector<StateId> st;
    st.reserve(w.size());
    for (const auto& g : w.letters) st.push_back(g.state);
    return st;
}

bool all_single_char(const std::vector<std::string>& names) {
    return std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1 && s != "'"; });
}

std::vector<std::string> tokenize(std::string_view text, bool compact) {
    std::vector<std::string> out;
    if (compact) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '\'' && !out.empty()) {
                out.back() += c;
                continue;
            }
            if (text.substr(i, 3) == "^-1" && !out.empty()) {
                out.back() += "^-1";
                i += 2;
                continue;
            }
            out.emplace_back(1, c);
        }
        return out;
    }
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

template <class Names>
std::string join(const Names& tokens, bool compact) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!compact && i) out += ' ';
        out += tokens[i];
    }
    return out;
}

} // namespace

LetterWord act(const Automaton& m, const GroupWord& w, const LetterWord& s) {
    check_word(m, w);
    check_letters(m, s);
    auto states = initial_states(w);
    LetterWord out;
    out.letters.reserve(s.size());
    for (LetterId x : s.letters) out.letters.push_back(step(m, w.letters, states, x));
    return out;
}

LetterId act_letter(const Automaton& m, const GroupWord& w, LetterId x) {
    check_word(m, w);
    auto states = initial_states(w);
    return step(m, w.letters, states, x);
}

EventuallyPeriodicWord act_inf(const Automaton& m, const GroupWord& w, const EventuallyPeriodicWord& e) {
    check_word(m, w);
    check_letters(m, e.preperiod());
    check_letters(m, e.period());
    auto states = initial_states(w);
    const std::size_t pre = e.preperiod_length(), per = e.period().size();
    std::vector<LetterId> out;
    std::unordered_map<std::vector<StateId>, std::size_t, WordHash> seen;
    for (std::size_t i = 0;; ++i) {
        if (i >= pre) {
            std::vector<StateId> key = states;
            key.push_back(static_cast<StateId>((i - pre) % per));
            auto [it, fresh] = seen.try_emplace(std::move(key), i);
            if (!fresh) {
                const std::size_t j = it->second;
                LetterWord head(std::vector<LetterId>(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(j)));
                LetterWord cycle(std::vector<LetterId>(out.begin() + static_cast<std::ptrdiff_t>(j), out.end()));
                return EventuallyPeriodicWord(std::move(head), std::move(cycle));
            }
        }
        out.push_back(step(m, w.letters, states, e.at(i)));
    }
}

StateWord dual_act(const Automaton& m, const StateWord& v, const LetterWord& s) {
    for (auto q : v.states)
        if (q >= m.num_states()) throw SymbolError("state id out of range");
    check_letters(m, s);
    StateWord out = v;
    for (LetterId x0 : s.letters) {
        LetterId x = x0;
        for (std::size_t i = out.size(); i-- > 0;) {
            const StateId q = out.states[i];
            out.states[i] = m.next(q, x);
            x = m.out(q, x);
        }
    }
    return out;
}

GroupWord section(const Automaton& m, const GroupWord& w, const LetterWord& s) {
    check_word(m, w);
    check_letters(m, s);
    auto states = initial_states(w);
    for (LetterId x : s.letters) step(m, w.letters, states, x);
    GroupWord out = w;
    for (std::size_t i = 0; i < states.size(); ++i) out.letters[i].state = states[i];
    return out;
}

LetterWord parse_letters(const Automaton& m, std::string_view text) {
    LetterWord out;
    for (const auto& tok : tokenize(text, all_single_char(m.alphabet()))) out.letters.push_back(m.letter_id(tok));
    return out;
}

StateWord parse_states(const Automaton& m, std::string_view text) {
    StateWord out;
    for (const auto& tok : tokenize(text, all_single_char(m.states()))) out.states.push_back(m.state_id(tok));
    return out;
}

GroupWord parse_group_word(const Automaton& m, std::string_view text) {
    GroupWord out;
    for (std::string tok : tokenize(text, all_single_char(m.states()))) {
        bool inv = false;
        if (tok.size() > 3 && tok.ends_with("^-1")) {
            tok.resize(tok.size() - 3);
            inv = true;
        } else if (tok.size() > 1 && tok.back() == '\'' && !m.find_state(tok)) {
            tok.pop_back();
            inv = true;
        }
        out.letters.push_back({m.state_id(tok), inv});
    }
    return out;
}

std::string format(const Automaton& m, const LetterWord& s) {
    std::vector<std::string> toks;
    for (auto x : s.letters) toks.push_back(m.letter_name(x));
    return join(toks, all_single_char(m.alphabet()));
}

std::string format(const Automaton& m, const StateWord& v) {
    std::vector<std::string> toks;
    for (auto q : v.states) toks.push_back(m.state_name(q));
    return join(toks, all_single_char(m.states()));
}

std::string format(const Automaton& m, const GroupWord& w) {
    std::vector<std::string> toks;
    for (const auto& g : w.letters) toks.push_back(m.state_name(g.state) + (g.inverse ? "'" : ""));
    return join(toks, all_single_char(m.states()));
}

std::string format(const Automaton& m, const EventuallyPeriodicWord& e) {
    return format(m, e.preperiod()) + "(" + format(m, e.period()) + ")^inf";
}

} // namespace mealy
