#include "mealy/builtins.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "mealy/error.hpp"

namespace mealy {

namespace {

struct Row {
    const char* state;
    const char* read;
    const char* write;
    const char* next;
};

Automaton from_rows(std::vector<std::string> states, std::vector<std::string> alphabet, std::initializer_list<Row> rows,
                    std::string name) {
    const std::size_t na = alphabet.size();
    std::vector<StateId> transition(states.size() * na);
    std::vector<LetterId> output(states.size() * na);
    auto index = [](const std::vector<std::string>& v, const char* s) {
        return static_cast<std::uint32_t>(std::find(v.begin(), v.end(), s) - v.begin());
    };
    for (const auto& r : rows) {
        const auto cell = index(states, r.state) * na + index(alphabet, r.read);
        output[cell] = index(alphabet, r.write);
        transition[cell] = index(states, r.next);
    }
    return Automaton(std::move(states), std::move(alphabet), std::move(transition), std::move(output), std::move(name));
}

} // namespace

Automaton bellaterra() {
    return from_rows({"a", "b", "c"}, {"0", "1"},
                     {{"a", "0", "0", "b"},
                      {"a", "1", "1", "c"},
                      {"b", "0", "0", "c"},
                      {"b", "1", "1", "b"},
                      {"c", "0", "1", "a"},
                      {"c", "1", "0", "a"}},
                     "bellaterra");
}

Automaton aleshin() {
    // Decoded from the 2-lift rules: a-edges lift straight to c,c; b-edges
    // crossed to a,b; c-edges crossed to b,a.
    return from_rows({"a", "b", "c"}, {"0", "1"},
                     {{"a", "0", "1", "b"},
                      {"a", "1", "0", "c"},
                      {"b", "0", "1", "c"},
                      {"b", "1", "0", "b"},
                      {"c", "0", "0", "a"},
                      {"c", "1", "1", "a"}},
                     "aleshin");
}

Automaton adding_machine() {
    return from_rows({"r", "i"}, {"0", "1"},
                     {{"r", "1", "0", "r"}, {"r", "0", "1", "i"}, {"i", "0", "0", "i"}, {"i", "1", "1", "i"}}, "adding");
}

Automaton affine(unsigned k, unsigned m) {
    if (k == 0 || m == 0) throw PreconditionError("affine(k,m) needs k, m >= 1");
    if (std::gcd(k, m) != 1) throw PreconditionError("affine(k,m) needs gcd(k,m) = 1");
    std::vector<std::string> states, letters;
    for (unsigned q = 0; q < k; ++q) states.push_back(std::to_string(q));
    for (unsigned x = 0; x < m; ++x) letters.push_back(std::to_string(x));
    std::vector<StateId> transition(k * m);
    std::vector<LetterId> output(k * m);
    for (unsigned q = 0; q < k; ++q)
        for (unsigned x = 0; x < m; ++x) {
            // q + k*y = x + m*b: y is forced mod m, then b is an integer in [0, k).
            for (unsigned y = 0; y < m; ++y) {
                const long long lhs = static_cast<long long>(q) + static_cast<long long>(k) * y - x;
                if (lhs >= 0 && lhs % m == 0) {
                    output[q * m + x] = y;
                    transition[q * m + x] = static_cast<StateId>(lhs / m);
                    break;
                }
            }
        }
    std::string name = (k == 3 && m == 2) ? "div3" : "affine(" + std::to_string(k) + "," + std::to_string(m) + ")";
    return Automaton(std::move(states), std::move(letters), std::move(transition), std::move(output), std::move(name));
}

Automaton division_by_three() { return affine(3, 2); }

Automaton conjugator() {
    return from_rows({"a", "b", "c"}, {"x", "y"},
                     {{"a", "x", "x", "c"},
                      {"a", "y", "y", "a"},
                      {"b", "x", "y", "b"},
                      {"b", "y", "x", "b"},
                      {"c", "x", "x", "a"},
                      {"c", "y", "y", "c"}},
                     "conjugator");
}

Automaton bireversible52() {
    return from_rows({"a", "b", "c", "d", "e"}, {"0", "1"},
                     {{"a", "0", "1", "b"},
                      {"a", "1", "0", "a"},
                      {"b", "0", "0", "c"},
                      {"b", "1", "1", "e"},
                      {"c", "0", "0", "d"},
                      {"c", "1", "1", "d"},
                      {"d", "0", "0", "e"},
                      {"d", "1", "1", "c"},
                      {"e", "0", "1", "a"},
                      {"e", "1", "0", "b"}},
                     "bireversible52");
}

std::vector<std::string_view> builtin_names() {
    return {"bellaterra", "aleshin", "adding", "div3", "affine(k,m)", "conjugator", "bireversible52"};
}

Automaton builtin(std::string_view name) {
    if (name == "bellaterra") return bellaterra();
    if (name == "aleshin") return aleshin();
    if (name == "adding") return adding_machine();
    if (name == "div3") return division_by_three();
    if (name == "conjugator") return conjugator();
    if (name == "bireversible52") return bireversible52();
    if (name.starts_with("affine(") && name.ends_with(")")) {
        auto args = name.substr(7, name.size() - 8);
        const auto comma = args.find(',');
        if (comma != std::string_view::npos) {
            unsigned k = 0, m = 0;
            auto a = args.substr(0, comma), b = args.substr(comma + 1);
            auto ra = std::from_chars(a.data(), a.data() + a.size(), k);
            auto rb = std::from_chars(b.data(), b.data() + b.size(), m);
            if (ra.ec == std::errc{} && ra.ptr == a.data() + a.size() && rb.ec == std::errc{} &&
                rb.ptr == b.data() + b.size())
                return affine(k, m);
        }
        throw SymbolError("malformed builtin '" + std::string(name) + "', expected affine(k,m)");
    }
    throw SymbolError("unknown builtin automaton '" + std::string(name) + "'");
}

} // namespace mealy
