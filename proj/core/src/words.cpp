#include "mealy/words.hpp"

#include <algorithm>

#include "mealy/error.hpp"

namespace mealy {

LetterWord LetterWord::prefix(std::size_t n) const {
    n = std::min(n, letters.size());
    return LetterWord(std::vector<LetterId>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(n)));
}

LetterWord LetterWord::concat(const LetterWord& other) const {
    LetterWord out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
    return out;
}

GroupWord GroupWord::from_states(const StateWord& w) {
    GroupWord g;
    g.letters.reserve(w.size());
    for (StateId q : w.states) g.letters.push_back({q, false});
    return g;
}

GroupWord GroupWord::power(StateId q, long long k) {
    GroupWord g;
    const bool inv = k < 0;
    const auto n = static_cast<std::size_t>(inv ? -k : k);
    g.letters.assign(n, Generator{q, inv});
    return g;
}

bool GroupWord::positive() const noexcept {
    return std::none_of(letters.begin(), letters.end(), [](const Generator& g) { return g.inverse; });
}

GroupWord GroupWord::reduced() const {
    std::vector<Generator> stack;
    stack.reserve(letters.size());
    for (const Generator& g : letters) {
        if (!stack.empty() && stack.back() == g.inverted())
            stack.pop_back();
        else
            stack.push_back(g);
    }
    return GroupWord(std::move(stack));
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverted());
    return out;
}

GroupWord GroupWord::operator*(const GroupWord& other) const {
    GroupWord out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
    return out;
}

std::size_t primitive_root_length(const std::vector<LetterId>& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return d;
    }
    return n;
}

EventuallyPeriodicWord::EventuallyPeriodicWord(LetterWord preperiod, LetterWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw PreconditionError("eventually periodic word needs a nonempty period");
    auto& p = period_.letters;
    p.resize(primitive_root_length(p));
    // Roll the period start leftward while the stream is unchanged.
    auto& pre = preperiod_.letters;
    while (!pre.empty() && pre.back() == p.back()) {
        pre.pop_back();
        std::rotate(p.rbegin(), p.rbegin() + 1, p.rend());
    }
}

LetterId EventuallyPeriodicWord::at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

LetterWord EventuallyPeriodicWord::prefix(std::size_t n) const {
    LetterWord out;
    out.letters.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.letters.push_back(at(i));
    return out;
}

std::size_t WordHash::operator()(const GroupWord& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
    for (const auto& g : w.letters) h = (h ^ (std::size_t{g.state} * 2 + (g.inverse ? 1 : 0))) * 0x100000001b3ULL;
    return h;
}

} // namespace mealy
