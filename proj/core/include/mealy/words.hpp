#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mealy {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// Finite word over the alphabet. letters[0] is read first by the automaton.
struct LetterWord {
    std::vector<LetterId> letters;

    LetterWord() = default;
    LetterWord(std::vector<LetterId> l) : letters(std::move(l)) {}
    LetterWord(std::initializer_list<LetterId> l) : letters(l) {}

    static LetterWord repeat(LetterId x, std::size_t n) { return LetterWord(std::vector<LetterId>(n, x)); }

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    LetterId operator[](std::size_t i) const { return letters[i]; }
    LetterWord prefix(std::size_t n) const;
    LetterWord concat(const LetterWord& other) const;

    friend bool operator==(const LetterWord&, const LetterWord&) = default;
    friend auto operator<=>(const LetterWord&, const LetterWord&) = default;
};

/// Finite word over the states. The rightmost letter is the one acted on first
/// by a letter (left-infinite convention of the dual action).
struct StateWord {
    std::vector<StateId> states;

    StateWord() = default;
    StateWord(std::vector<StateId> s) : states(std::move(s)) {}
    StateWord(std::initializer_list<StateId> s) : states(s) {}

    std::size_t size() const noexcept { return states.size(); }
    bool empty() const noexcept { return states.empty(); }
    StateId operator[](std::size_t i) const { return states[i]; }

    friend bool operator==(const StateWord&, const StateWord&) = default;
    friend auto operator<=>(const StateWord&, const StateWord&) = default;
};

/// A state or a formal inverse of a state.
struct Generator {
    StateId state = 0;
    bool inverse = false;

    Generator inverted() const noexcept { return {state, !inverse}; }
    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Element of the free group on the states. Acts on letter words with the
/// rightmost generator applied first: act(uv, s) = act(u, act(v, s)).
struct GroupWord {
    std::vector<Generator> letters;

    GroupWord() = default;
    GroupWord(std::vector<Generator> g) : letters(std::move(g)) {}
    GroupWord(std::initializer_list<Generator> g) : letters(g) {}

    static GroupWord from_states(const StateWord& w);
    static GroupWord single(StateId q, bool inverse = false) { return GroupWord({Generator{q, inverse}}); }
    /// q^k, or (q^-1)^|k| when k is negative.
    static GroupWord power(StateId q, long long k);

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    bool positive() const noexcept;

    /// Free reduction: cancels adjacent q q^-1 and q^-1 q pairs.
    GroupWord reduced() const;
    GroupWord inverse() const;
    /// this * other, i.e. other is applied first.
    GroupWord operator*(const GroupWord& other) const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

/// Infinite word preperiod.period.period... kept in canonical form: the period
/// is primitive and the preperiod is as short as possible, so equal streams
/// have equal representations.
class EventuallyPeriodicWord {
public:
    /// Canonicalizes; throws PreconditionError if period is empty.
    EventuallyPeriodicWord(LetterWord preperiod, LetterWord period);

    static EventuallyPeriodicWord constant(LetterId x) { return {LetterWord{}, LetterWord{x}}; }

    const LetterWord& preperiod() const noexcept { return preperiod_; }
    const LetterWord& period() const noexcept { return period_; }
    /// h(w): length of the minimal preperiod.
    std::size_t preperiod_length() const noexcept { return preperiod_.size(); }

    LetterId at(std::size_t i) const;
    LetterWord prefix(std::size_t n) const;

    friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

private:
    LetterWord preperiod_;
    LetterWord period_;
};

/// Shortest d such that w is (w[0..d))^(|w|/d).
std::size_t primitive_root_length(const std::vector<LetterId>& w);

struct WordHash {
    template <class T>
    std::size_t operator()(const std::vector<T>& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (const auto& e : v) h = (h ^ std::hash<T>{}(e)) * 0x100000001b3ULL;
        return h;
    }
    std::size_t operator()(const LetterWord& w) const noexcept { return (*this)(w.letters); }
    std::size_t operator()(const StateWord& w) const noexcept { return (*this)(w.states); }
    std::size_t operator()(const GroupWord& w) const noexcept;
};

} // namespace mealy
