#pragma once

#include <string>
#include <string_view>

#include "mealy/automaton.hpp"
#include "mealy/words.hpp"

namespace mealy {

/// sigma~_w(s). Length preserving; inverse generators need an invertible automaton.
LetterWord act(const Automaton& m, const GroupWord& w, const LetterWord& s);

/// Image of an eventually periodic infinite word, in canonical form.
/// The pair (states of w, position in the period) ranges over a finite set, so
/// the image is found by detecting the first repeated configuration.
EventuallyPeriodicWord act_inf(const Automaton& m, const GroupWord& w, const EventuallyPeriodicWord& e);

/// tau~_s(v) = v^s: letters of s act one after another (s[0] first) and each
/// letter walks v from its rightmost symbol leftward.
StateWord dual_act(const Automaton& m, const StateWord& v, const LetterWord& s);

/// Section w^s of a group element: the element acting below the vertex s,
/// so that act(w, s t) = act(w, s) act(section(w, s), t).
/// For positive words this is dual_act on the corresponding state word.
GroupWord section(const Automaton& m, const GroupWord& w, const LetterWord& s);

/// Single-letter helpers: image of x under w and the section at x.
LetterId act_letter(const Automaton& m, const GroupWord& w, LetterId x);

// Text helpers. When every symbol is a single character words are written
// compactly ("0110", "abc'"); otherwise symbols are separated by whitespace.
// An inverse generator is written with a trailing apostrophe.
LetterWord parse_letters(const Automaton& m, std::string_view text);
StateWord parse_states(const Automaton& m, std::string_view text);
GroupWord parse_group_word(const Automaton& m, std::string_view text);
std::string format(const Automaton& m, const LetterWord& s);
std::string format(const Automaton& m, const StateWord& v);
std::string format(const Automaton& m, const GroupWord& w);
std::string format(const Automaton& m, const EventuallyPeriodicWord& e);

} // namespace mealy
