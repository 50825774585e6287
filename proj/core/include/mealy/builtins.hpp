#pragma once

#include <string_view>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

/// Names accepted by builtin(): bellaterra, aleshin, adding, div3,
/// affine(k,m), conjugator, bireversible52.
Automaton builtin(std::string_view name);
std::vector<std::string_view> builtin_names();

Automaton bellaterra();
Automaton aleshin();
/// Binary adding machine: sigma~_r adds one, least significant digit first.
Automaton adding_machine();
/// States 0..k-1, letters 0..m-1, q -(x|y)-> b iff q + k*y = x + m*b.
/// sigma~_q(x) = (x - q) / k mod m^n. Requires gcd(k, m) = 1.
Automaton affine(unsigned k, unsigned m);
/// affine(3, 2): division by three on binary words.
Automaton division_by_three();
/// Three-state automaton over {x, y} whose dual letter x conjugates the
/// non-cocyclic cotransitive (3,2) class into a cyclic automaton.
Automaton conjugator();
/// The bireversible non-cocyclic (5,2) automaton whose dual acts transitively
/// on Q^n for all tested n.
Automaton bireversible52();

} // namespace mealy
