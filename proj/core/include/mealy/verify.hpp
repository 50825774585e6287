#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/series.hpp"
#include "mealy/words.hpp"

namespace mealy {

// Checks replaying the structure of the Bellaterra automaton. States a, b, c
// of the Bellaterra automaton are ids 0, 1, 2.

enum class Arrow : std::uint8_t { up = 0, down = 1 };
using RWord = std::vector<Arrow>;

RWord parse_rword(std::string_view text);     // "^v^" or "udu"
std::string format_rword(const RWord& w);      // "^v^"

/// phi_x: R-words -> reduced words over {a,b,c} not beginning with x, built
/// from phi_x(arrow w) = y phi_y(w). The first produced letter is the one the
/// dual Bellaterra automaton reads first.
std::vector<StateId> phi(StateId x, const RWord& w);
/// Inverse of phi_x; empty when the word is not reduced or begins with x.
std::optional<RWord> phi_inverse(StateId x, const std::vector<StateId>& v);

/// sigma~_{x,d,y} = phi_x^{-1} o (dual Bellaterra state d) o phi_y on one word;
/// empty when the image leaves the range of phi_x.
std::optional<RWord> conjugated_action(StateId x, LetterId d, StateId y, const RWord& w);

/// The automaton over {up, down} whose states are the reachable
/// sigma~_{x,d,y} starting from sigma~_{b,1,b}, with sections computed from
/// the phi recursion. State names read "b1b", "a0c", ...
Automaton wreath_automaton();

struct CheckResult {
    bool holds = true;
    std::string detail; // first failure, or a summary
};

/// Compares the six wreath equations (root permutation and both sections)
/// with the phi-conjugated actions on all R-words of length <= n, and checks
/// that every conjugated action is well defined there.
CheckResult wreath_table_check(std::size_t n);

/// Characteristic series of the six conjugated actions over Z_2, keyed by
/// state name.
std::map<std::string, RationalSeries> f_solution();

/// c_n of chi(g) for g = sigma~_{x,d,y}, from the parity of its permutation of
/// level n computed through phi directly (levels 1..max_level).
std::vector<std::uint32_t> direct_sign_coefficients(StateId x, LetterId d, StateId y, std::size_t max_level);

struct ReducedOrbitReport {
    bool holds = false;
    std::uint64_t orbit_size = 0;
    std::uint64_t set_size = 0;
};

/// tau~_1 on reduced words of length n over {a,b,c} whose rightmost letter is
/// a or c: a single orbit of size 2^n.
ReducedOrbitReport lemma_transitive_check(std::size_t n);

struct AleshinRelationReport {
    bool holds = false;
    std::vector<StateId> pairing;                 // Aleshin state q <-> Bellaterra state pairing[q]
    std::vector<std::vector<StateId>> all_pairings; // every pairing that works on A^n
    bool difference_identity = false;             // sigma_q^-1 sigma_r identities
    bool even_paths = false;                      // sampled even-length path transfer
    std::string detail;
};

/// Searches pairings pi with sigma~_{A,q} = delta o sigma~_{B,pi(q)} on A^n
/// (delta swaps every digit) and verifies the derived identities.
AleshinRelationReport aleshin_relation_check(std::size_t n, std::size_t path_samples = 200, std::uint64_t seed = 1);

// Balanced ternary 3-adic numbers: letters a = -1, c = 0, b = +1 over the
// alphabet {a, c, b} (ids 0, 1, 2), first letter least significant.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Eventually periodic digit word of a rational whose denominator is prime to 3.
EventuallyPeriodicWord balanced_ternary(const Rational& value);
Rational balanced_ternary_value(const EventuallyPeriodicWord& w);
/// alpha(w) = (w - 1)/2 and its inverse 2w + 1.
EventuallyPeriodicWord alpha(const EventuallyPeriodicWord& w);
EventuallyPeriodicWord alpha_inverse(const EventuallyPeriodicWord& w);

struct GrowthReport {
    std::vector<std::size_t> alpha_h;  // h(alpha^{-n}(c^inf)), index n (0..n_max)
    double slope = 0;                  // least squares over n = 1..n_max
    double intercept = 0;
    std::vector<std::size_t> adding_h; // h(rho^n(0^inf)), index n
    bool adding_logarithmic = false;   // h <= ceil(log2(n + 1)) + 2 for all n
};

GrowthReport preperiod_growth(std::size_t n_max, std::size_t adding_max = 10000);

} // namespace mealy
