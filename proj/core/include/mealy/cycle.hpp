#pragma once

#include <cstdint>

#include "mealy/error.hpp"

namespace mealy {

struct CycleShape {
    std::uint64_t preperiod = 0; // mu
    std::uint64_t period = 1;    // lambda
};

/**
 * Brent's cycle detection on the orbit x0, f(x0), f(f(x0)), ...
 * `visit` sees every element the hare passes (a superset of the first
 * mu + lambda elements) and may return false to stop early, in which case
 * nothing is returned. Throws CapacityError after `max_steps` applications of f.
 */
template <class T, class F, class Visit>
bool brent(const T& x0, F f, Visit visit, std::uint64_t max_steps, CycleShape& shape) {
    std::uint64_t steps = 0;
    auto advance = [&](const T& x) {
        if (++steps > max_steps) throw CapacityError("cycle detection exceeded its step budget");
        return f(x);
    };
    if (!visit(x0)) return false;
    std::uint64_t power = 1, lambda = 1;
    T tortoise = x0;
    T hare = advance(x0);
    if (!visit(hare)) return false;
    while (!(tortoise == hare)) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = advance(hare);
        if (!visit(hare)) return false;
        ++lambda;
    }
    std::uint64_t mu = 0;
    tortoise = x0;
    hare = x0;
    for (std::uint64_t i = 0; i < lambda; ++i) hare = advance(hare);
    while (!(tortoise == hare)) {
        tortoise = f(tortoise);
        hare = f(hare);
        ++mu;
    }
    shape = {mu, lambda};
    return true;
}

template <class T, class F>
CycleShape brent(const T& x0, F f, std::uint64_t max_steps) {
    CycleShape shape;
    brent(x0, f, [](const T&) { return true; }, max_steps, shape);
    return shape;
}

} // namespace mealy
