#include "mealy/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mealy {

namespace {

using Perm = std::vector<LetterId>;

Perm compose(const Perm& f, const Perm& g) { // f after g
    Perm out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
    return out;
}

bool is_full_cycle(const Perm& p) {
    if (p.empty()) return true;
    std::size_t len = 0;
    LetterId x = 0;
    do {
        x = p[x];
        ++len;
    } while (x != 0 && len <= p.size());
    return len == p.size();
}

/// Powers rho^0 .. rho^{m-1}.
std::vector<Perm> powers(const Perm& rho) {
    const std::size_t m = rho.size();
    std::vector<Perm> out;
    Perm cur(m);
    std::iota(cur.begin(), cur.end(), 0);
    for (std::size_t k = 0; k < m; ++k) {
        out.push_back(cur);
        cur = compose(rho, cur);
    }
    return out;
}

std::optional<CyclicStructure> try_rho(const Perm& rho, const std::vector<Perm>& sigmas) {
    const auto pw = powers(rho);
    CyclicStructure cs;
    cs.rho = rho;
    cs.modulus = static_cast<std::uint32_t>(rho.size());
    for (const auto& s : sigmas) {
        auto it = std::find(pw.begin(), pw.end(), s);
        if (it == pw.end()) return std::nullopt;
        cs.exponent.push_back(static_cast<std::uint32_t>(it - pw.begin()));
    }
    std::uint32_t g = cs.modulus;
    for (auto k : cs.exponent) g = std::gcd(g, k);
    cs.generates = g == 1;
    return cs;
}

} // namespace

std::optional<CyclicStructure> cyclic_structure(const Automaton& m) {
    if (!m.is_invertible()) return std::nullopt;
    const std::size_t na = m.alphabet_size();
    std::vector<Perm> sigmas;
    for (StateId q = 0; q < m.num_states(); ++q) {
        Perm s(na);
        for (LetterId x = 0; x < na; ++x) s[x] = m.out(q, x);
        sigmas.push_back(std::move(s));
    }
    Perm id(na);
    std::iota(id.begin(), id.end(), 0);
    if (na == 0) return CyclicStructure{{}, std::vector<std::uint32_t>(m.num_states(), 0), 1, true};

    // Close the generated group, giving up once it is larger than |A|.
    std::set<Perm> group{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty() && group.size() <= na) {
        std::vector<Perm> next;
        for (const auto& g : frontier)
            for (const auto& s : sigmas) {
                Perm h = compose(s, g);
                if (group.insert(h).second) next.push_back(std::move(h));
            }
        frontier.swap(next);
    }
    if (group.size() > na) return std::nullopt;

    // A full cycle inside the group generates a group of order |A|, so the
    // group is exactly <rho> and every full cycle in it is a candidate.
    for (const auto& g : group) // std::set iterates in lexicographic order
        if (is_full_cycle(g)) return try_rho(g, sigmas);

    // Proper subgroup: search the full cycles in lexicographic order.
    if (na > 9) return std::nullopt;
    Perm p = id;
    do {
        if (!is_full_cycle(p)) continue;
        if (auto cs = try_rho(p, sigmas)) return cs;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

} // namespace mealy
