#include <doctest.h>

#include <filesystem>
#include <numeric>
#include <random>
#include <set>

#include "mealy/builtins.hpp"
#include "mealy/classify.hpp"
#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"
#include "mealy/text_format.hpp"
#include "mealy/transitivity.hpp"

using namespace mealy;

namespace {

// Orbit invariant computed through the public relabel(): least serialized text.
std::string slow_canonical(const Automaton& m) {
    std::vector<StateId> sp(m.num_states());
    std::vector<LetterId> lp(m.alphabet_size());
    std::iota(sp.begin(), sp.end(), 0u);
    std::string best;
    do {
        std::iota(lp.begin(), lp.end(), 0u);
        do {
            auto s = serialize(relabel(m, sp, lp));
            if (best.empty() || s < best) best = s;
        } while (std::next_permutation(lp.begin(), lp.end()));
    } while (std::next_permutation(sp.begin(), sp.end()));
    return best;
}

} // namespace

TEST_CASE("canonical forms") {
    std::mt19937 rng(21);
    for (const auto& m : {bellaterra(), aleshin(), division_by_three(), bireversible52(), conjugator()}) {
        const auto key = canonical_form(m);
        for (int t = 0; t < 10; ++t) {
            std::vector<StateId> sp(m.num_states());
            std::vector<LetterId> lp(m.alphabet_size());
            std::iota(sp.begin(), sp.end(), 0u);
            std::iota(lp.begin(), lp.end(), 0u);
            std::shuffle(sp.begin(), sp.end(), rng);
            std::shuffle(lp.begin(), lp.end(), rng);
            CHECK(canonical_form(relabel(m, sp, lp)) == key);
        }
        CHECK(canonical_form(canonical_representative(m)) == key);
        CHECK(canonical_representative(canonical_representative(m)) == canonical_representative(m));
    }
    CHECK(canonical_form(bellaterra()) != canonical_form(aleshin()));
    auto big = affine(7, 2);
    CHECK_THROWS_AS(canonical_form(big), CapacityError);
}

TEST_CASE("enumeration") {
    auto one = enumerate(1, 2);
    CHECK(one.classes.size() == 2);
    CHECK(raw_table_count(3, 2) == 5832);
    CHECK(raw_table_count(4, 2) == 1048576);

    // Brute-force oracle: distinct slow canonical strings over all raw tables.
    for (auto [q, a] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
        std::set<std::string> oracle;
        for (std::uint64_t i = 0; i < raw_table_count(q, a); ++i) oracle.insert(slow_canonical(raw_table(q, a, i)));
        auto en = enumerate(q, a);
        CHECK(en.classes.size() == oracle.size());
        std::uint64_t total = 0;
        std::set<std::string> mine;
        for (const auto& c : en.classes) {
            total += c.orbit_size;
            mine.insert(slow_canonical(c.automaton));
            CHECK(canonical_representative(c.automaton) == c.automaton);
        }
        CHECK(mine == oracle);
        CHECK(total == raw_table_count(q, a));
    }
    // Pinned regression value for (3,2).
    CHECK(enumerate(3, 2).classes.size() == 544);

    EnumerationOptions cyc;
    cyc.filter.cocyclic = true;
    auto cc = enumerate(3, 2, cyc);
    CHECK(cc.classes.size() == 12);
    for (const auto& c : cc.classes) CHECK(properties(c.automaton).cocyclic);
}

TEST_CASE("sharding and resuming are deterministic") {
    auto full = enumerate(3, 2);
    std::vector<std::uint64_t> sharded;
    for (std::size_t i = 0; i < 5; ++i) {
        EnumerationOptions o;
        o.shard = {i, 5};
        for (const auto& c : enumerate(3, 2, o).classes) sharded.push_back(c.raw_index);
    }
    std::vector<std::uint64_t> expected;
    for (const auto& c : full.classes) expected.push_back(c.raw_index);
    CHECK(sharded == expected);

    std::vector<std::uint64_t> resumed;
    EnumerationOptions o;
    o.budget = 700;
    for (;;) {
        auto part = enumerate(3, 2, o);
        for (const auto& c : part.classes) resumed.push_back(c.raw_index);
        if (part.complete) break;
        o.resume = part.resume_token;
    }
    CHECK(resumed == expected);
}

TEST_CASE("cotransitivity census") {
    auto r32 = classify_cotransitive(3, 2);
    CHECK(r32.yes == 5);
    CHECK(r32.yes_cocyclic == 4);
    CHECK(r32.unknown == 0);
    CHECK(r32.yes + r32.no + r32.unknown == r32.classes);
    CHECK(r32.raw_tables == 5832);

    // Every witness is transitive on the dual levels by direct orbit count.
    for (const auto& w : r32.witnesses) {
        auto m = parse_automaton(w.automaton);
        auto d = dual(m);
        const auto x = m.letter_id(w.letter);
        for (std::size_t n = 1; n <= 12; ++n) CHECK(orbits_on_level(d, GroupWord::single(x), n).transitive);
    }

    auto r1 = classify_cotransitive(1, 2, {1});
    CHECK(r1.classes == 2);
    CHECK(r1.yes == 2);

    CensusOptions sharded;
    CensusReport merged;
    merged.states = 3;
    merged.letters = 2;
    for (std::size_t i = 0; i < 3; ++i) {
        sharded.shard = {i, 3};
        merged.merge(classify_cotransitive(3, 2, sharded));
    }
    CHECK(merged.yes == r32.yes);
    CHECK(merged.classes == r32.classes);
    CHECK(merged.cocyclic_up_to_inverse == r32.cocyclic_up_to_inverse);
    CHECK(merged.refutation_levels == r32.refutation_levels);
    CHECK(merged.witnesses.size() == r32.witnesses.size());

    auto back = CensusReport::from_json(r32.to_json());
    CHECK(back.to_json() == r32.to_json());
}

TEST_CASE("census cache") {
    auto dir = std::filesystem::temp_directory_path() / "mealy-census-test";
    std::filesystem::remove_all(dir);
    CensusOptions o;
    o.cache_dir = dir;
    auto first = classify_cotransitive(2, 2, o);
    CHECK(std::filesystem::exists(dir));
    auto second = classify_cotransitive(2, 2, o);
    CHECK(first.to_json() == second.to_json());
    std::filesystem::remove_all(dir);
}

TEST_CASE("conjugation decides the non-cocyclic survivor") {
    auto r32 = classify_cotransitive(3, 2);
    int conjugated = 0;
    for (const auto& w : r32.witnesses) {
        if (w.cocyclic) continue;
        ++conjugated;
        CHECK(w.method == "conjugation");
        auto m = parse_automaton(w.automaton);
        auto cj = conjugation_check(m, conjugator());
        REQUIRE(cj.found);
        REQUIRE(cj.conjugated);
        CHECK(cyclic_structure(*cj.conjugated));
        CHECK(cj.conjugated->alphabet_size() == 3);
        for (auto c : cj.coefficients) CHECK(c != 0);
        CHECK(is_transitive_exact(*cj.conjugated, cj.designated));
    }
    CHECK(conjugated == 1);
}
