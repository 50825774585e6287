#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/transitivity.hpp"

namespace mealy {

/// Lexicographically least (output, next) byte table over all relabelings of
/// states and letters. Equal keys <=> isomorphic automata.
using CanonicalKey = std::string;

/// Throws CapacityError when |Q| > 6 or |A| > 4.
CanonicalKey canonical_form(const Automaton& m);
/// The relabeling of m whose table is its canonical key.
Automaton canonical_representative(const Automaton& m);

/// Number of raw invertible (q, a) tables: (a! q^a)^q.
std::uint64_t raw_table_count(std::size_t q, std::size_t a);
/// Raw table number `index` (mixed radix, state 0 most significant). States
/// are named a, b, c, ... and letters 0, 1, ...
Automaton raw_table(std::size_t q, std::size_t a, std::uint64_t index);

struct EnumerationFilter {
    bool reversible = false;
    bool bireversible = false;
    bool cyclic = false;
    bool cocyclic = false;

    bool accepts(const Properties& p) const;
};

struct ShardSpec {
    std::size_t index = 0;
    std::size_t count = 1;
};

struct EnumerationOptions {
    EnumerationFilter filter;
    ShardSpec shard;
    std::optional<std::uint64_t> resume;     // raw index to continue from
    std::uint64_t budget = UINT64_MAX;       // raw tables examined per call
};

struct ClassRecord {
    std::uint64_t raw_index = 0;
    Automaton automaton;
    std::uint64_t orbit_size = 0; // number of raw tables in the class
    Properties properties;
};

struct EnumerationResult {
    std::vector<ClassRecord> classes;
    std::uint64_t examined = 0;
    bool complete = true;
    std::uint64_t resume_token = 0; // next raw index when incomplete
};

/// One canonical representative per relabeling class of invertible (q, a)
/// automata passing `filter`, in increasing raw index order.
EnumerationResult enumerate(std::size_t q, std::size_t a, const EnumerationOptions& options = {});

/**
 * Tries to show that tau~_x of a (3, 2)-style candidate is spherically
 * transitive by conjugating it with a dual state kappa of `conjugator`:
 * every relabeling of the candidate's states, every letter x and every kappa
 * are tried, and the minimized product kappa^-1 tau~_x kappa is decided
 * exactly when it has a reference cycle.
 */
struct ConjugationResult {
    bool found = false;
    LetterId letter = 0;             // x
    LetterId kappa = 0;              // letter of the conjugator
    std::vector<StateId> relabeling; // candidate state i is renamed to relabeling[i]
    std::optional<Automaton> conjugated; // minimized product
    StateId designated = 0;
    std::vector<std::uint32_t> coefficients;
};
ConjugationResult conjugation_check(const Automaton& candidate, const Automaton& conjugator,
                                    std::size_t coefficient_count = 64);

struct CensusWitness {
    std::uint64_t raw_index = 0;
    std::string automaton; // text format
    bool cocyclic = false;
    std::string method;    // dual-series | conjugation
    std::string letter;
};

struct CensusReport {
    std::size_t states = 0;
    std::size_t letters = 0;
    std::size_t level_budget = 0;
    std::uint64_t raw_tables = 0;
    std::uint64_t classes = 0;
    std::uint64_t cyclic = 0;
    std::uint64_t cocyclic = 0;
    std::uint64_t reversible = 0;
    std::uint64_t bireversible = 0;
    std::uint64_t cocyclic_raw = 0;           // labeled tables
    std::uint64_t cocyclic_up_to_inverse = 0; // classes identifying M with M^-1
    std::uint64_t yes = 0;
    std::uint64_t no = 0;
    std::uint64_t unknown = 0;
    std::uint64_t yes_cocyclic = 0;
    std::map<std::size_t, std::uint64_t> refutation_levels; // level -> classes
    std::vector<CensusWitness> witnesses;
    std::vector<std::string> unknown_automata;
    bool complete = true;
    std::uint64_t resume_token = 0;

    /// Adds the counts of another shard (witness lists stay ordered by raw index).
    void merge(const CensusReport& other);
    std::string to_json() const;
    static CensusReport from_json(const std::string& text);
};

struct CensusOptions {
    std::size_t level_budget = 4;
    ShardSpec shard;
    unsigned jobs = 1;
    std::optional<std::filesystem::path> cache_dir; // per-shard result cache
    std::uint64_t budget = UINT64_MAX;
    std::optional<std::uint64_t> resume;
};

/// Cotransitivity census of invertible (q, a)-automata up to relabeling.
/// Cocyclic classes are decided exactly; the others are refuted by dual orbits
/// on levels 1..budget, and survivors go through conjugation_check with the
/// built-in conjugator when the shapes match.
CensusReport classify_cotransitive(std::size_t q, std::size_t a, const CensusOptions& options = {});

} // namespace mealy
