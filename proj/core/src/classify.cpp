#include "mealy/classify.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "mealy/builtins.hpp"
#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"
#include "mealy/text_format.hpp"

namespace mealy {

namespace {

std::vector<std::vector<std::uint32_t>> all_perms(std::size_t n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<std::uint32_t>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::uint32_t> inverse_perm(const std::vector<std::uint32_t>& p) {
    std::vector<std::uint32_t> inv(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

/// Relabelings of a (q, a) shape with their inverses, shared by all tables.
struct Relabelings {
    std::size_t q, a;
    std::vector<std::vector<std::uint32_t>> sp, sp_inv, lp, lp_inv;

    Relabelings(std::size_t q_, std::size_t a_) : q(q_), a(a_) {
        if (q > 6 || a > 4) throw CapacityError("canonical forms are limited to |Q| <= 6 and |A| <= 4");
        sp = all_perms(q);
        lp = all_perms(a);
        for (const auto& p : sp) sp_inv.push_back(inverse_perm(p));
        for (const auto& p : lp) lp_inv.push_back(inverse_perm(p));
    }
};

/// Table as interleaved (output, next) bytes, cell order (state, letter).
std::string table_bytes(std::span<const LetterId> out, std::span<const StateId> next, std::size_t cells) {
    std::string key(2 * cells, '\0');
    for (std::size_t c = 0; c < cells; ++c) {
        key[2 * c] = static_cast<char>(out[c]);
        key[2 * c + 1] = static_cast<char>(next[c]);
    }
    return key;
}

/// Compares the relabeled table with `ref`; -1 smaller, 0 equal, 1 larger.
int compare_relabeled(const Relabelings& r, std::size_t si, std::size_t li, std::span<const LetterId> out,
                      std::span<const StateId> next, const std::string& ref) {
    const auto& pinv = r.sp_inv[si];
    const auto& linv = r.lp_inv[li];
    const auto& p = r.sp[si];
    const auto& l = r.lp[li];
    for (std::size_t q2 = 0; q2 < r.q; ++q2) {
        const auto q = pinv[q2];
        for (std::size_t x2 = 0; x2 < r.a; ++x2) {
            const auto cell = q * r.a + linv[x2];
            const auto c2 = q2 * r.a + x2;
            const auto o = static_cast<unsigned char>(l[out[cell]]);
            const auto ro = static_cast<unsigned char>(ref[2 * c2]);
            if (o != ro) return o < ro ? -1 : 1;
            const auto n = static_cast<unsigned char>(p[next[cell]]);
            const auto rn = static_cast<unsigned char>(ref[2 * c2 + 1]);
            if (n != rn) return n < rn ? -1 : 1;
        }
    }
    return 0;
}

std::string relabeled_bytes(const Relabelings& r, std::size_t si, std::size_t li, std::span<const LetterId> out,
                            std::span<const StateId> next) {
    std::string key(2 * r.q * r.a, '\0');
    for (std::size_t q = 0; q < r.q; ++q)
        for (std::size_t x = 0; x < r.a; ++x) {
            const auto c2 = r.sp[si][q] * r.a + r.lp[li][x];
            key[2 * c2] = static_cast<char>(r.lp[li][out[q * r.a + x]]);
            key[2 * c2 + 1] = static_cast<char>(r.sp[si][next[q * r.a + x]]);
        }
    return key;
}

/// Number of relabelings fixing the table, or 0 when some relabeling is smaller.
std::uint64_t canonical_stabilizer(const Relabelings& r, std::span<const LetterId> out, std::span<const StateId> next) {
    const auto ref = table_bytes(out, next, r.q * r.a);
    std::uint64_t fixed = 0;
    for (std::size_t si = 0; si < r.sp.size(); ++si)
        for (std::size_t li = 0; li < r.lp.size(); ++li) {
            const int c = compare_relabeled(r, si, li, out, next, ref);
            if (c < 0) return 0;
            if (c == 0) ++fixed;
        }
    return fixed;
}

std::vector<std::string> state_names(std::size_t q) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < q; ++i)
        names.push_back(q <= 26 ? std::string(1, static_cast<char>('a' + i)) : "q" + std::to_string(i));
    return names;
}

std::vector<std::string> letter_names(std::size_t a) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a; ++i) names.push_back(std::to_string(i));
    return names;
}

std::uint64_t checked_pow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b) throw CapacityError("raw table count overflows 64 bits");
        r *= b;
    }
    return r;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

void decode_raw(std::size_t q, std::size_t a, std::uint64_t index, const std::vector<std::vector<std::uint32_t>>& perms,
                std::vector<LetterId>& out, std::vector<StateId>& next) {
    const std::uint64_t trans = checked_pow(q, a);
    const std::uint64_t row_count = perms.size() * trans;
    out.assign(q * a, 0);
    next.assign(q * a, 0);
    for (std::size_t s = q; s-- > 0;) {
        auto row = index % row_count;
        index /= row_count;
        const auto& perm = perms[row / trans];
        auto t = row % trans;
        for (std::size_t x = a; x-- > 0;) {
            next[s * a + x] = static_cast<StateId>(t % q);
            t /= q;
            out[s * a + x] = perm[x];
        }
    }
}

} // namespace

CanonicalKey canonical_form(const Automaton& m) {
    Relabelings r(m.num_states(), m.alphabet_size());
    std::string best;
    for (std::size_t si = 0; si < r.sp.size(); ++si)
        for (std::size_t li = 0; li < r.lp.size(); ++li) {
            auto k = relabeled_bytes(r, si, li, m.output_table(), m.transition_table());
            if (best.empty() || k < best) best = std::move(k);
        }
    return best;
}

Automaton canonical_representative(const Automaton& m) {
    const auto key = canonical_form(m);
    const auto cells = m.num_states() * m.alphabet_size();
    std::vector<LetterId> out(cells);
    std::vector<StateId> next(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        out[c] = static_cast<unsigned char>(key[2 * c]);
        next[c] = static_cast<unsigned char>(key[2 * c + 1]);
    }
    return Automaton(m.states(), m.alphabet(), std::move(next), std::move(out), m.name());
}

std::uint64_t raw_table_count(std::size_t q, std::size_t a) {
    return checked_pow(factorial(a) * checked_pow(q, a), q);
}

Automaton raw_table(std::size_t q, std::size_t a, std::uint64_t index) {
    if (index >= raw_table_count(q, a)) throw PreconditionError("raw table index out of range");
    std::vector<LetterId> out;
    std::vector<StateId> next;
    decode_raw(q, a, index, all_perms(a), out, next);
    return Automaton(state_names(q), letter_names(a), std::move(next), std::move(out));
}

bool EnumerationFilter::accepts(const Properties& p) const {
    return (!reversible || p.reversible) && (!bireversible || p.bireversible) && (!cyclic || p.cyclic) &&
           (!cocyclic || p.cocyclic);
}

EnumerationResult enumerate(std::size_t q, std::size_t a, const EnumerationOptions& options) {
    if (q == 0 || a == 0) throw PreconditionError("enumeration needs at least one state and one letter");
    if (options.shard.count == 0 || options.shard.index >= options.shard.count)
        throw PreconditionError("invalid shard specification");
    Relabelings r(q, a);
    const auto total = raw_table_count(q, a);
    const auto group = static_cast<std::uint64_t>(r.sp.size() * r.lp.size());
    const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * options.shard.index / options.shard.count);
    const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * (options.shard.index + 1) / options.shard.count);
    const auto start = std::max(lo, options.resume.value_or(lo));

    EnumerationResult res;
    std::vector<LetterId> out;
    std::vector<StateId> next;
    const auto names = state_names(q);
    const auto letters = letter_names(a);
    std::uint64_t i = start;
    for (; i < hi; ++i) {
        if (res.examined == options.budget) break;
        ++res.examined;
        decode_raw(q, a, i, r.lp, out, next);
        const auto fixed = canonical_stabilizer(r, out, next);
        if (fixed == 0) continue;
        Automaton m(names, letters, next, out);
        auto props = properties(m);
        if (!options.filter.accepts(props)) continue;
        res.classes.push_back({i, std::move(m), group / fixed, props});
    }
    res.complete = i >= hi;
    res.resume_token = i;
    return res;
}

ConjugationResult conjugation_check(const Automaton& candidate, const Automaton& conjugator,
                                    std::size_t coefficient_count) {
    ConjugationResult res;
    if (candidate.states() != conjugator.states() || !is_reversible(candidate) || !is_reversible(conjugator))
        return res;
    const auto dc = dual(conjugator);
    const auto nq = candidate.num_states();
    auto perms = all_perms(nq);
    std::vector<LetterId> id_letters(candidate.alphabet_size());
    std::iota(id_letters.begin(), id_letters.end(), 0u);
    for (const auto& perm : perms) {
        const auto relabeled = relabel(candidate, perm, id_letters);
        const auto dm = dual(relabeled);
        for (LetterId x = 0; x < candidate.alphabet_size(); ++x)
            for (LetterId k = 0; k < conjugator.alphabet_size(); ++k) {
                std::vector<ProductPart> parts{{&dc, GroupWord::single(k, true)},
                                               {&dm, GroupWord::single(x)},
                                               {&dc, GroupWord::single(k)}};
                auto [prod, designated] = product(parts);
                auto classes = equivalence_classes(prod);
                auto small = minimize(prod);
                const StateId d = classes[designated];
                if (!cyclic_structure(small)) continue;
                if (!is_transitive_exact(small, d)) continue;
                res.found = true;
                res.letter = x;
                res.kappa = k;
                res.relabeling = perm;
                res.designated = d;
                res.coefficients = char_coeffs(small, d, coefficient_count);
                res.conjugated = std::move(small);
                return res;
            }
    }
    return res;
}

void CensusReport::merge(const CensusReport& o) {
    raw_tables += o.raw_tables;
    classes += o.classes;
    cyclic += o.cyclic;
    cocyclic += o.cocyclic;
    reversible += o.reversible;
    bireversible += o.bireversible;
    cocyclic_raw += o.cocyclic_raw;
    cocyclic_up_to_inverse += o.cocyclic_up_to_inverse;
    yes += o.yes;
    no += o.no;
    unknown += o.unknown;
    yes_cocyclic += o.yes_cocyclic;
    for (const auto& [lvl, n] : o.refutation_levels) refutation_levels[lvl] += n;
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    std::sort(witnesses.begin(), witnesses.end(), [](const auto& x, const auto& y) { return x.raw_index < y.raw_index; });
    unknown_automata.insert(unknown_automata.end(), o.unknown_automata.begin(), o.unknown_automata.end());
    complete = complete && o.complete;
}

std::string CensusReport::to_json() const {
    nlohmann::ordered_json j;
    j["states"] = states;
    j["letters"] = letters;
    j["level_budget"] = level_budget;
    j["raw_tables"] = raw_tables;
    j["classes"] = classes;
    j["cyclic"] = cyclic;
    j["cocyclic"] = cocyclic;
    j["reversible"] = reversible;
    j["bireversible"] = bireversible;
    j["cocyclic_raw"] = cocyclic_raw;
    j["cocyclic_up_to_inverse"] = cocyclic_up_to_inverse;
    j["cotransitive"] = {{"yes", yes}, {"no", no}, {"unknown", unknown}, {"yes_cocyclic", yes_cocyclic}};
    auto& levels = j["refutation_levels"] = nlohmann::ordered_json::object();
    for (const auto& [lvl, n] : refutation_levels) levels[std::to_string(lvl)] = n;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : witnesses)
        j["witnesses"].push_back({{"raw_index", w.raw_index},
                                  {"cocyclic", w.cocyclic},
                                  {"method", w.method},
                                  {"letter", w.letter},
                                  {"automaton", w.automaton}});
    j["unknown"] = unknown_automata;
    j["complete"] = complete;
    j["resume_token"] = resume_token;
    return j.dump(2);
}

CensusReport CensusReport::from_json(const std::string& text) {
    CensusReport r;
    try {
        const auto j = nlohmann::json::parse(text);
        r.states = j.at("states");
        r.letters = j.at("letters");
        r.level_budget = j.at("level_budget");
        r.raw_tables = j.at("raw_tables");
        r.classes = j.at("classes");
        r.cyclic = j.at("cyclic");
        r.cocyclic = j.at("cocyclic");
        r.reversible = j.at("reversible");
        r.bireversible = j.at("bireversible");
        r.cocyclic_raw = j.at("cocyclic_raw");
        r.cocyclic_up_to_inverse = j.at("cocyclic_up_to_inverse");
        const auto& c = j.at("cotransitive");
        r.yes = c.at("yes");
        r.no = c.at("no");
        r.unknown = c.at("unknown");
        r.yes_cocyclic = c.at("yes_cocyclic");
        for (const auto& [k, v] : j.at("refutation_levels").items()) r.refutation_levels[std::stoul(k)] = v;
        for (const auto& w : j.at("witnesses"))
            r.witnesses.push_back({w.at("raw_index"), w.at("automaton"), w.at("cocyclic"), w.at("method"), w.at("letter")});
        r.unknown_automata = j.at("unknown").get<std::vector<std::string>>();
        r.complete = j.at("complete");
        r.resume_token = j.at("resume_token");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("census report: ") + e.what());
    }
    return r;
}

namespace {

struct ClassVerdict {
    Verdict verdict = Verdict::unknown;
    std::optional<std::size_t> level;
    std::string method;
    std::string letter;
};

ClassVerdict decide(const ClassRecord& c, std::size_t budget, const Automaton& conj) {
    const auto& m = c.automaton;
    ClassVerdict v;
    if (!c.properties.reversible) {
        // Some tau_x is not a permutation of Q, so no tau~_x is transitive on Q^1.
        v.verdict = Verdict::no;
        v.level = 1;
        return v;
    }
    auto rep = cotransitivity(m, budget);
    v.verdict = rep.verdict;
    v.level = rep.refutation_level;
    if (rep.verdict == Verdict::yes) {
        v.method = "dual-series";
        v.letter = m.letter_name(*rep.witness);
        return v;
    }
    if (rep.verdict == Verdict::unknown) {
        auto cj = conjugation_check(m, conj);
        if (cj.found) {
            v.verdict = Verdict::yes;
            v.method = "conjugation";
            v.letter = m.letter_name(cj.letter);
        }
    }
    return v;
}

std::string cache_name(std::size_t q, std::size_t a, const CensusOptions& o) {
    return "census-" + std::to_string(q) + "-" + std::to_string(a) + "-L" + std::to_string(o.level_budget) + "-shard" +
           std::to_string(o.shard.index) + "of" + std::to_string(o.shard.count) + ".json";
}

} // namespace

CensusReport classify_cotransitive(std::size_t q, std::size_t a, const CensusOptions& options) {
    const bool cacheable = options.cache_dir && options.budget == UINT64_MAX && !options.resume;
    std::filesystem::path cache_file;
    if (cacheable) {
        cache_file = *options.cache_dir / cache_name(q, a, options);
        if (std::filesystem::exists(cache_file)) {
            std::ifstream in(cache_file);
            std::stringstream buf;
            buf << in.rdbuf();
            return CensusReport::from_json(buf.str());
        }
    }

    EnumerationOptions eo;
    eo.shard = options.shard;
    eo.budget = options.budget;
    eo.resume = options.resume;
    auto en = enumerate(q, a, eo);

    CensusReport rep;
    rep.states = q;
    rep.letters = a;
    rep.level_budget = options.level_budget;
    rep.complete = en.complete;
    rep.resume_token = en.resume_token;
    rep.raw_tables = 0;
    rep.classes = en.classes.size();

    const auto conj = conjugator();
    std::vector<ClassVerdict> verdicts(en.classes.size());
    const unsigned jobs = std::max(1u, options.jobs);
    auto work = [&](unsigned j) {
        for (std::size_t i = j; i < en.classes.size(); i += jobs)
            verdicts[i] = decide(en.classes[i], options.level_budget, conj);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < en.classes.size(); ++i) {
        const auto& c = en.classes[i];
        const auto& p = c.properties;
        rep.raw_tables += c.orbit_size;
        rep.cyclic += p.cyclic;
        rep.cocyclic += p.cocyclic;
        rep.reversible += p.reversible;
        rep.bireversible += p.bireversible;
        if (p.cocyclic) {
            rep.cocyclic_raw += c.orbit_size;
            // Count each {M, M^-1} pair once, at its smaller canonical key.
            if (canonical_form(c.automaton) <= canonical_form(inverse(c.automaton))) ++rep.cocyclic_up_to_inverse;
        }
        const auto& v = verdicts[i];
        switch (v.verdict) {
        case Verdict::yes:
            ++rep.yes;
            rep.yes_cocyclic += p.cocyclic;
            rep.witnesses.push_back({c.raw_index, serialize(c.automaton), p.cocyclic, v.method, v.letter});
            break;
        case Verdict::no:
            ++rep.no;
            if (v.level) ++rep.refutation_levels[*v.level];
            break;
        default:
            ++rep.unknown;
            rep.unknown_automata.push_back(serialize(c.automaton));
        }
    }

    if (cacheable) {
        std::filesystem::create_directories(*options.cache_dir);
        std::ofstream(cache_file) << rep.to_json();
    }
    return rep;
}

} // namespace mealy
