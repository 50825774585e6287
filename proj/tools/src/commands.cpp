#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "mealy/action.hpp"
#include "mealy/builtins.hpp"
#include "mealy/classify.hpp"
#include "mealy/cyclic.hpp"
#include "mealy/error.hpp"
#include "mealy/schreier.hpp"
#include "mealy/spectral.hpp"
#include "mealy/text_format.hpp"
#include "mealy/transitivity.hpp"
#include "mealy/verify.hpp"

namespace mealy::cli {

namespace {

struct Source {
    std::string builtin, file, automaton;
};

void add_source(CLI::App* sub, Source& s) {
    auto* b = sub->add_option("--builtin", s.builtin, "Built-in automaton: " + [] {
        std::string names;
        for (auto n : builtin_names()) names += (names.empty() ? "" : ", ") + std::string(n);
        return names;
    }());
    auto* f = sub->add_option("--file", s.file, "Automaton in the text format");
    auto* a = sub->add_option("--automaton", s.automaton, "Built-in name, or a file path when no built-in matches");
    b->excludes(f)->excludes(a);
    f->excludes(a);
}

Automaton load(const Source& s) {
    if (!s.builtin.empty()) return builtin(s.builtin);
    if (!s.file.empty()) return load_automaton(s.file);
    if (!s.automaton.empty()) {
        try {
            return builtin(s.automaton);
        } catch (const SymbolError&) {
            return load_automaton(s.automaton);
        }
    }
    throw UsageError("no automaton given (use --builtin, --file or --automaton)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Writes to `path`, or to stdout when the path is empty.
void emit(Context& ctx, const std::string& path, const std::string& content) {
    if (path.empty()) std::cout << content;
    else write_output(path, content, ctx.manifest);
}

LetterId parse_letter(const Automaton& m, const std::string& name) {
    if (name.empty()) return static_cast<LetterId>(m.alphabet_size() - 1);
    return m.letter_id(name);
}

/// "pre(period)" -> eventually periodic word.
EventuallyPeriodicWord parse_infinite(const Automaton& m, const std::string& text) {
    const auto open = text.find('('), close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != text.size())
        throw UsageError("infinite words are written pre(period), got '" + text + "'");
    return EventuallyPeriodicWord(parse_letters(m, text.substr(0, open)),
                                  parse_letters(m, text.substr(open + 1, close - open - 1)));
}

template <class Map>
auto enum_transformer(const Map& map) {
    return CLI::CheckedTransformer(map, CLI::ignore_case);
}

void add_info(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("info", "Show an automaton, its properties and reference cycle");
    auto src = std::make_shared<Source>();
    auto dot = std::make_shared<std::string>();
    auto show_dual = std::make_shared<bool>(false);
    add_source(sub, *src);
    sub->add_option("--dot", *dot, "Write the automaton as a Graphviz file");
    sub->add_flag("--dual", *show_dual, "Describe the dual automaton instead");
    ctx.actions[sub] = [&ctx, src, dot, show_dual] {
        Automaton m = load(*src);
        if (*show_dual) m = dual(m);
        const auto p = properties(m);
        std::cout << "name: " << m.name() << '\n'
                  << "states: " << m.num_states() << '\n'
                  << "letters: " << m.alphabet_size() << '\n'
                  << "invertible: " << yes_no(p.invertible) << '\n'
                  << "reversible: " << yes_no(p.reversible) << '\n'
                  << "bireversible: " << yes_no(p.bireversible) << '\n'
                  << "cyclic: " << yes_no(p.cyclic) << '\n'
                  << "cocyclic: " << yes_no(p.cocyclic) << '\n';
        if (auto cs = cyclic_structure(m)) {
            std::cout << "rho:";
            for (LetterId x = 0; x < cs->rho.size(); ++x)
                std::cout << ' ' << m.letter_name(x) << "->" << m.letter_name(cs->rho[x]);
            std::cout << "\nexponents:";
            for (StateId q = 0; q < m.num_states(); ++q) std::cout << ' ' << m.state_name(q) << '=' << cs->exponent[q];
            std::cout << '\n';
        }
        std::cout << '\n' << serialize(m);
        if (!dot->empty()) write_output(*dot, to_dot(m), ctx.manifest);
        return 0;
    };
}

void add_act(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("act", "Apply a group word to a letter word (or a letter word to a state word)");
    auto src = std::make_shared<Source>();
    auto word = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    auto dual_mode = std::make_shared<bool>(false);
    add_source(sub, *src);
    sub->add_option("--word", *word, "Group word over the states, rightmost applied first; q' is q^-1")->required();
    sub->add_option("--input", *input, "Letter word, or pre(period) for an infinite word")->required();
    sub->add_flag("--dual", *dual_mode, "Dual action: --word is a letter word acting on the state word --input");
    ctx.actions[sub] = [src, word, input, dual_mode] {
        const Automaton m = load(*src);
        if (*dual_mode) {
            std::cout << format(m, dual_act(m, parse_states(m, *input), parse_letters(m, *word))) << '\n';
        } else if (input->find('(') != std::string::npos) {
            std::cout << format(m, act_inf(m, parse_group_word(m, *word), parse_infinite(m, *input))) << '\n';
        } else {
            std::cout << format(m, act(m, parse_group_word(m, *word), parse_letters(m, *input))) << '\n';
        }
        return 0;
    };
}

const std::map<std::string, DiameterMode> diameter_modes{{"exact", DiameterMode::exact},
                                                         {"bound", DiameterMode::bound}};

void add_schreier(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("schreier", "Build the Schreier graph on one level");
    auto src = std::make_shared<Source>();
    auto level = std::make_shared<std::size_t>(0);
    auto dot = std::make_shared<std::string>();
    auto csv = std::make_shared<std::string>();
    auto mode = std::make_shared<std::optional<DiameterMode>>();
    add_source(sub, *src);
    sub->add_option("--level", *level, "Level n (vertices are the words of length n)")->required();
    sub->add_option("--dot", *dot, "Write the graph as a Graphviz file");
    sub->add_option("--diameter", *mode, "Also compute the diameter: exact or bound")
        ->transform(enum_transformer(diameter_modes));
    sub->add_option("--csv", *csv, "Diameter CSV (n,vertices,diam_lower,diam_upper,exact_flag)");
    ctx.actions[sub] = [&ctx, src, level, dot, csv, mode] {
        const Automaton m = load(*src);
        const auto g = SchreierGraph::build(m, *level);
        std::cout << "level: " << g.level() << "\nvertices: " << g.vertex_count() << "\ndegree: " << g.degree()
                  << '\n';
        if (!dot->empty()) write_output(*dot, to_dot(g), ctx.manifest);
        if (*mode) {
            DiameterOptions opts;
            opts.seed = ctx.manifest.seed;
            opts.jobs = ctx.jobs;
            const DiameterResult r = diameter(g, **mode, opts);
            std::ostringstream out;
            write_diameter_csv(out, std::span<const DiameterResult>(&r, 1));
            emit(ctx, *csv, out.str());
        } else if (!csv->empty()) {
            throw UsageError("--csv needs --diameter");
        }
        return 0;
    };
}

void add_diameter(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("diameter", "Diameters of the Schreier graphs over a range of levels");
    auto src = std::make_shared<Source>();
    auto from = std::make_shared<std::size_t>(1), to = std::make_shared<std::size_t>(10);
    auto mode = std::make_shared<DiameterMode>(DiameterMode::exact);
    auto csv = std::make_shared<std::string>();
    auto opts = std::make_shared<DiameterOptions>();
    auto hub = std::make_shared<std::string>();
    add_source(sub, *src);
    sub->add_option("--from", *from, "First level")->capture_default_str();
    sub->add_option("--to", *to, "Last level")->capture_default_str();
    sub->add_option("--mode", *mode, "exact (all-pairs BFS) or bound (sampled lower, hub upper)")
        ->transform(enum_transformer(diameter_modes))
        ->default_str("exact");
    sub->add_option("--exact-cap", opts->exact_cap, "Largest vertex count for all-pairs BFS")->capture_default_str();
    sub->add_option("--samples", opts->samples, "Bound mode: random BFS sources")->capture_default_str();
    sub->add_option("--hub", *hub, "Bound mode: letter x whose constant word is the hub (default: last letter)");
    sub->add_option("--csv", *csv, "Output CSV (default: stdout)");
    ctx.actions[sub] = [&ctx, src, from, to, mode, csv, opts, hub] {
        if (*from > *to) throw UsageError("--from must not exceed --to");
        const Automaton m = load(*src);
        opts->seed = ctx.manifest.seed;
        opts->jobs = ctx.jobs;
        if (!hub->empty()) opts->hub = m.letter_id(*hub);
        std::vector<DiameterResult> rows;
        for (std::size_t n = *from; n <= *to; ++n) rows.push_back(diameter(SchreierGraph::build(m, n), *mode, *opts));
        std::ostringstream out;
        write_diameter_csv(out, rows);
        emit(ctx, *csv, out.str());
        return 0;
    };
}

void add_gap(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("gap", "Two-sided spectral gaps over a range of levels");
    auto src = std::make_shared<Source>();
    auto from = std::make_shared<std::size_t>(1), to = std::make_shared<std::size_t>(10);
    auto csv = std::make_shared<std::string>(), dat = std::make_shared<std::string>();
    auto opts = std::make_shared<SpectrumOptions>();
    add_source(sub, *src);
    sub->add_option("--from", *from, "First level")->capture_default_str();
    sub->add_option("--to", *to, "Last level")->capture_default_str();
    sub->add_option("--solver", opts->mode, "automatic, dense or iterative")
        ->transform(enum_transformer(std::map<std::string, SolverMode>{{"automatic", SolverMode::automatic},
                                                                       {"dense", SolverMode::dense},
                                                                       {"iterative", SolverMode::iterative}}))
        ->default_str("automatic");
    sub->add_option("--dense-cap", opts->dense_cap, "Largest vertex count solved densely in automatic mode")
        ->capture_default_str();
    sub->add_option("--tolerance", opts->tolerance, "Iterative residual target")->capture_default_str();
    sub->add_option("--csv", *csv, "Output CSV n,vertices,lambda2,lambda_min,gap,solver (default: stdout)");
    sub->add_option("--dat", *dat, "Two-column `n gap` file for plotting");
    ctx.actions[sub] = [&ctx, src, from, to, csv, dat, opts] {
        if (*from > *to) throw UsageError("--from must not exceed --to");
        const Automaton m = load(*src);
        opts->seed = ctx.manifest.seed;
        const auto rows = gap_series(m, *from, *to, *opts);
        std::ostringstream out;
        write_gap_csv(out, rows);
        emit(ctx, *csv, out.str());
        if (!dat->empty()) {
            std::ostringstream d;
            write_gap_dat(d, rows);
            write_output(*dat, d.str(), ctx.manifest);
        }
        for (const auto& r : rows)
            if (!r.error.empty()) std::cerr << "level " << r.level << ": " << r.error << '\n';
        return 0;
    };
}

void add_transitive(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("transitive", "Decide spherical transitivity of one state");
    auto src = std::make_shared<Source>();
    auto state = std::make_shared<std::string>();
    auto coeffs = std::make_shared<std::size_t>(16), levels = std::make_shared<std::size_t>(0);
    auto csv = std::make_shared<std::string>();
    add_source(sub, *src);
    sub->add_option("--state", *state, "State q")->required();
    sub->add_option("--coeffs", *coeffs, "Number of characteristic coefficients to print")->capture_default_str();
    sub->add_option("--levels", *levels, "Also list orbits on levels 1..L")->capture_default_str();
    sub->add_option("--csv", *csv, "Orbit CSV level,orbit_count,max_orbit,transitive (default: stdout)");
    ctx.actions[sub] = [&ctx, src, state, coeffs, levels, csv] {
        const Automaton m = load(*src);
        const StateId q = m.state_id(*state);
        std::cout << "state: " << m.state_name(q) << '\n';
        if (cyclic_structure(m)) {
            if (is_prime(m.alphabet_size())) std::cout << "chi: " << char_rational(m, q).to_string() << '\n';
            std::cout << "coefficients:";
            for (auto c : char_coeffs(m, q, *coeffs)) std::cout << ' ' << c;
            const auto first = first_intransitive_level(m, q);
            std::cout << "\nspherically transitive: " << yes_no(!first) << '\n';
            if (first) std::cout << "first intransitive level: " << *first << '\n';
        } else {
            std::cout << "no reference cycle: exact decision unavailable, orbit evidence only\n";
            if (*levels == 0) *levels = 8;
        }
        if (*levels > 0) {
            std::vector<OrbitReport> rows;
            for (std::size_t n = 1; n <= *levels; ++n) rows.push_back(orbits_on_level(m, GroupWord::single(q), n));
            std::ostringstream out;
            write_orbit_csv(out, rows);
            emit(ctx, *csv, out.str());
        }
        return 0;
    };
}

void add_cotransitive(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("cotransitive", "Decide whether some dual state is spherically transitive");
    auto src = std::make_shared<Source>();
    auto budget = std::make_shared<std::size_t>(4);
    add_source(sub, *src);
    sub->add_option("--budget", *budget, "Levels tried when refuting without a reference cycle")->capture_default_str();
    ctx.actions[sub] = [src, budget] {
        const Automaton m = load(*src);
        const auto r = cotransitivity(m, *budget);
        std::cout << "verdict: " << to_string(r.verdict) << "\nexact: " << yes_no(r.exact) << '\n';
        if (r.witness) std::cout << "witness letter: " << m.letter_name(*r.witness) << '\n';
        if (r.refutation_level) std::cout << "refuted by level: " << *r.refutation_level << '\n';
        for (LetterId x = 0; x < r.first_failure.size(); ++x) {
            std::cout << "letter " << m.letter_name(x) << ": ";
            if (r.first_failure[x]) std::cout << "not transitive on level " << *r.first_failure[x] << '\n';
            else std::cout << "no failure found\n";
        }
        return 0;
    };
}

void add_classify(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("classify", "Cotransitivity census of invertible automata up to relabeling");
    auto q = std::make_shared<std::size_t>(3), a = std::make_shared<std::size_t>(2);
    auto opts = std::make_shared<CensusOptions>();
    auto shard = std::make_shared<std::string>("0/1");
    auto out = std::make_shared<std::string>(), cache = std::make_shared<std::string>();
    auto long_mode = std::make_shared<bool>(false);
    auto resume = std::make_shared<std::optional<std::uint64_t>>();
    sub->add_option("--states", *q, "Number of states")->capture_default_str();
    sub->add_option("--alphabet", *a, "Alphabet size")->capture_default_str();
    sub->add_option("--budget", opts->level_budget, "Refutation levels for non-cocyclic classes")
        ->capture_default_str();
    sub->add_flag("--long", *long_mode, "Allow censuses of more than 10^8 raw tables");
    sub->add_option("--shard", *shard, "Shard i/k of the raw tables")->capture_default_str();
    sub->add_option("--limit", opts->budget, "Raw tables examined in this run (resumable)");
    sub->add_option("--resume", *resume, "Raw index to continue from (the resume_token of an earlier report)");
    sub->add_option("--cache-dir", *cache, "Shard result cache (default: $MEALY_CACHE_DIR)");
    sub->add_option("--out", *out, "JSON report (default: stdout)");
    ctx.actions[sub] = [&ctx, q, a, opts, shard, out, cache, long_mode, resume] {
        const auto slash = shard->find('/');
        try {
            if (slash == std::string::npos) throw std::invalid_argument("");
            opts->shard.index = std::stoul(shard->substr(0, slash));
            opts->shard.count = std::stoul(shard->substr(slash + 1));
        } catch (const std::logic_error&) {
            throw UsageError("--shard expects i/k, got '" + *shard + "'");
        }
        if (opts->shard.count == 0 || opts->shard.index >= opts->shard.count)
            throw UsageError("--shard i/k needs 0 <= i < k");
        if (raw_table_count(*q, *a) > 100000000 && !*long_mode)
            throw UsageError("more than 10^8 raw tables; pass --long to run anyway");
        if (!cache->empty()) opts->cache_dir = *cache;
        else if (const char* env = std::getenv("MEALY_CACHE_DIR"); env && *env) opts->cache_dir = env;
        opts->jobs = ctx.jobs;
        opts->resume = *resume;
        const auto r = classify_cotransitive(*q, *a, *opts);
        std::cerr << "classes " << r.classes << ", cocyclic " << r.cocyclic << " (" << r.cocyclic_raw << " labeled, "
                  << r.cocyclic_up_to_inverse << " up to inverse), cotransitive yes " << r.yes << " / no " << r.no
                  << " / unknown " << r.unknown << (r.complete ? "" : " [incomplete]") << '\n';
        emit(ctx, *out, r.to_json());
        return 0;
    };
}

struct CheckTable {
    bool ok = true;
    void row(const std::string& name, bool pass, const std::string& detail = {}) {
        ok = ok && pass;
        std::cout << std::left << std::setw(40) << name << (pass ? "PASS" : "FAIL");
        if (!detail.empty()) std::cout << "  " << detail;
        std::cout << '\n';
    }
};

int verify_bellaterra(std::size_t n) {
    CheckTable t;
    const Automaton b = bellaterra(), al = aleshin();
    t.row("act c 0000 = 1001", format(b, act(b, parse_group_word(b, "c"), parse_letters(b, "0000"))) == "1001");
    t.row("bireversible", properties(b).bireversible && properties(al).bireversible);
    {
        const auto maps = level_maps(b, n);
        bool inv = true;
        for (const auto& f : maps)
            for (std::size_t v = 0; v < f.size(); ++v) inv = inv && f[f[v]] == v;
        t.row("involutions on level " + std::to_string(n), inv);
    }
    for (const Automaton* m : {&b, &al}) {
        const auto r = verify_lift(*m, n);
        std::string rules;
        for (const auto& rule : r.rules) rules += (rules.empty() ? "" : "; ") + format_rule(*m, rule);
        t.row("lift rules (" + m->name() + ")", r.holds, r.holds ? rules : r.counterexample);
    }
    {
        const auto r = wreath_table_check(n);
        t.row("wreath table", r.holds, r.detail);
    }
    {
        const auto f = f_solution();
        const Poly one{{1}}, tt{{0, 1}}, omt{{1, 1}};
        const std::map<std::string, RationalSeries> expected{
            {"b1b", RationalSeries(one, omt, 2)}, {"a0c", RationalSeries(Poly{}, one, 2)},
            {"c1a", RationalSeries(one, omt, 2)}, {"b0a", RationalSeries(tt, omt, 2)},
            {"c0b", RationalSeries(tt, omt, 2)},  {"a1c", RationalSeries(one, one, 2)}};
        std::string shown;
        for (const auto& [k, v] : f) shown += (shown.empty() ? "" : ", ") + k + "=" + v.to_string();
        t.row("F system", f == expected, shown);
        const Automaton w = wreath_automaton();
        bool rec = true, direct = true;
        const std::size_t direct_levels = std::min<std::size_t>(n, 14);
        for (StateId q = 0; q < w.num_states(); ++q) {
            const auto& name = w.state_name(q);
            rec = rec && char_coeffs(w, q, 64) == f.at(name).expand(64);
            direct = direct && direct_sign_coefficients(static_cast<StateId>(name[0] - 'a'),
                                                        static_cast<LetterId>(name[1] - '0'),
                                                        static_cast<StateId>(name[2] - 'a'),
                                                        direct_levels) == f.at(name).expand(direct_levels);
        }
        t.row("64 coefficients (recursion)", rec);
        t.row("permutation signs, levels <= " + std::to_string(direct_levels), direct);
    }
    {
        bool ok = true;
        for (std::size_t k = 0; k <= n; ++k) ok = ok && lemma_transitive_check(k).holds;
        t.row("tau_1 transitive on reduced words", ok, "levels 0.." + std::to_string(n));
    }
    {
        const auto r = aleshin_relation_check(n);
        std::string pairing;
        for (StateId q = 0; q < r.pairing.size(); ++q)
            pairing += (q ? " " : "") + al.state_name(q) + "->" + b.state_name(r.pairing[q]);
        t.row("aleshin = swap o bellaterra", r.holds, r.holds ? pairing : r.detail);
    }
    return t.ok ? 0 : 1;
}

void add_verify(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("verify", "Run a self-check suite: bellaterra or preperiod");
    auto target = std::make_shared<std::string>();
    auto level = std::make_shared<std::size_t>(10);
    auto n = std::make_shared<std::size_t>(2000), adding = std::make_shared<std::size_t>(10000);
    auto csv = std::make_shared<std::string>();
    sub->add_option("target", *target, "bellaterra or preperiod")
        ->required()
        ->check(CLI::IsMember({"bellaterra", "preperiod"}));
    sub->add_option("--level", *level, "bellaterra: deepest level checked (<= 14)")
        ->check(CLI::Range(1, 14))
        ->capture_default_str();
    sub->add_option("--n", *n, "preperiod: largest n for alpha^-n")->check(CLI::Range(2, 10000))->capture_default_str();
    sub->add_option("--adding", *adding, "preperiod: largest n for the adding machine")->capture_default_str();
    sub->add_option("--csv", *csv, "preperiod: write `n h` rows");
    ctx.actions[sub] = [&ctx, target, level, n, adding, csv] {
        if (*target == "bellaterra") return verify_bellaterra(*level);
        const auto g = preperiod_growth(*n, *adding);
        CheckTable t;
        std::ostringstream slope;
        slope << std::setprecision(6) << g.slope << " (intercept " << g.intercept << ")";
        t.row("alpha preperiod slope in [0.57, 0.70]", g.slope >= 0.57 && g.slope <= 0.70, slope.str());
        t.row("adding machine h <= log2(n+1) + 2", g.adding_logarithmic, "n <= " + std::to_string(*adding));
        if (!csv->empty()) {
            std::ostringstream out;
            for (std::size_t i = 1; i < g.alpha_h.size(); ++i) out << i << ' ' << g.alpha_h[i] << '\n';
            write_output(*csv, out.str(), ctx.manifest);
        }
        return t.ok ? 0 : 1;
    };
}

void add_growth(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("growth", "Ball sizes around x^L in the Schreier graph on words of length L");
    auto src = std::make_shared<Source>();
    auto letter = std::make_shared<std::string>();
    auto cfg = std::make_shared<ExperimentConfig>();
    auto csv = std::make_shared<std::string>();
    add_source(sub, *src);
    sub->add_option("--letter", *letter, "Letter x (default: last letter)");
    sub->add_option("--radius", cfg->radius, "Largest radius")->capture_default_str();
    sub->add_option("--depth", cfg->depth, "Word length L")->capture_default_str();
    sub->add_option("--K", cfg->growth_k, "Reported comparison K r^alpha: K")->capture_default_str();
    sub->add_option("--alpha", cfg->growth_alpha, "Reported comparison K r^alpha: alpha")->capture_default_str();
    sub->add_option("--csv", *csv, "Output CSV radius,ball_size,bound (default: stdout)");
    ctx.actions[sub] = [&ctx, src, letter, cfg, csv] {
        const Automaton m = load(*src);
        const LetterId x = parse_letter(m, *letter);
        std::ostringstream out;
        out << "radius,ball_size,bound\n";
        for (std::size_t r = 0; r <= cfg->radius; ++r)
            out << r << ',' << ball_size(m, x, r, cfg->depth) << ','
                << cfg->growth_k * std::pow(static_cast<double>(std::max<std::size_t>(r, 1)), cfg->growth_alpha)
                << '\n';
        emit(ctx, *csv, out.str());
        return 0;
    };
}

void add_steer(CLI::App& app, Context& ctx) {
    auto* sub = app.add_subcommand("steer", "Find a group word moving a letter word to x^n");
    auto src = std::make_shared<Source>();
    auto letter = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    add_source(sub, *src);
    sub->add_option("--letter", *letter, "Target letter x (default: last letter)");
    sub->add_option("--input", *input, "Letter word s")->required();
    ctx.actions[sub] = [src, letter, input] {
        const Automaton m = load(*src);
        const LetterId x = parse_letter(m, *letter);
        const LetterWord s = parse_letters(m, *input);
        const GroupWord w = steer_to(m, x, s);
        const bool ok = act(m, w, s) == LetterWord::repeat(x, s.size());
        std::cout << "word: " << (w.empty() ? std::string("(identity)") : format(m, w)) << "\nlength: " << w.size()
                  << "\nimage: " << format(m, act(m, w, s)) << "\ncheck: " << (ok ? "ok" : "FAILED") << '\n';
        return ok ? 0 : 1;
    };
}

} // namespace

void add_commands(CLI::App& app, Context& ctx) {
    add_info(app, ctx);
    add_act(app, ctx);
    add_schreier(app, ctx);
    add_diameter(app, ctx);
    add_gap(app, ctx);
    add_transitive(app, ctx);
    add_cotransitive(app, ctx);
    add_classify(app, ctx);
    add_verify(app, ctx);
    add_growth(app, ctx);
    add_steer(app, ctx);
    for (auto* sub : app.get_subcommands({})) {
        sub->add_option("--jobs", ctx.jobs, "Worker threads")->capture_default_str();
        sub->add_option("--seed", ctx.manifest.seed, "RNG seed for sampled steps")->capture_default_str();
    }
}

} // namespace mealy::cli
