#include <benchmark/benchmark.h>

#include "mealy/builtins.hpp"
#include "mealy/classify.hpp"
#include "mealy/levels.hpp"
#include "mealy/schreier.hpp"
#include "mealy/spectral.hpp"
#include "mealy/transitivity.hpp"
#include "mealy/verify.hpp"

using namespace mealy;

static void bm_level_maps(benchmark::State& state) {
    const Automaton m = bellaterra();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(level_maps(m, n));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(bm_level_maps)->DenseRange(10, 20, 5);

static void bm_exact_diameter(benchmark::State& state) {
    const auto g = SchreierGraph::build(aleshin(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(diameter(g, DiameterMode::exact));
}
BENCHMARK(bm_exact_diameter)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void bm_bound_diameter(benchmark::State& state) {
    const auto g = SchreierGraph::build(bellaterra(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(diameter(g, DiameterMode::bound));
}
BENCHMARK(bm_bound_diameter)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void bm_dense_spectrum(benchmark::State& state) {
    const auto g = SchreierGraph::build(aleshin(), static_cast<std::size_t>(state.range(0)));
    SpectrumOptions opts;
    opts.mode = SolverMode::dense;
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(g, opts));
}
BENCHMARK(bm_dense_spectrum)->DenseRange(7, 10, 1)->Unit(benchmark::kMillisecond);

static void bm_iterative_spectrum(benchmark::State& state) {
    const auto g = SchreierGraph::build(aleshin(), static_cast<std::size_t>(state.range(0)));
    SpectrumOptions opts;
    opts.mode = SolverMode::iterative;
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(g, opts));
}
BENCHMARK(bm_iterative_spectrum)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void bm_char_coeffs(benchmark::State& state) {
    const Automaton m = affine(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(char_coeffs(m, 1, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(bm_char_coeffs)->Arg(64)->Arg(1024);

static void bm_char_rational(benchmark::State& state) {
    const Automaton m = wreath_automaton();
    for (auto _ : state) benchmark::DoNotOptimize(char_rational(m, 0));
}
BENCHMARK(bm_char_rational);

static void bm_canonical_form(benchmark::State& state) {
    const Automaton m = bireversible52();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m));
}
BENCHMARK(bm_canonical_form);

static void bm_census(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_cotransitive(static_cast<std::size_t>(state.range(0)), 2));
}
BENCHMARK(bm_census)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void bm_lemma_orbit(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lemma_transitive_check(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(bm_lemma_orbit)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void bm_steer(benchmark::State& state) {
    const Automaton m = bellaterra();
    Steerer steerer(m, 1);
    LetterWord s;
    for (std::int64_t i = 0; i < state.range(0); ++i) s.letters.push_back(static_cast<LetterId>((i * 7 + i / 3) % 2));
    for (auto _ : state) benchmark::DoNotOptimize(steerer.steer(s));
}
BENCHMARK(bm_steer)->Arg(10)->Arg(14);
BENCHMARK_MAIN();
