#include <benchmark/benchmark.h>

#include "farey/cark.hpp"
#include "farey/congruence.hpp"
#include "farey/quadform.hpp"
#include "farey/ribbon_graph.hpp"
#include "farey/word.hpp"

using namespace farey;

namespace {

void BM_reduce_big_coefficients(benchmark::State& state) {
    // Inflate a small form by a hyperbolic power so the coefficients grow
    // exponentially with the argument.
    QuadForm f{1, 1, -1};
    Mat m = word_to_matrix(power(parse_word("LSLLS"), static_cast<int>(state.range(0))));
    QuadForm big = act(m, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(big));
    }
}
BENCHMARK(BM_reduce_big_coefficients)->Arg(16)->Arg(64)->Arg(256);

void BM_class_number(benchmark::State& state) {
    Int disc = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(class_number(disc));
    }
}
BENCHMARK(BM_class_number)->Arg(401)->Arg(39769)->Arg(1000001);

void BM_pell(benchmark::State& state) {
    Int disc = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pell_fundamental(disc));
    }
}
BENCHMARK(BM_pell)->Arg(1684)->Arg(99989)->Arg(10000049);

void BM_congruence_graph(benchmark::State& state) {
    CongruenceSpec spec{Family::Gamma0, state.range(0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(passport(congruence_graph(spec)));
    }
}
BENCHMARK(BM_congruence_graph)->Arg(11)->Arg(60)->Arg(210);

void BM_fold(benchmark::State& state) {
    Word w = power(parse_word("LSLLS"), static_cast<int>(state.range(0)));
    std::vector<Word> gens{w, conjugated(parse_word("SL"), w)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fold_subgroup_graph(gens));
    }
}
BENCHMARK(BM_fold)->Arg(4)->Arg(16)->Arg(64);

void BM_matrix_to_word(benchmark::State& state) {
    Word w = power(parse_word("LLSLS"), static_cast<int>(state.range(0)));
    Mat m = word_to_matrix(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_to_word(m));
    }
}
BENCHMARK(BM_matrix_to_word)->Arg(8)->Arg(64)->Arg(256);

} // namespace

BENCHMARK_MAIN();
