// Microbenchmarks for the hot paths: group closure, basis enumeration,
// Schur evaluation, comultiplication and coset representatives.
#include "semisym/coalgebra.hpp"
#include "semisym/context.hpp"
#include "semisym/index.hpp"
#include "semisym/schur.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace semisym;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

ExactMatrix random_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> val(-9, 9);
    ExactMatrix a(n, n, kQ);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) a.entry(r, c) = RingElement::from_int(Int(val(rng)), kQ);
    return a;
}

void BM_group_closure_s6(benchmark::State& state) {
    Permutation swap = parse_permutation("(1 2)", 6);
    Permutation cycle = parse_permutation("(1 2 3 4 5 6)", 6);
    for (auto _ : state) {
        PermutationGroup s6 = PermutationGroup::closure(6, {swap, cycle});
        benchmark::DoNotOptimize(s6.order());
    }
}
BENCHMARK(BM_group_closure_s6);

void BM_basis_enumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        ContextPtr ctx = Context::builtin(BuiltinKind::symmetric, kQ, n, d);
        benchmark::DoNotOptimize(ctx->basis(d).size());
    }
}
BENCHMARK(BM_basis_enumeration)->Args({4, 5})->Args({3, 7});

void BM_schur_direct_s5(benchmark::State& state) {
    PermutationGroup s5 = PermutationGroup::symmetric(5);
    Character sgn = Character::sign(s5, kQ);
    ExactMatrix a = random_matrix(5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(schur_direct(a, s5, sgn));
}
BENCHMARK(BM_schur_direct_s5);

void BM_schur_laplace_s5(benchmark::State& state) {
    ContextPtr ctx = Context::builtin(BuiltinKind::exterior, kQ, 5, 5);
    ExactMatrix a = random_matrix(5, 11);
    std::vector<int> parts{2, 3};
    auto tuples = enum_J_composition(ctx->sequence(), 5, parts);
    for (auto _ : state)
        for (const auto& blocks : tuples)
            benchmark::DoNotOptimize(schur_laplace(a, *ctx, parts, blocks));
}
BENCHMARK(BM_schur_laplace_s5);

void BM_comultiplication(benchmark::State& state) {
    ContextPtr ctx = Context::builtin(BuiltinKind::symmetric, kQ, 3, 6);
    ChiVector x = ChiVector::basis_element(ctx, MultiIndex(3, {1, 1, 2, 2, 3, 3}));
    for (auto _ : state) benchmark::DoNotOptimize(comul(x, 3).terms().size());
}
BENCHMARK(BM_comultiplication);

void BM_composition_reps(benchmark::State& state) {
    CharacterSequence seq = CharacterSequence::builtin(BuiltinKind::exterior, kQ, 6);
    std::vector<int> parts{2, 2, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(composition_reps(seq, 6, parts).reps.size());
}
BENCHMARK(BM_composition_reps);

void BM_lagrange_check(benchmark::State& state) {
    PermutationGroup s4 = PermutationGroup::symmetric(4);
    Character triv = Character::trivial(s4, kQ);
    ExactMatrix a = random_matrix(4, 13);
    for (auto _ : state) benchmark::DoNotOptimize(lagrange_check(a, s4, triv).equal);
}
BENCHMARK(BM_lagrange_check);

}  // namespace

BENCHMARK_MAIN();
