// Microbenchmarks for the hot paths: the read transform, parity inversion,
// interleaving, clique assignment, counting, BCH coding and the set search.

#include <benchmark/benchmark.h>

#include <random>

#include "nanoread/bch.hpp"
#include "nanoread/clique_cover.hpp"
#include "nanoread/codec.hpp"
#include "nanoread/read_graph.hpp"
#include "nanoread/read_vector.hpp"

using namespace nanoread;

namespace {

BinaryWord random_word(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng() & 1;
    return BinaryWord(std::move(bits));
}

void BM_ReadTransform(benchmark::State& state) {
    const BinaryWord x = random_word(std::size_t(state.range(0)), 1);
    const int ell = int(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(read_vector(x, ell));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReadTransform)->Args({256, 2})->Args({4096, 2})->Args({4096, 5});

void BM_ParityRoundTrip(benchmark::State& state) {
    const int n = int(state.range(0));
    const BinaryWord x = random_word(std::size_t(n), 2);
    const ReadVector r = read_vector(x, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_parity(mod2_prefix(r, n), 3));
    }
}
BENCHMARK(BM_ParityRoundTrip)->Arg(256)->Arg(4096);

void BM_Interleave(benchmark::State& state) {
    const int n = int(state.range(0));
    const BinaryWord x = random_word(std::size_t(n), 3);
    const PermSpec spec{n, 3, 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_pi(x, spec));
    }
}
BENCHMARK(BM_Interleave)->Arg(240)->Arg(3840);

void BM_AssignClique(benchmark::State& state) {
    const CoverParams params{16, 2, 2, 2};
    const BinaryWord x = random_word(16, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assign_clique(x, params));
    }
}
BENCHMARK(BM_AssignClique);

void BM_CountFormula(benchmark::State& state) {
    const int m = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_cliques_formula(m, 4, 8));
    }
}
BENCHMARK(BM_CountFormula)->Arg(16)->Arg(256);

void BM_BchEncode(benchmark::State& state) {
    const BchCode code(int(state.range(0)), 2);
    const BinaryWord msg = random_word(code.dimension(), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(code.encode(msg));
    }
}
BENCHMARK(BM_BchEncode)->Arg(4)->Arg(8);

void BM_BchDecodeTwoErrors(benchmark::State& state) {
    const BchCode code(int(state.range(0)), 2);
    BinaryWord r = code.encode(random_word(code.dimension(), 6));
    r[1] ^= 1;
    r[code.length() / 2] ^= 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(code.decode(r));
    }
}
BENCHMARK(BM_BchDecodeTwoErrors)->Arg(4)->Arg(8);

void BM_SimulateBatch(benchmark::State& state) {
    const Codec codec(InnerCode::bch(4, 2), 2);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(codec, 1024, 2, ++seed, 1));
    }
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_SimulateBatch);

void BM_GraphBuild(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_read_graph(n, 2, 2));
    }
}
BENCHMARK(BM_GraphBuild)->Arg(8)->Arg(11);

void BM_GreedySet(benchmark::State& state) {
    const ReadGraph g = build_read_graph(int(state.range(0)), 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_independent_set(g));
    }
}
BENCHMARK(BM_GreedySet)->Arg(10)->Arg(12);

void BM_ExactSet(benchmark::State& state) {
    const ReadGraph g = build_read_graph(int(state.range(0)), 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_independent_set(g));
    }
}
BENCHMARK(BM_ExactSet)->Arg(6)->Arg(7);

void BM_VerifyCover(benchmark::State& state) {
    const CoverParams params{int(state.range(0)), 2, 2, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_cover(params, 1));
    }
}
BENCHMARK(BM_VerifyCover)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
