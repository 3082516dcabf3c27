// Serial reference vs OpenMP kernels.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hexq/kernels.hpp"
#include "hexq/partitions.hpp"
#include "hexq/theta.hpp"

namespace {

using hexq::kernels::Word;

std::vector<mpz_class> random_coefficients(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    std::vector<mpz_class> out(n);
    for (auto& c : out) {
        c = dist(rng);
    }
    return out;
}

std::vector<Word> random_words(std::size_t bits, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word> out(hexq::kernels::words_for_bits(bits));
    for (auto& w : out) {
        w = rng();
    }
    if (bits % hexq::kernels::kWordBits != 0) {
        out.back() &= (Word{1} << (bits % hexq::kernels::kWordBits)) - 1;
    }
    return out;
}

template <bool Parallel>
void BM_Cauchy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_coefficients(n, 1);
    const auto b = random_coefficients(n, 2);
    std::vector<mpz_class> out(n);
    for (auto _ : state) {
        if constexpr (Parallel) {
            hexq::kernels::cauchy_product(a, b, out);
        } else {
            hexq::kernels::cauchy_product_serial(a, b, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_Clmul(benchmark::State& state) {
    const auto bits = static_cast<std::size_t>(state.range(0));
    const auto a = random_words(bits, 3);
    const auto b = random_words(bits, 4);
    std::vector<Word> out(a.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            hexq::kernels::clmul(a, b, bits, out);
        } else {
            hexq::kernels::clmul_serial(a, b, bits, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_XorShifted(benchmark::State& state) {
    const auto bits = static_cast<std::size_t>(state.range(0));
    const auto x = random_words(bits, 5);
    std::vector<Word> out(x.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            hexq::kernels::xor_shifted(x, 37, bits, out);
        } else {
            hexq::kernels::xor_shifted_serial(x, 37, bits, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_Regime3Parity(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hexq::regime3_sum_parity(2, order));
    }
}

void BM_Regime3BigInt(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hexq::regime3_sum(2, order));
    }
}

}  // namespace

BENCHMARK(BM_Cauchy<false>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cauchy<true>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Clmul<false>)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Clmul<true>)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_XorShifted<false>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_XorShifted<true>)->Arg(100000)->Arg(1000000)->UseRealTime();
BENCHMARK(BM_Regime3BigInt)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Regime3Parity)->Arg(2000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
