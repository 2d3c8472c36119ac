#include <benchmark/benchmark.h>

#include <random>

#include "symrep/certificate.hpp"
#include "symrep/foursquare.hpp"
#include "symrep/psatz.hpp"
#include "symrep/structured.hpp"
#include "symrep/verify.hpp"

using symrep::Int;
using symrep::IntMatrix;
using symrep::IntPoly;
using symrep::SymIntMatrix;

namespace {

IntMatrix random_symmetric(std::mt19937& rng, int n, int bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m.at(i, j) = dist(rng);
            m.at(j, i) = m.at(i, j);
        }
    return m;
}

const IntPoly kCubic{-1, -3, 0, 1};       // X^3 - 3X - 1
const IntPoly kQuartic{2, 0, -4, 0, 1};   // X^4 - 4X^2 + 2

void BM_charpoly_faddeev(benchmark::State& state) {
    std::mt19937 rng(7);
    IntMatrix m = random_symmetric(rng, static_cast<int>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(symrep::charpoly(m));
}
BENCHMARK(BM_charpoly_faddeev)->Arg(4)->Arg(8)->Arg(12);

void BM_charpoly_bareiss(benchmark::State& state) {
    std::mt19937 rng(7);
    IntMatrix m = random_symmetric(rng, static_cast<int>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(symrep::charpoly_bareiss(m));
}
BENCHMARK(BM_charpoly_bareiss)->Arg(4)->Arg(8)->Arg(12);

void BM_bezout_ffprime(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(symrep::bezout_ffprime(kQuartic));
}
BENCHMARK(BM_bezout_ffprime);

void BM_psatz_certify(benchmark::State& state) {
    SymIntMatrix b = symrep::bezout_ffprime(kCubic).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(symrep::certify(b));
}
BENCHMARK(BM_psatz_certify);

void BM_build_strict(benchmark::State& state) {
    const IntPoly& f = state.range(0) == 3 ? kCubic : kQuartic;
    for (auto _ : state) benchmark::DoNotOptimize(symrep::build_strict(f));
}
BENCHMARK(BM_build_strict)->Arg(3)->Arg(4);

void BM_verify(benchmark::State& state) {
    symrep::EigenCertificate cert = symrep::build_strict(kCubic);
    for (auto _ : state) benchmark::DoNotOptimize(symrep::verify_certificate(cert));
}
BENCHMARK(BM_verify);

void BM_foursquare(benchmark::State& state) {
    Int n = 1;
    n <<= static_cast<unsigned>(state.range(0));
    n += 7;
    for (auto _ : state) benchmark::DoNotOptimize(symrep::decompose(n));
}
BENCHMARK(BM_foursquare)->Arg(16)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
