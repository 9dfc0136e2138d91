/*
   Copyright 2026 The ncred Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "ncred/dvr.hpp"
#include "ncred/gwa.hpp"
#include "ncred/presentations.hpp"
#include "ncred/reduction.hpp"

using namespace ncred;

namespace {

Presentation quantum_plane(int q, Mode mode) {
    const auto a = make_alphabet({"x", "y"});
    const Field f = Field::rationals();
    return Presentation(a, f,
                        {NcPolynomial::monomial(a, f, {0, 1}) - NcPolynomial::monomial(a, f, {1, 0}, q)}, mode);
}

Presentation weyl() {
    const auto a = make_alphabet({"x", "y"});
    const Field f = Field::rationals();
    return Presentation(a, f,
                        {NcPolynomial::monomial(a, f, {0, 1}) - NcPolynomial::monomial(a, f, {1, 0}) -
                         NcPolynomial::monomial(a, f, {})},
                        Mode::filtered);
}

}  // namespace

static void BM_HilbertDims(benchmark::State& state) {
    const auto p = quantum_plane(3, Mode::graded);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_dims(p, n));
}
BENCHMARK(BM_HilbertDims)->DenseRange(6, 12, 2);

static void BM_FilteredDimsWeyl(benchmark::State& state) {
    const auto p = weyl();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(filtered_dims(p, n));
}
BENCHMARK(BM_FilteredDimsWeyl)->DenseRange(4, 10, 2);

static void BM_ReesDims(benchmark::State& state) {
    const auto r = rees_presentation(weyl());
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_dims(r, n));
}
BENCHMARK(BM_ReesDims)->DenseRange(4, 8, 2);

static void BM_GoodReductionReport(benchmark::State& state) {
    const auto p = quantum_plane(3, Mode::graded);
    const ValuationSpec v(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(good_reduction_report(p, v, 8));
}
BENCHMARK(BM_GoodReductionReport)->Arg(2)->Arg(5)->Arg(7);

static void BM_PLocalSmith(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> c(-50, 50);
    linalg::SparseMatrix m{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        linalg::RationalRow row;
        for (std::size_t j = 0; j < n; ++j) row.emplace_back(j, Rational(c(rng)));
        m.rows.push_back(linalg::canonical_row(std::move(row)));
    }
    const ValuationSpec v(3);
    for (auto _ : state) benchmark::DoNotOptimize(p_local_smith(m, v));
}
BENCHMARK(BM_PLocalSmith)->RangeMultiplier(2)->Range(8, 64);

static void BM_Obs21Weyl(benchmark::State& state) {
    const auto p = weyl();
    const ValuationSpec v(5);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(obs21_check(p, v, n, 2));
}
BENCHMARK(BM_Obs21Weyl)->DenseRange(2, 5);

static void BM_GwaMultiply(benchmark::State& state) {
    const auto d = gwa_catalog("usl2");
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> c(-9, 9);
    auto element = [&] {
        GwaElement e;
        for (int i = -3; i <= 3; ++i) {
            std::vector<Rational> cs(static_cast<std::size_t>(state.range(0)) + 1);
            for (auto& x : cs) x = c(rng);
            e.add(i, UniPoly(cs, Field::rationals()));
        }
        return e;
    };
    const auto u = element(), w = element();
    for (auto _ : state) benchmark::DoNotOptimize(gwa_multiply(u, w, d));
}
BENCHMARK(BM_GwaMultiply)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
