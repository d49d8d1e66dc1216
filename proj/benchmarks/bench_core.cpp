// Microbenchmarks for the hot paths: exact series products, echelon
// insertion, symbol-space construction, the Hecke action, and the
// closed-form cone summation.

#include <benchmark/benchmark.h>

#include <toric/eisenstein.hpp>
#include <toric/linalg.hpp>
#include <toric/manin.hpp>
#include <toric/residue_poly.hpp>
#include <toric/verify.hpp>

#include <random>
#include <vector>

namespace {

void BM_SeriesMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const toric::QSeries f = toric::tilde_s(5, 1, 1, order);
  const toric::QSeries g = toric::tilde_s(5, 2, 2, order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_SeriesMultiply)->Arg(50)->Arg(200);

void BM_EchelonInsert(benchmark::State& state) {
  const std::size_t dim = 100;
  std::mt19937 rng(1);
  std::vector<std::vector<toric::Rational>> rows;
  for (int i = 0; i < 60; ++i) {
    std::vector<toric::Rational> row(dim);
    for (auto& c : row) {
      c = (rng() % 4 == 0) ? toric::Rational(static_cast<long>(rng() % 19) - 9)
                           : toric::Rational(0);
    }
    rows.push_back(std::move(row));
  }
  for (auto _ : state) {
    toric::EchelonBasis basis(dim);
    for (const auto& row : rows) basis.insert(row);
    benchmark::DoNotOptimize(basis.rank());
  }
}
BENCHMARK(BM_EchelonInsert);

void BM_SymbolSpaceBuild(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    toric::SymbolSpace space(l, 3);
    benchmark::DoNotOptimize(space.quotient_dim());
  }
}
BENCHMARK(BM_SymbolSpaceBuild)->Arg(5)->Arg(7);

void BM_HeckeOnSymbols(benchmark::State& state) {
  const toric::SymbolSpace space(5, 3);
  const auto vectors = toric::random_symbol_vectors(space, 1, 7u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(toric::hecke_tn(vectors[0], 2).reduced());
  }
}
BENCHMARK(BM_HeckeOnSymbols);

void BM_NewformOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(toric::newform_oracle(7, 3, 60));
  }
}
BENCHMARK(BM_NewformOracle);

void BM_ConeSumClosedForm(benchmark::State& state) {
  const toric::ModLPoly2 weight = toric::a_weight_function(5, 1, 2, 2, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(toric::cone_sum(weight, 3));
  }
}
BENCHMARK(BM_ConeSumClosedForm);

void BM_PairSpanRank(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(toric::pair_span_report(5, 3, 20).rank);
  }
}
BENCHMARK(BM_PairSpanRank);

}  // namespace

BENCHMARK_MAIN();
